#include "latrep/represent.hpp"

#include <algorithm>
#include <numeric>

namespace latrep {

namespace {

std::vector<int> image_positions(const interval_representation& R, mask_t pts) {
    std::vector<int> pos;
    for (int i = 0; i < static_cast<int>(R.ground_order.size()); ++i)
        if (has_bit(pts, R.ground_order[i])) pos.push_back(i);
    return pos;
}

}  // namespace

mask_t order_hull(const interval_representation& R, mask_t pts) {
    std::vector<int> pos = image_positions(R, pts);
    if (pos.empty()) return 0;
    mask_t hull = 0;
    for (int i = pos.front(); i <= pos.back(); ++i)
        hull |= bit(R.ground_order[i]);
    return hull;
}

set_family stone_family(const finite_lattice& L) {
    set_representation S = stone_map(L);
    std::vector<std::string> ground;
    for (size_t i = 0; i < S.points.size(); ++i)
        ground.push_back("F" + std::to_string(i));
    return make_family_masks(ground, S.image);
}

std::variant<interval_representation, represent_failure> represent_intervals(
    const finite_lattice& L) {
    loc_verdict loc = is_loc_lattice(L);
    if (!loc.ok) {
        auto [a, b, x] = loc.witness;
        return represent_failure{
            "NotLoc", "local condition " + std::to_string(loc.condition) +
                          " fails at (" + L.labels[a] + ", " + L.labels[b] +
                          ", " + L.labels[x] + ")"};
    }

    set_representation S = stone_map(L);
    int npts = static_cast<int>(S.points.size());

    // The point space as a set family: ground point i = i-th filter,
    // members = element images.
    std::vector<std::string> ground;
    for (int i = 0; i < npts; ++i) ground.push_back("F" + std::to_string(i));
    set_family F = make_family_masks(ground, S.image);

    order_result ord = build_consistent_order(F);
    if (!ord.order)
        return represent_failure{"NoOrder",
                                 ord.error_code.empty()
                                     ? "no member-convex order of the point space"
                                     : ord.error_code + ": " + ord.error_detail};

    interval_representation R;
    R.points = S.points;
    R.image = S.image;
    R.ground_order = ord.order->points;
    R.fallback_used = ord.fallback_used;
    R.faithful_checked = verify_faithful(L, R).ok;

    // A member-convex order need not realize every join as a hull: with
    // nested point memberships several convex layouts exist and only some
    // satisfy the hull law. When the constructed order misses it, look for
    // one that does (hull law for the pair (a,a) already forces convexity,
    // so it is the whole predicate). First hit in ascending lexicographic
    // order keeps the result deterministic; the bound keeps it cheap.
    if (!R.faithful_checked && npts >= 2 && npts <= 8) {
        std::vector<int> perm(npts);
        std::iota(perm.begin(), perm.end(), 0);
        interval_representation cand = R;
        do {
            cand.ground_order = perm;
            if (verify_faithful(L, cand).ok) {
                cand.fallback_used = true;
                cand.faithful_checked = true;
                return cand;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return R;
}

representation_verdict verify_representation(const finite_lattice& L,
                                             const interval_representation& R) {
    set_representation S{R.points, R.image};
    representation_verdict v = verify_stone(L, S);

    int npts = static_cast<int>(R.points.size());
    std::vector<int> sorted = R.ground_order;
    std::sort(sorted.begin(), sorted.end());
    bool perm = static_cast<int>(sorted.size()) == npts;
    for (int i = 0; i < static_cast<int>(sorted.size()) && perm; ++i)
        if (sorted[i] != i) perm = false;
    if (!perm) {
        v.ok = false;
        v.failures.push_back("ground order is not a permutation of the points");
        return v;
    }

    for (int x = 0; x < L.n; ++x) {
        std::vector<int> pos = image_positions(R, R.image[x]);
        for (size_t i = 1; i < pos.size(); ++i)
            if (pos[i] != pos[i - 1] + 1) {
                v.ok = false;
                v.failures.push_back("image of " + L.labels[x] +
                                     " is not order-convex");
                break;
            }
    }
    return v;
}

representation_verdict verify_faithful(const finite_lattice& L,
                                       const interval_representation& R) {
    representation_verdict v;
    for (int a = 0; a < L.n; ++a)
        for (int b = a; b < L.n; ++b)
            if (R.image[L.join_of(a, b)] !=
                order_hull(R, R.image[a] | R.image[b])) {
                v.ok = false;
                v.failures.push_back("join of " + L.labels[a] + " and " +
                                     L.labels[b] + " is not the hull");
            }
    return v;
}

bool open_interval_form(const interval_representation& R, int element) {
    int npts = static_cast<int>(R.ground_order.size());
    std::vector<int> pos = image_positions(R, R.image[element]);
    if (pos.empty()) return true;  // empty = (u, ->) past the last point
    for (size_t i = 1; i < pos.size(); ++i)
        if (pos[i] != pos[i - 1] + 1) return false;
    int lo = pos.front(), hi = pos.back();
    if (lo == 0 && hi == npts - 1) return true;  // the whole space
    if (lo == 0) return hi <= npts - 2;          // (<-, v)
    if (hi == npts - 1) return lo >= 1;          // (u, ->)
    return true;                                 // (u, v)
}

}  // namespace latrep
