#include "latrep/stone.hpp"

namespace latrep {

set_representation stone_map(const finite_lattice& L) {
    set_representation R;
    R.points = semiprime_space(L);
    R.image.assign(L.n, 0);
    for (size_t p = 0; p < R.points.size(); ++p)
        for (int x = 0; x < L.n; ++x)
            if (has_bit(R.points[p], x)) R.image[x] |= bit(static_cast<int>(p));

    representation_verdict v = verify_stone(L, R);
    if (!v.ok)
        throw error("InvariantViolation",
                    "set representation failed its own laws: " + v.failures.front());
    return R;
}

representation_verdict verify_stone(const finite_lattice& L,
                                    const set_representation& R) {
    representation_verdict v;
    auto fail = [&](const std::string& msg) {
        v.ok = false;
        v.failures.push_back(msg);
    };

    if (static_cast<int>(R.image.size()) != L.n) {
        fail("image has wrong arity");
        return v;
    }

    for (int a = 0; a < L.n; ++a)
        for (int b = 0; b < L.n; ++b)
            if (L.leq(a, b) != subset(R.image[a], R.image[b]))
                fail("embedding fails at (" + L.labels[a] + ", " + L.labels[b] + ")");

    if (R.image[L.bottom] != 0) fail("bottom has nonempty image");

    for (int a = 0; a < L.n; ++a)
        for (int b = a; b < L.n; ++b)
            if (R.image[L.meet_of(a, b)] != (R.image[a] & R.image[b]))
                fail("meet law fails at (" + L.labels[a] + ", " + L.labels[b] + ")");

    for (int a = 0; a < L.n; ++a) {
        for (int b = a; b < L.n; ++b) {
            mask_t join_image = 0;
            for (int x : mask_to_indices(internal_elements(L, a, b).closed))
                join_image |= R.image[x];
            if (R.image[L.join_of(a, b)] != join_image)
                fail("join law fails at (" + L.labels[a] + ", " + L.labels[b] + ")");
        }
    }

    int npts = static_cast<int>(R.points.size());
    for (int p = 0; p < npts; ++p) {
        for (int q = p + 1; q < npts; ++q) {
            bool separated = false;
            for (int x = 0; x < L.n && !separated; ++x)
                if (has_bit(R.image[x], p) != has_bit(R.image[x], q))
                    separated = true;
            if (!separated)
                fail("points " + std::to_string(p) + " and " + std::to_string(q) +
                     " are not separated");
        }
    }
    return v;
}

}  // namespace latrep
