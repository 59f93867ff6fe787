// Acceptance harness: ten go/no-go checks over the whole engine, printed
// one line each. Exit status is the number of failing checks.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "helpers.hpp"
#include "latrep/audit.hpp"
#include "latrep/filters.hpp"
#include "latrep/json_io.hpp"
#include "latrep/lattice.hpp"
#include "latrep/oracle.hpp"
#include "latrep/ordering.hpp"
#include "latrep/represent.hpp"
#include "latrep/stone.hpp"

using namespace latrep;
using namespace latrep::testing;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

struct named_family {
    std::string name;
    set_family F;
};

// The differential corpus: Stone image families of the enumerated corpus
// (local, separating) plus 500 seeded random families.
std::vector<named_family> differential_corpus() {
    std::vector<named_family> out;
    for (int n = 1; n <= 6; ++n) {
        int idx = 0;
        for (const finite_lattice& L : enumerate_lattices(n)) {
            ++idx;
            if (!is_loc_lattice(L).ok) continue;
            set_family F = stone_family(L);
            if (!separation(F).separates) continue;
            out.push_back(
                {"corpus:n" + std::to_string(n) + ":" + std::to_string(idx),
                 std::move(F)});
        }
    }
    for (std::uint64_t seed = 0; seed < 500; ++seed)
        out.push_back({"random:seed" + std::to_string(seed),
                       random_separating_loc_family(6, seed)});
    return out;
}

struct differential_run {
    bool ok = true;
    int families = 0;
    int fallbacks = 0;
    std::string first_failure;
    std::string report_bytes;
};

differential_run run_differential() {
    differential_run R;
    ordered_json rep = ordered_json::object();
    rep["command"] = "differential";
    rep["families"] = ordered_json::array();
    for (const named_family& nf : differential_corpus()) {
        ++R.families;
        order_result r = build_consistent_order(nf.F);
        std::optional<linear_order> b = brute_force_order(nf.F);
        bool good = r.order.has_value() && is_consistent(nf.F, *r.order).ok &&
                    b.has_value() && is_consistent(nf.F, *b).ok;
        if (!good && R.ok) {
            R.ok = false;
            R.first_failure = nf.name;
        }
        if (r.fallback_used) ++R.fallbacks;
        ordered_json e = ordered_json::object();
        e["name"] = nf.name;
        e["points"] = nf.F.n;
        e["order"] = r.order ? r.order->points : std::vector<int>{};
        e["fallback"] = r.fallback_used;
        rep["families"].push_back(std::move(e));
    }
    rep["fallback_count"] = R.fallbacks;
    R.report_bytes = rep.dump();
    return R;
}

// Betweenness induced by a concrete arrangement, endpoints included.
ternary_fn arrangement_ternary(const std::vector<int>& arrangement) {
    auto pos = std::make_shared<std::vector<int>>(16, -1);
    for (std::size_t i = 0; i < arrangement.size(); ++i)
        (*pos)[arrangement[i]] = static_cast<int>(i);
    return [pos](int a, int b, int c) {
        int pa = (*pos)[a], pb = (*pos)[b], pc = (*pos)[c];
        return (pa <= pb && pb <= pc) || (pc <= pb && pb <= pa);
    };
}

void criterion_1_and_2() {
    auto t0 = clock_type::now();
    int represented = 0, faithful = 0;
    std::string bad1, bad2;
    for (int n = 1; n <= 6; ++n)
        for (const finite_lattice& L : enumerate_lattices(n)) {
            if (!is_loc_lattice(L).ok) continue;
            auto r = represent_intervals(L);
            if (!std::holds_alternative<interval_representation>(r)) {
                if (bad1.empty())
                    bad1 = "representation failed at size " + std::to_string(n);
                continue;
            }
            interval_representation R = std::get<interval_representation>(r);
            if (!verify_representation(L, R).ok) {
                if (bad1.empty())
                    bad1 = "verification failed at size " + std::to_string(n);
                continue;
            }
            ++represented;
            if (is_well_separated(L, separation_direction::upper).ok) {
                if (R.faithful_checked && verify_faithful(L, R).ok)
                    ++faithful;
                else if (bad2.empty())
                    bad2 = "hull law failed at size " + std::to_string(n);
            }
        }
    double el = seconds_since(t0);
    bool ok1 = bad1.empty() && el <= 60.0;
    report(1, ok1,
           ok1 ? std::to_string(represented) +
                     " local lattices of <=6 elements represented and "
                     "verified in " + secs(el)
               : (bad1.empty() ? "over the 60s budget: " + secs(el) : bad1));
    bool ok2 = bad2.empty();
    report(2, ok2,
           ok2 ? std::to_string(faithful) +
                     " well-separated local lattices passed the hull law"
               : bad2);
}

void criterion_3() {
    auto t0 = clock_type::now();
    int well = 0;
    std::string bad;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        sampled_lattice s = sample_interval_sublattice(7, seed);
        if (!is_well_separated(s.lattice, separation_direction::upper).ok)
            continue;
        ++well;
        if (!is_loc_lattice(s.lattice).ok && bad.empty())
            bad = "well-separated sample at seed " + std::to_string(seed) +
                  " is not local";
    }
    double el = seconds_since(t0);
    bool ok = bad.empty() && el <= 120.0;
    report(3, ok,
           ok ? std::to_string(well) +
                    " of 1000 interval samples well separated, all local, in " +
                    secs(el)
              : (bad.empty() ? "over the 120s budget: " + secs(el) : bad));
}

void criterion_4() {
    int checked = 0;
    std::string bad;
    for (int n = 1; n <= 6; ++n)
        for (const finite_lattice& L : enumerate_lattices(n)) {
            set_representation R = stone_map(L);
            if (!verify_stone(L, R).ok && bad.empty())
                bad = "representation laws failed at size " + std::to_string(n);
            ++checked;
        }
    report(4, bad.empty(),
           bad.empty() ? "representation laws hold on all " +
                             std::to_string(checked) + " lattices of <=6 elements"
                       : bad);
}

void criterion_5() {
    int pairs = 0;
    std::string bad;
    for (int n = 1; n <= 5; ++n)
        for (const finite_lattice& L : enumerate_lattices(n))
            for (mask_t F : enumerate_filters(L))
                for (mask_t I : enumerate_ideals(L)) {
                    if (F & I) continue;
                    ++pairs;
                    mask_t G = extend_disjoint_filter(L, F, I);
                    bool good = is_filter(L, G) && subset(F, G) &&
                                (G & I) == 0 && is_semi_prime(L, G).ok;
                    if (!good && bad.empty())
                        bad = "extension broke at size " + std::to_string(n);
                }
    report(5, bad.empty(),
           bad.empty() ? "all " + std::to_string(pairs) +
                             " disjoint filter/ideal pairs extend to "
                             "split filters"
                       : bad);
}

void criterion_6(const std::vector<named_family>& corpus) {
    std::string bad;
    int arrangements = 0;
    for (int n = 1; n <= 6 && bad.empty(); ++n) {
        std::vector<int> perm(n), points(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::iota(points.begin(), points.end(), 0);
        do {
            ++arrangements;
            auto r = realize_betweenness(points, arrangement_ternary(perm));
            std::vector<int> expected = perm;
            if (expected.front() > expected.back())
                std::reverse(expected.begin(), expected.end());
            if (!std::holds_alternative<linear_order>(r) ||
                std::get<linear_order>(r).points != expected) {
                bad = "round-trip failed on an arrangement of " +
                      std::to_string(n) + " points";
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    int totally = 0;
    for (const named_family& nf : corpus) {
        if (!bad.empty()) break;
        if (!is_loc_setfamily(nf.F).ok || !separation(nf.F).totally) continue;
        ++totally;
        std::uint64_t expect = nf.F.n >= 2 ? 2 : 1;
        if (count_consistent_orders(nf.F) != expect)
            bad = "order count off for " + nf.name;
    }
    report(6, bad.empty(),
           bad.empty() ? std::to_string(arrangements) +
                             " arrangements round-tripped; " +
                             std::to_string(totally) +
                             " totally separating families have exactly two "
                             "orders"
                       : bad);
}

struct determinism_outcome {
    bool ok = false;
    std::string detail;
};

determinism_outcome criterion_7_8() {
    auto t0 = clock_type::now();
    differential_run first = run_differential();
    double el = seconds_since(t0);
    bool ok7 = first.ok && el <= 300.0;
    report(7, ok7,
           ok7 ? "construction and oracle agree on " +
                     std::to_string(first.families) + " families (" +
                     std::to_string(first.fallbacks) + " fallbacks) in " +
                     secs(el)
               : (first.ok ? "over the 300s budget: " + secs(el)
                           : "disagreement on " + first.first_failure));

    std::uint64_t checks = 0;
    int bad_checks = 0;
    std::string first_law;
    for (const named_family& nf : differential_corpus()) {
        audit_report ar = audit_family(nf.F);
        checks += ar.checks;
        if (!ar.ok()) {
            bad_checks += static_cast<int>(ar.failures.size());
            if (first_law.empty())
                first_law = ar.failures.front().law + " on " + nf.name;
        }
    }
    report(8, bad_checks == 0,
           bad_checks == 0
               ? "member and betweenness laws hold: " +
                     std::to_string(checks) + " checks across the corpus"
               : std::to_string(bad_checks) + " law failures, first: " +
                     first_law);

    differential_run second = run_differential();
    determinism_outcome d;
    d.ok = first.report_bytes == second.report_bytes &&
           !first.report_bytes.empty();
    d.detail = d.ok ? "repeated differential runs serialize to identical " +
                          std::to_string(first.report_bytes.size()) + " bytes"
                    : "reports differ between identically seeded runs";
    return d;
}

void criterion_9() {
    std::string bad;

    finite_lattice M3 = load_lattice("M3");
    loc_verdict lv = is_loc_lattice(M3);
    auto [wa, wb, wx] = lv.witness;
    if (lv.ok || lv.condition != 2 || M3.labels[wa] != "a" ||
        M3.labels[wb] != "b" || M3.labels[wx] != "c")
        bad = "diamond local-check witness drifted";

    if (bad.empty()) {
        auto plain = brute_force_representation(M3, 3, false);
        std::vector<mask_t> expect{0, mask_of({0}), mask_of({1}), mask_of({2}),
                                   mask_of({0, 1, 2})};
        if (!plain || *plain != expect)
            bad = "diamond plain-representation pin drifted";
        for (int k = 1; k <= 6 && bad.empty(); ++k)
            if (brute_force_representation(M3, k, true))
                bad = "diamond unexpectedly hull-faithful on " +
                      std::to_string(k) + " points";
    }

    if (bad.empty()) {
        finite_lattice N5 = load_lattice("N5");
        if (!is_loc_lattice(N5).ok) bad = "pentagon stopped being local";
        set_representation S = stone_map(N5);
        if (bad.empty() && S.points.size() != 3)
            bad = "pentagon point space is not three points";
        auto r = represent_intervals(N5);
        if (bad.empty() &&
            !std::holds_alternative<interval_representation>(r))
            bad = "pentagon stopped being representable";
        if (bad.empty()) {
            interval_representation R = std::get<interval_representation>(r);
            bool pin = R.ground_order == std::vector<int>{2, 0, 1} &&
                       R.image[0] == 0 && R.image[1] == mask_of({2}) &&
                       R.image[2] == mask_of({1}) &&
                       R.image[3] == mask_of({0, 2}) &&
                       R.image[4] == mask_of({0, 1, 2}) &&
                       R.faithful_checked && verify_faithful(N5, R).ok;
            if (!pin) bad = "pentagon representation pin drifted";
        }
    }

    if (bad.empty() && count_consistent_orders(load_family("FAM-CHAIN")) < 2)
        bad = "chain family lost its two orders";
    if (bad.empty()) {
        set_family tri = load_family("FAM-TRIANGLE");
        if (brute_force_order(tri).has_value() ||
            build_consistent_order(tri).order.has_value())
            bad = "triangle family unexpectedly admits an order";
    }

    report(9, bad.empty(),
           bad.empty() ? "all fixture pins match exactly" : bad);
}

}  // namespace

int main() {
    std::vector<named_family> corpus = differential_corpus();
    criterion_1_and_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6(corpus);
    determinism_outcome d = criterion_7_8();
    criterion_9();
    report(10, d.ok, d.detail);
    std::printf("%s: %d of 10 criteria failed\n",
                failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                failures);
    return failures == 0 ? 0 : 1;
}
