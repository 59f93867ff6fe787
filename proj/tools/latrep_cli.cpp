// Batch front door: parse inputs, run the pipelines, emit reports with
// verdicts. Exit code 0 exactly when every verdict passes; 2 on bad input.

#include <chrono>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "latrep/audit.hpp"
#include "latrep/filters.hpp"
#include "latrep/json_io.hpp"
#include "latrep/lattice.hpp"
#include "latrep/oracle.hpp"
#include "latrep/ordering.hpp"
#include "latrep/represent.hpp"
#include "latrep/set_family.hpp"
#include "latrep/stone.hpp"

namespace {

using latrep::ordered_json;

struct cli_options {
    std::string format = "json";
    std::string ws_direction = "upper";
    bool adjoin_bottom = false;
    int budget_points = 6;
    std::uint64_t seed = 0;
    bool timing = false;
};

ordered_json echo_options(const cli_options& opt) {
    ordered_json o;
    o["format"] = opt.format;
    o["ws-direction"] = opt.ws_direction;
    o["adjoin-bottom"] = opt.adjoin_bottom;
    o["budget-points"] = opt.budget_points;
    o["seed"] = opt.seed;
    return o;
}

latrep::finite_lattice load_lattice(const std::string& path,
                                    const cli_options& opt) {
    ordered_json j = latrep::parse_text(latrep::read_file(path), path);
    latrep::lattice_input in = latrep::parse_lattice(j);
    if (opt.adjoin_bottom) in = latrep::adjoin_bottom(in);
    return latrep::build_lattice(in);
}

latrep::set_family load_family(const std::string& path) {
    ordered_json j = latrep::parse_text(latrep::read_file(path), path);
    return latrep::parse_family(j);
}

std::string label_triple(const latrep::finite_lattice& L,
                         const std::tuple<int, int, int>& w) {
    auto [a, b, x] = w;
    return "(" + L.labels[a] + ", " + L.labels[b] + ", " + L.labels[x] + ")";
}

// --- command handlers ----------------------------------------------------

ordered_json run_check_loc(const std::string& path, const cli_options& opt) {
    ordered_json rep = latrep::make_report("check-loc", {path}, echo_options(opt));
    latrep::finite_lattice L = load_lattice(path, opt);
    latrep::loc_verdict v = latrep::is_loc_lattice(L);

    ordered_json result;
    result["loc"] = v.ok;
    if (v.ok) {
        latrep::add_verdict(rep, "loc", true, "all three local conditions hold");
    } else {
        latrep::add_verdict(rep, "loc", false,
                            "condition " + std::to_string(v.condition) +
                                " fails at " + label_triple(L, v.witness));
        result["condition"] = v.condition;
        auto [a, b, x] = v.witness;
        result["witness"] = {L.labels[a], L.labels[b], L.labels[x]};
    }
    latrep::interlock_verdict iv = latrep::is_interlocking(L);
    result["interlocking"] = iv.ok;
    rep["result"] = result;
    return rep;
}

ordered_json run_filters(const std::string& path, const cli_options& opt) {
    ordered_json rep = latrep::make_report("filters", {path}, echo_options(opt));
    latrep::finite_lattice L = load_lattice(path, opt);

    std::vector<latrep::mask_t> filters = latrep::enumerate_filters(L);
    std::vector<latrep::mask_t> ideals = latrep::enumerate_ideals(L);
    std::vector<latrep::mask_t> semi = latrep::semiprime_filters(L);

    ordered_json result;
    result["filter_count"] = filters.size();
    result["ideal_count"] = ideals.size();
    ordered_json semi_list = ordered_json::array();
    for (latrep::mask_t f : semi)
        semi_list.push_back(latrep::members_to_json(L, f)["members"]);
    result["semiprime"] = semi_list;

    latrep::separation_direction dir = opt.ws_direction == "lower"
                                           ? latrep::separation_direction::lower
                                           : latrep::separation_direction::upper;
    result["well_separated"] = latrep::is_well_separated(L, dir).ok;
    result["completely_separated"] = latrep::is_completely_separated(L).ok;
    result["totally_separated"] = latrep::is_totally_separated(L).ok;

    latrep::add_verdict(rep, "filters-enumerated", true,
                        std::to_string(filters.size()) + " filters, " +
                            std::to_string(semi.size()) + " semi-prime");
    rep["result"] = result;
    return rep;
}

ordered_json run_stone(const std::string& path, const cli_options& opt) {
    ordered_json rep = latrep::make_report("stone", {path}, echo_options(opt));
    latrep::finite_lattice L = load_lattice(path, opt);
    latrep::set_representation S = latrep::stone_map(L);
    latrep::representation_verdict v = latrep::verify_stone(L, S);

    std::string detail = v.ok ? "embedding, meet, join, and separation laws hold"
                              : v.failures.front();
    latrep::add_verdict(rep, "stone-valid", v.ok, detail);
    rep["result"] = latrep::stone_to_json(L, S);
    return rep;
}

ordered_json run_order(const std::string& path, const cli_options& opt) {
    ordered_json rep = latrep::make_report("order", {path}, echo_options(opt));
    latrep::set_family F = load_family(path);
    latrep::order_result res = latrep::build_consistent_order(F);

    ordered_json result;
    if (res.order) {
        latrep::consistency_verdict cv = latrep::is_consistent(F, *res.order);
        latrep::add_verdict(rep, "consistent-order", true, "constructed");
        latrep::add_verdict(rep, "order-consistent", cv.ok,
                            cv.ok ? "every member is convex" : "hole found");
        result = latrep::order_to_json(F.ground, *res.order);
        result["fallback_used"] = res.fallback_used;
        rep["result"] = result;
        return rep;
    }

    // The construction refuses families outside its hypotheses; answer the
    // existence question anyway by exhaustive search.
    std::optional<latrep::linear_order> found = latrep::brute_force_order(F);
    if (found) {
        latrep::consistency_verdict cv = latrep::is_consistent(F, *found);
        latrep::add_verdict(rep, "consistent-order", true,
                            "by exhaustive search (construction: " +
                                res.error_code + ": " + res.error_detail + ")");
        latrep::add_verdict(rep, "order-consistent", cv.ok,
                            cv.ok ? "every member is convex" : "hole found");
        result = latrep::order_to_json(F.ground, *found);
        result["via"] = "search";
        rep["result"] = result;
        return rep;
    }
    latrep::add_verdict(rep, "consistent-order", false, "no consistent order");
    result["error"] = res.error_code.empty() ? std::string("NoOrder")
                                             : res.error_code;
    result["detail"] = "no consistent order";
    rep["result"] = result;
    return rep;
}

ordered_json run_represent(const std::string& path, const cli_options& opt) {
    ordered_json rep = latrep::make_report("represent", {path}, echo_options(opt));
    latrep::finite_lattice L = load_lattice(path, opt);
    auto out = latrep::represent_intervals(L);

    if (std::holds_alternative<latrep::represent_failure>(out)) {
        const auto& f = std::get<latrep::represent_failure>(out);
        latrep::add_verdict(rep, "represented", false,
                            f.error_code + ": " + f.detail);
        ordered_json result;
        result["error"] = f.error_code;
        result["detail"] = f.detail;
        rep["result"] = result;
        return rep;
    }
    const auto& R = std::get<latrep::interval_representation>(out);
    latrep::representation_verdict v = latrep::verify_representation(L, R);
    latrep::add_verdict(rep, "represented", true,
                        R.faithful_checked ? "faithful" : "not faithful");
    latrep::add_verdict(rep, "verified", v.ok,
                        v.ok ? "all representation laws hold"
                             : v.failures.front());
    rep["result"] = latrep::representation_to_json(L, R);
    return rep;
}

ordered_json run_verify(const std::string& lattice_path,
                        const std::string& rep_path, const cli_options& opt) {
    ordered_json rep = latrep::make_report("verify", {lattice_path, rep_path},
                                           echo_options(opt));
    latrep::finite_lattice L = load_lattice(lattice_path, opt);
    ordered_json rj =
        latrep::parse_text(latrep::read_file(rep_path), rep_path);
    latrep::interval_representation R = latrep::parse_representation(rj, L);

    latrep::representation_verdict v = latrep::verify_representation(L, R);
    latrep::representation_verdict fv = latrep::verify_faithful(L, R);
    latrep::add_verdict(rep, "representation-valid", v.ok,
                        v.ok ? "all representation laws hold"
                             : v.failures.front());
    ordered_json result;
    result["valid"] = v.ok;
    result["faithful"] = fv.ok;
    if (!v.ok) result["failures"] = v.failures;
    rep["result"] = result;
    return rep;
}

ordered_json run_oracle(const std::string& path, const cli_options& opt) {
    ordered_json rep = latrep::make_report("oracle", {path}, echo_options(opt));
    ordered_json j = latrep::parse_text(latrep::read_file(path), path);
    ordered_json result;

    if (j.is_object() && j.contains("ground")) {
        latrep::set_family F = latrep::parse_family(j);
        std::optional<latrep::linear_order> found = latrep::brute_force_order(F);
        std::uint64_t count = latrep::count_consistent_orders(F);
        result["consistent_order_count"] = count;
        if (found) {
            result["order"] = latrep::order_to_json(F.ground, *found)["order"];
            latrep::add_verdict(rep, "order-exists", true,
                                std::to_string(count) + " consistent orders");
        } else {
            latrep::add_verdict(rep, "order-exists", false,
                                "no consistent order");
        }
        rep["result"] = result;
        return rep;
    }

    latrep::lattice_input in = latrep::parse_lattice(j);
    if (opt.adjoin_bottom) in = latrep::adjoin_bottom(in);
    latrep::finite_lattice L = latrep::build_lattice(in);

    auto search = [&](bool faithful) -> ordered_json {
        ordered_json found;
        found["representable"] = false;
        for (int k = 0; k <= opt.budget_points; ++k) {
            auto img = latrep::brute_force_representation(L, k, faithful);
            if (!img) continue;
            found["representable"] = true;
            found["points"] = k;
            ordered_json image;
            for (int e = 0; e < L.n; ++e) {
                ordered_json pts = ordered_json::array();
                for (int p : latrep::mask_to_indices((*img)[e]))
                    pts.push_back(p);
                image[L.labels[e]] = pts;
            }
            found["image"] = image;
            break;
        }
        return found;
    };
    result["plain"] = search(false);
    result["faithful"] = search(true);
    bool representable = result["plain"]["representable"].get<bool>();
    latrep::add_verdict(
        rep, "representable", representable,
        representable
            ? "with " + std::to_string(result["plain"]["points"].get<int>()) +
                  " points"
            : "not with <= " + std::to_string(opt.budget_points) + " points");
    rep["result"] = result;
    return rep;
}

ordered_json run_enumerate(int n, const cli_options& opt, std::ostream& os) {
    ordered_json rep =
        latrep::make_report("enumerate", {}, echo_options(opt));
    std::vector<latrep::finite_lattice> all = latrep::enumerate_lattices(n);
    if (opt.format == "json")
        for (const auto& L : all) os << latrep::lattice_to_json(L).dump() << "\n";
    ordered_json result;
    result["n"] = n;
    result["count"] = all.size();
    int loc = 0;
    for (const auto& L : all)
        if (latrep::is_loc_lattice(L).ok) ++loc;
    result["loc_count"] = loc;
    latrep::add_verdict(rep, "enumerated", true,
                        std::to_string(all.size()) + " lattices, " +
                            std::to_string(loc) + " loc");
    rep["result"] = result;
    return rep;
}

ordered_json run_audit(const std::vector<std::string>& paths,
                       const cli_options& opt) {
    ordered_json rep = latrep::make_report("audit", paths, echo_options(opt));
    ordered_json fams = ordered_json::array();
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;

    auto run_one = [&](const std::string& name, const latrep::set_family& F) {
        latrep::audit_report r = latrep::audit_family(F);
        checks += r.checks;
        failures += r.failures.size();
        ordered_json f;
        f["family"] = name;
        f["checks"] = r.checks;
        f["failures"] = ordered_json::array();
        for (const auto& x : r.failures) {
            ordered_json one;
            one["law"] = x.law;
            one["witness"] = x.witness;
            f["failures"].push_back(one);
        }
        fams.push_back(f);
    };

    if (!paths.empty()) {
        for (const std::string& p : paths) run_one(p, load_family(p));
    } else {
        for (int n = 1; n <= 5; ++n) {
            int idx = 0;
            for (const auto& L : latrep::enumerate_lattices(n)) {
                ++idx;
                if (!latrep::is_loc_lattice(L).ok) continue;
                latrep::set_family F = latrep::stone_family(L);
                if (!latrep::separation(F).separates) continue;
                run_one("corpus:n" + std::to_string(n) + ":" +
                            std::to_string(idx),
                        F);
            }
        }
        for (int i = 0; i < 50; ++i) {
            std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i);
            latrep::set_family F = latrep::random_separating_loc_family(6, seed);
            run_one("random:seed" + std::to_string(seed), F);
        }
    }

    latrep::add_verdict(rep, "audit-clean", failures == 0,
                        std::to_string(checks) + " checks, " +
                            std::to_string(failures) + " failures");
    ordered_json result;
    result["families"] = fams.size();
    result["checks"] = checks;
    result["failure_count"] = failures;
    result["details"] = fams;
    rep["result"] = result;
    return rep;
}

void print_report(const ordered_json& rep, const cli_options& opt) {
    if (opt.format == "text") {
        for (const auto& v : rep["verdicts"])
            std::cout << (v["pass"].get<bool>() ? "PASS" : "FAIL") << " "
                      << v["name"].get<std::string>() << ": "
                      << v["detail"].get<std::string>() << "\n";
        if (rep.contains("result"))
            std::cout << rep["result"].dump(2) << "\n";
        if (rep.contains("timing_ms"))
            std::cout << "timing_ms: " << rep["timing_ms"] << "\n";
    } else {
        std::cout << rep.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-lattice interval representations"};
    app.require_subcommand(1);
    cli_options opt;

    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--ws-direction", opt.ws_direction,
                   "Well-separated reading")
        ->check(CLI::IsMember({"lower", "upper"}))
        ->capture_default_str();
    app.add_flag("--adjoin-bottom", opt.adjoin_bottom,
                 "Add a fresh bottom element to lattice inputs");
    app.add_option("--budget-points", opt.budget_points,
                   "Point budget for oracle searches")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "Seed for generated corpora")
        ->capture_default_str();
    app.add_flag("--timing", opt.timing, "Record elapsed milliseconds");

    std::string lattice_path, family_path, rep_path, input_path;
    int enum_n = 5;
    std::vector<std::string> audit_paths;

    CLI::App* c_loc = app.add_subcommand("check-loc", "Local-structure check")->fallthrough();
    c_loc->add_option("lattice", lattice_path, "Lattice JSON")->required();
    CLI::App* c_fil = app.add_subcommand("filters", "Filters and semi-primeness")->fallthrough();
    c_fil->add_option("lattice", lattice_path, "Lattice JSON")->required();
    CLI::App* c_sto = app.add_subcommand("stone", "Set representation")->fallthrough();
    c_sto->add_option("lattice", lattice_path, "Lattice JSON")->required();
    CLI::App* c_ord = app.add_subcommand("order", "Member-convex linear order")->fallthrough();
    c_ord->add_option("family", family_path, "Family JSON")->required();
    CLI::App* c_rep = app.add_subcommand("represent", "Interval representation")->fallthrough();
    c_rep->add_option("lattice", lattice_path, "Lattice JSON")->required();
    CLI::App* c_ver = app.add_subcommand("verify", "Verify a representation")->fallthrough();
    c_ver->add_option("lattice", lattice_path, "Lattice JSON")->required();
    c_ver->add_option("representation", rep_path, "Representation JSON")
        ->required();
    CLI::App* c_ora = app.add_subcommand("oracle", "Exhaustive searches")->fallthrough();
    c_ora->add_option("input", input_path, "Lattice or family JSON")->required();
    CLI::App* c_enu = app.add_subcommand("enumerate", "All small lattices")->fallthrough();
    c_enu->add_option("n", enum_n, "Number of elements")->required();
    CLI::App* c_aud = app.add_subcommand("audit", "Structural law audits")->fallthrough();
    c_aud->add_option("families", audit_paths, "Family JSON files");

    CLI11_PARSE(app, argc, argv);

    try {
        auto t0 = std::chrono::steady_clock::now();
        ordered_json rep;
        if (c_loc->parsed()) rep = run_check_loc(lattice_path, opt);
        if (c_fil->parsed()) rep = run_filters(lattice_path, opt);
        if (c_sto->parsed()) rep = run_stone(lattice_path, opt);
        if (c_ord->parsed()) rep = run_order(family_path, opt);
        if (c_rep->parsed()) rep = run_represent(lattice_path, opt);
        if (c_ver->parsed()) rep = run_verify(lattice_path, rep_path, opt);
        if (c_ora->parsed()) rep = run_oracle(input_path, opt);
        if (c_enu->parsed()) rep = run_enumerate(enum_n, opt, std::cout);
        if (c_aud->parsed()) rep = run_audit(audit_paths, opt);

        if (opt.timing) {
            auto t1 = std::chrono::steady_clock::now();
            rep["timing_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                    .count();
        }
        print_report(rep, opt);
        return latrep::report_passes(rep) ? 0 : 1;
    } catch (const latrep::error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    }
}
