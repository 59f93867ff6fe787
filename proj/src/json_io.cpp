#include "latrep/json_io.hpp"

#include <fstream>
#include <sstream>

namespace latrep {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw error("BadInput", where + ": " + what);
}

std::vector<std::string> string_array(const ordered_json& j,
                                      const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) bad(where, "expected an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

const ordered_json& field(const ordered_json& j, const std::string& key,
                          const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(where, "missing \"" + key + "\"");
    return *it;
}

}  // namespace

lattice_input parse_lattice(const ordered_json& j) {
    lattice_input in;
    in.elements = string_array(field(j, "elements", "lattice"), "lattice.elements");
    const ordered_json& covers = field(j, "covers", "lattice");
    if (!covers.is_array()) bad("lattice.covers", "expected an array of pairs");
    for (const auto& c : covers) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() ||
            !c[1].is_string())
            bad("lattice.covers", "each cover must be a pair of labels");
        in.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return in;
}

set_family parse_family(const ordered_json& j) {
    std::vector<std::string> ground =
        string_array(field(j, "ground", "family"), "family.ground");
    const ordered_json& members = field(j, "members", "family");
    if (!members.is_array()) bad("family.members", "expected an array of arrays");
    std::vector<std::vector<std::string>> lists;
    for (const auto& m : members)
        lists.push_back(string_array(m, "family.members"));
    return make_family(ground, lists);
}

std::vector<std::string> parse_members(const ordered_json& j) {
    return string_array(field(j, "members", "filter"), "filter.members");
}

std::vector<std::string> parse_order(const ordered_json& j) {
    return string_array(field(j, "order", "order"), "order.order");
}

interval_representation parse_representation(const ordered_json& j,
                                             const finite_lattice& L) {
    interval_representation R;
    const ordered_json& points = field(j, "points", "representation");
    if (!points.is_array())
        bad("representation.points", "expected an array of label lists");
    for (const auto& p : points) {
        mask_t f = 0;
        for (const std::string& lbl : string_array(p, "representation.points"))
            f |= bit(L.index_of(lbl));
        R.points.push_back(f);
    }
    int npts = static_cast<int>(R.points.size());

    const ordered_json& image = field(j, "image", "representation");
    if (!image.is_object()) bad("representation.image", "expected an object");
    R.image.assign(L.n, 0);
    for (const auto& [key, val] : image.items()) {
        int e = L.index_of(key);
        if (!val.is_array())
            bad("representation.image", "expected arrays of point indices");
        for (const auto& p : val) {
            if (!p.is_number_integer())
                bad("representation.image", "expected point indices");
            int idx = p.get<int>();
            if (idx < 0 || idx >= npts)
                bad("representation.image", "point index out of range");
            R.image[e] |= bit(idx);
        }
    }

    const ordered_json& go = field(j, "ground_order", "representation");
    if (!go.is_array())
        bad("representation.ground_order", "expected an array of point indices");
    for (const auto& p : go) {
        if (!p.is_number_integer())
            bad("representation.ground_order", "expected point indices");
        int idx = p.get<int>();
        if (idx < 0 || idx >= npts)
            bad("representation.ground_order", "point index out of range");
        R.ground_order.push_back(idx);
    }
    return R;
}

ordered_json parse_text(const std::string& text, const std::string& where) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad(where, e.what());
    }
}

ordered_json lattice_to_json(const finite_lattice& L) {
    ordered_json j;
    j["elements"] = L.labels;
    ordered_json covers = ordered_json::array();
    for (int b = 0; b < L.n; ++b)
        for (int a : mask_to_indices(L.down[b])) {
            if (a == b) continue;
            bool cover = true;
            for (int c : mask_to_indices(L.down[b]))
                if (c != a && c != b && has_bit(L.down[c], a)) cover = false;
            if (cover) covers.push_back({L.labels[a], L.labels[b]});
        }
    j["covers"] = covers;
    return j;
}

ordered_json family_to_json(const set_family& F) {
    ordered_json j;
    j["ground"] = F.ground;
    ordered_json members = ordered_json::array();
    for (mask_t m : F.members) {
        ordered_json one = ordered_json::array();
        for (int i : mask_to_indices(m)) one.push_back(F.ground[i]);
        members.push_back(one);
    }
    j["members"] = members;
    return j;
}

ordered_json members_to_json(const finite_lattice& L, mask_t members) {
    ordered_json j;
    ordered_json list = ordered_json::array();
    for (int i : mask_to_indices(members)) list.push_back(L.labels[i]);
    j["members"] = list;
    return j;
}

ordered_json order_to_json(const std::vector<std::string>& ground,
                           const linear_order& o) {
    ordered_json j;
    ordered_json list = ordered_json::array();
    for (int p : o.points) list.push_back(ground[p]);
    j["order"] = list;
    return j;
}

ordered_json stone_to_json(const finite_lattice& L,
                           const set_representation& S) {
    ordered_json j;
    ordered_json points = ordered_json::array();
    for (mask_t f : S.points) {
        ordered_json one = ordered_json::array();
        for (int i : mask_to_indices(f)) one.push_back(L.labels[i]);
        points.push_back(one);
    }
    j["points"] = points;
    ordered_json image;
    for (int e = 0; e < L.n; ++e) {
        ordered_json pts = ordered_json::array();
        for (int p : mask_to_indices(S.image[e])) pts.push_back(p);
        image[L.labels[e]] = pts;
    }
    j["image"] = image;
    return j;
}

ordered_json representation_to_json(const finite_lattice& L,
                                    const interval_representation& R) {
    set_representation S;
    S.points = R.points;
    S.image = R.image;
    ordered_json j = stone_to_json(L, S);
    j["ground_order"] = R.ground_order;
    j["faithful"] = R.faithful_checked;
    if (R.fallback_used) j["fallback_used"] = true;
    return j;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(const std::string& bytes) {
    static const char* hexd = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hexd[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ordered_json make_report(const std::string& command,
                         const std::vector<std::string>& input_paths,
                         ordered_json options) {
    ordered_json r;
    r["command"] = command;
    ordered_json inputs = ordered_json::array();
    for (const std::string& p : input_paths) {
        ordered_json one;
        one["path"] = p;
        one["digest"] = digest_hex(read_file(p));
        inputs.push_back(one);
    }
    r["inputs"] = inputs;
    r["options"] = std::move(options);
    r["verdicts"] = ordered_json::array();
    return r;
}

void add_verdict(ordered_json& report, const std::string& name, bool pass,
                 const std::string& detail) {
    ordered_json v;
    v["name"] = name;
    v["pass"] = pass;
    v["detail"] = detail;
    report["verdicts"].push_back(v);
}

bool report_passes(const ordered_json& report) {
    for (const auto& v : report["verdicts"])
        if (!v["pass"].get<bool>()) return false;
    return true;
}

}  // namespace latrep
