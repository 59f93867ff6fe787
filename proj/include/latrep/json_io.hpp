#pragma once

// JSON parsing and serialization for every artifact the tools exchange.
// Field order in emitted documents is fixed (insertion order), so equal
// inputs always serialize to identical bytes.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "latrep/lattice.hpp"
#include "latrep/ordering.hpp"
#include "latrep/represent.hpp"
#include "latrep/set_family.hpp"
#include "latrep/stone.hpp"

namespace latrep {

using ordered_json = nlohmann::ordered_json;

// Parsers; all failures throw error("BadInput", <what and where>).
lattice_input parse_lattice(const ordered_json& j);
set_family parse_family(const ordered_json& j);
std::vector<std::string> parse_members(const ordered_json& j);  // {"members":[...]}
std::vector<std::string> parse_order(const ordered_json& j);    // {"order":[...]}
interval_representation parse_representation(const ordered_json& j,
                                             const finite_lattice& L);
ordered_json parse_text(const std::string& text, const std::string& where);

// Serializers.
ordered_json lattice_to_json(const finite_lattice& L);
ordered_json family_to_json(const set_family& F);
ordered_json members_to_json(const finite_lattice& L, mask_t members);
ordered_json order_to_json(const std::vector<std::string>& ground,
                           const linear_order& o);
ordered_json stone_to_json(const finite_lattice& L, const set_representation& S);
ordered_json representation_to_json(const finite_lattice& L,
                                    const interval_representation& R);

// Report scaffolding. Reports carry the command, each input's path and
// FNV-1a digest of its bytes, the effective options, then verdicts and a
// command-specific result.
std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_hex(const std::string& bytes);
std::string read_file(const std::string& path);  // throws BadInput

ordered_json make_report(const std::string& command,
                         const std::vector<std::string>& input_paths,
                         ordered_json options);
void add_verdict(ordered_json& report, const std::string& name, bool pass,
                 const std::string& detail);
bool report_passes(const ordered_json& report);

}  // namespace latrep
