#pragma once

// Shared fixture loading for the test suites. FIXTURES_DIR is provided by
// the build as the absolute path of the fixtures directory.

#include <string>
#include <vector>

#include "latrep/error.hpp"
#include "latrep/json_io.hpp"
#include "latrep/lattice.hpp"
#include "latrep/set_family.hpp"

namespace latrep::testing {

// Runs fn and returns the structured code of the latrep::error it throws,
// or "" when it does not throw one. Lets assertions pin the machine-readable
// code rather than the human-facing message text.
template <typename Fn>
std::string thrown_code(Fn&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    } catch (...) {
    }
    return {};
}

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name + ".json";
}

inline lattice_input load_lattice_input(const std::string& name) {
    const std::string text = read_file(fixture_path(name));
    return parse_lattice(parse_text(text, name));
}

inline finite_lattice load_lattice(const std::string& name) {
    return build_lattice(load_lattice_input(name));
}

inline set_family load_family(const std::string& name) {
    const std::string text = read_file(fixture_path(name));
    return parse_family(parse_text(text, name));
}

inline std::vector<int> mask_bits(mask_t m) {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if (has_bit(m, i)) out.push_back(i);
    return out;
}

inline mask_t mask_of(const std::vector<int>& bits) {
    mask_t m = 0;
    for (int b : bits) m |= bit(b);
    return m;
}

}  // namespace latrep::testing
