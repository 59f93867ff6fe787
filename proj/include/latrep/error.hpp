#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace latrep {

// Every structured failure carries a stable machine-readable code alongside
// the human-readable message. Codes used across the library:
//   InvalidInput, CyclicCovers, NoBottom, NotALattice, SizeGuard,
//   Overlap, BudgetExceeded, InvariantViolation, BadInput
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace latrep
