#pragma once

#include <string>
#include <vector>

#include "latrep/filters.hpp"
#include "latrep/lattice.hpp"

namespace latrep {

// Set representation over the semi-prime filter space: point i is the i-th
// filter of semiprime_space(L), and each element maps to the set of points
// containing it. image[x] is a mask over point indices.
struct set_representation {
    std::vector<mask_t> points;  // filters, as element masks
    std::vector<mask_t> image;   // per element, as point masks
};

// Builds the representation and verifies its laws before returning
// (InvariantViolation if any law fails, which would indicate a bug).
set_representation stone_map(const finite_lattice& L);

// Law-by-law verification of a representation against its lattice:
//   embedding     a <= b  iff  image(a) is a subset of image(b)
//   bottom        image(bottom) = empty
//   meets         image(a ^ b) = image(a) & image(b)
//   joins         image(a v b) = union of images over the closed internal
//                 set of (a,b)
//   separation    distinct points are separated by some element's image
struct representation_verdict {
    bool ok = true;
    std::vector<std::string> failures;
};

representation_verdict verify_stone(const finite_lattice& L,
                                    const set_representation& R);

}  // namespace latrep
