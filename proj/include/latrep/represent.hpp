#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latrep/lattice.hpp"
#include "latrep/ordering.hpp"
#include "latrep/stone.hpp"

namespace latrep {

// A set representation whose point space carries a linear order making every
// element's image order-convex (an interval). ground_order is a permutation
// of point indices; image masks index points, not positions.
struct interval_representation {
    std::vector<mask_t> points;      // semi-prime filters, as element masks
    std::vector<int> ground_order;   // point indices in chain order
    std::vector<mask_t> image;       // per element, point masks
    bool faithful_checked = false;   // joins verified to be hulls
    bool fallback_used = false;      // order came from the exhaustive search
};

struct represent_failure {
    std::string error_code;  // "NotLoc" or "NoOrder"
    std::string detail;
};

// Full pipeline: local-structure check, set representation over the
// semi-prime filter space, then a member-convex linear order of that space.
// faithful_checked is set exactly when the hull law holds for all joins.
// When the constructed order is member-convex but misses the hull law, a
// bounded deterministic search tries the other orders of the point space
// and adopts the first one satisfying it (flagged via fallback_used).
std::variant<interval_representation, represent_failure> represent_intervals(
    const finite_lattice& L);

// The Stone point space as a set family: ground point i is the i-th filter
// of the space, labeled "F<i>"; the members are the element images.
set_family stone_family(const finite_lattice& L);

// Verifies representation laws plus order-convexity of every image.
representation_verdict verify_representation(const finite_lattice& L,
                                             const interval_representation& R);

// Verifies the hull law: image(a v b) is the order-convex hull of
// image(a) united with image(b), for every pair.
representation_verdict verify_faithful(const finite_lattice& L,
                                       const interval_representation& R);

// Convex hull of a point set in the representation's chain order.
mask_t order_hull(const interval_representation& R, mask_t pts);

// Whether an element's image has an open-interval shape in the chain:
// the whole space, (u, v), (u, ->) or (<-, v) for points u, v.
bool open_interval_form(const interval_representation& R, int element);

}  // namespace latrep
