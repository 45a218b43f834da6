#pragma once

#include <optional>

#include "napoleon/frame.hpp"
#include "napoleon/types.hpp"

namespace napoleon {

// Tolerance on the cosine when testing an internal angle against 120 degrees.
inline constexpr double kWideAngleCosTol = 1e-12;

// Index of the vertex whose internal angle is at least 120 degrees (cosine
// <= -1/2 + tol), if any; at most one can exist. Vertices on a zero-length
// edge are skipped (such triples are collinear and handled upstream).
std::optional<int> wide_angle_vertex(const Triple& x,
                                     double tol = kWideAngleCosTol);

// Point minimizing the sum of distances to the three vertices. Collinear
// input returns the middle vertex; a vertex with internal angle >= 120
// degrees is itself the minimizer; otherwise the three lines joining each
// vertex to the opposite outer-erected apex meet there, and the point is
// found by intersecting two of them in the plane frame. Throws TrivialTriple.
Point fermat_point(const Triple& x, double tol = kCollinearTol);

}  // namespace napoleon
