#pragma once

#include <Eigen/Core>

#include "napoleon/types.hpp"

namespace napoleon {

// Relative tolerance for the collinearity test (perpendicular spread of the
// third vertex measured against the triple's scale).
inline constexpr double kCollinearTol = 1e-9;

// Threshold for the equilateral predicate, applied to equilaterality_residual.
inline constexpr double kEquilateralTol = 1e-10;

// Orthonormal basis (n, t) of the working plane of a triple. n follows the
// first non-degenerate edge, t points toward the third vertex's side, so the
// triple is positively oriented in (n, t) coordinates.
struct PlaneFrame {
    Point n;
    Point t;
};

Point centroid(const Triple& x);

// True iff the component of (x3 - x1) perpendicular to the x1->x2 direction
// has norm <= tol * scale(x). Trivial triples and triples with a repeated
// vertex are collinear.
bool is_collinear(const Triple& x, double tol = kCollinearTol);

// Throws TrivialTriple when there is no direction to build a frame from.
// For collinear input t is a deterministic perpendicular: in d = 2 the
// counter-clockwise quarter turn of n, in d >= 3 the standard basis vector
// with the smallest |component along n| (lowest index on ties),
// Gram-Schmidt'd against n.
PlaneFrame plane_frame(const Triple& x, double tol = kCollinearTol);

// Quarter-turn operator in the plane of x, oriented so the turn is
// counter-clockwise in the frame where x is positively oriented:
// R = t n^T - n t^T. Kernel is the orthogonal complement of span(n, t).
// Trivial triples get the zero matrix.
Eigen::MatrixXd rotation_operator(const Triple& x, double tol = kCollinearTol);

// Scale-free deviation from equilateral: with s_ij the three squared side
// lengths and m their mean, max |s_ij - m| / max(m, eps). Zero for trivial
// triples; used as the equilateral predicate via kEquilateralTol.
double equilaterality_residual(const Triple& x);

bool is_equilateral(const Triple& x, double tol = kEquilateralTol);

}  // namespace napoleon
