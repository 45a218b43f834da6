#pragma once

#include <Eigen/Core>

#include <optional>

#include "napoleon/frame.hpp"
#include "napoleon/types.hpp"

namespace napoleon {

// Sum of squared distances between corresponding vertices. Labels matter:
// no permutation is applied.
double alignment_objective(const Triple& x, const Triple& y);

// Planar reduction of the alignment problem for one orientation branch
// k in {+1, -1}: the third vertex of an equilateral triple is an affine
// function of the first two, y3 = (y1 + y2) / 2 + k (sqrt(3)/2) J (y2 - y1),
// which eliminates it from the objective via M = I/2 - k (sqrt(3)/2) J.
// M satisfies M + M^T = I, M^T M = I, M^2 = -M^T.
struct PlanarParametrization {
    int k;
    Eigen::Matrix2d quarter_turn;  // J, counter-clockwise
    Eigen::Matrix2d M;

    Eigen::Vector2d third_vertex(const Eigen::Vector2d& y1,
                                 const Eigen::Vector2d& y2) const;

    // System matrix [[2I, -M], [-M^T, 2I]] of the reduced problem. Its
    // smallest eigenvalue is 1, so the reduced problem is strongly convex
    // and the minimizer unique for either branch.
    Eigen::Matrix4d reduced_hessian() const;
};

PlanarParametrization planar_parametrization(int k);

struct AlignmentResult {
    Triple y;                 // optimal equilateral triple (winning branch)
    double objective = 0.0;   // alignment_objective(x, y), recomputed exactly
    int branch_k = +1;        // winning orientation branch
    bool unique = true;       // false iff x is collinear (branches tie)
    double objective_pos = 0.0;  // best objective on the k = +1 branch
    double objective_neg = 0.0;  // best objective on the k = -1 branch
    std::optional<PlaneFrame> frame;    // frame used; empty for trivial x
    std::optional<Triple> alternate_y;  // k = -1 optimizer when x collinear
};

// Closed-form minimizer of alignment_objective(x, .) over equilateral
// triples: y = double_outer_napoleon(x), always on the k = +1 branch.
// The minimizer is unique iff x is non-collinear; for collinear x the
// k = -1 branch ties and its optimizer is exposed as alternate_y.
AlignmentResult optimal_equilateral_alignment(const Triple& x,
                                              double tol = kCollinearTol);

// Stationarity certificate for a candidate optimum y of the equilateral
// alignment of x.
struct LagrangeDiagnostics {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    // Norm of the stationarity defect after the least-squares multiplier
    // fit, divided by scale(x). <= 1e-8 certifies stationarity.
    double gradient_residual = 0.0;
};

// Fits (lambda1, lambda2) by least squares to the stationarity system of
// the equilateral-constrained problem,
//   (y1 - x1) + l1 (y3 - y2) + l2 (y1 - y2) = 0
//   (y2 - x2) + l1 (y2 - y1) + l2 (y3 - y1) = 0
//   (y3 - x3) - l1 (y3 - y1) - l2 (y3 - y2) = 0,
// and reports the remaining defect. Throws NotEquilateral unless
// equilaterality_residual(y) <= 1e-8.
LagrangeDiagnostics kkt_residual(const Triple& x, const Triple& y);

// Derivative-free minimizer used to cross-check the closed form; never
// calls it. Works in the plane frame of x and parametrizes equilateral
// triples by center, angle theta, circumradius r >= 0 and orientation k.
// For fixed (theta, k) the best center is the centroid and the best radius
// has a one-line formula, so only theta is searched: a grid of grid_n
// points per branch (phase-shifted by theta0), then golden-section
// refinement of the best bracket for refine_iters steps.
AlignmentResult oracle_alignment(const Triple& x, int grid_n = 64,
                                 int refine_iters = 64, double theta0 = 0.0);

// Sum-of-distances minimizer by Weiszfeld iteration, seeded at the
// centroid; the independent oracle for fermat_point. Stops when the unit
// vectors toward the vertices cancel to within tol (first-order
// stationarity) or when steps shrink to rounding level. When an iterate
// lands within tol * scale of a vertex, the vertex optimality test (norm
// of the summed unit vectors toward the other vertices <= 1) either
// finishes or pushes the iterate back off the vertex. Throws
// TrivialTriple, and NoConvergence if max_iters steps do not converge.
Point weiszfeld(const Triple& x, double tol = 1e-10, int max_iters = 10000);

}  // namespace napoleon
