#pragma once

#include <Eigen/Core>

#include "napoleon/frame.hpp"
#include "napoleon/types.hpp"

namespace napoleon {

// The two 3d x 3d block operators behind the transforms, materialized for
// cross-checks against the blockwise implementations:
//   K = [[0,1,1],[1,0,1],[1,1,0]] (x) I_d   (pairwise sums)
//   L = [[0,-1,1],[1,0,-1],[-1,1,0]] (x) I_d (cyclic differences)
// K maps 1 (x) p to 2 (1 (x) p); L annihilates 1 (x) p.
struct StructureOperators {
    Eigen::MatrixXd K;
    Eigen::MatrixXd L;
};

StructureOperators structure_operators(Eigen::Index d);

// Apex of the equilateral triangle erected on segment a->b inside the plane
// encoded by `rot` (a quarter-turn operator): midpoint(a, b) + s * (sqrt(3)/2)
// * rot * (b - a), s = +1 inner, -1 outer. Degenerate segment returns the
// midpoint (= a).
Point erected_vertex(const Point& a, const Point& b, const Eigen::MatrixXd& rot,
                     Kind kind);

// Apexes of the three equilateral triangles erected on the sides of x, one
// per vertex, each opposite the vertex with the same index. Trivial triples
// are fixed points.
Triple torricelli(const Triple& x, Kind kind, double tol = kCollinearTol);

// Centroids of the three erected triangles: N(x)_i = (x_j + x_k +
// torricelli(x)_i) / 3. The result is equilateral for every input
// (Napoleon's theorem). Trivial triples are fixed points.
Triple napoleon(const Triple& x, Kind kind, double tol = kCollinearTol);

// k-fold iterate of the Napoleon transform, with the closed-form shortcuts:
// inner iterates collapse to the centroid triple from k = 2 on, and outer
// iterates are 2-periodic from k = 1 on, so k >= 3 reduces by 2 until it
// lands in {1, 2}.
Triple napoleon_iter(const Triple& x, Kind kind, long long k,
                     double tol = kCollinearTol);

// The twice-iterated outer transform in closed form: (2/3) x + (1/3)
// torricelli(x, inner), vertex-wise. This is also the nearest equilateral
// triple to x in the summed squared vertex distance.
Triple double_outer_napoleon(const Triple& x, double tol = kCollinearTol);

}  // namespace napoleon
