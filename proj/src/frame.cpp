#include "napoleon/frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace napoleon {

namespace {

// Unit vector along the first non-degenerate edge: x1->x2, falling back to
// x2->x3 when x1 == x2. Callers rule out trivial triples first.
Point edge_direction(const Triple& x) {
    Point u = x[1] - x[0];
    double norm = u.norm();
    if (norm == 0.0) {
        u = x[2] - x[1];
        norm = u.norm();
    }
    return u / norm;
}

// One Gram-Schmidt pass followed by normalization. A second pass is applied
// after normalizing because the input may be nearly parallel to n (the
// near-collinear case), where a single pass leaves an n-component far above
// roundoff relative to the tiny perpendicular remainder.
Point orthonormal_against(const Point& v, const Point& n) {
    Point w = v - n * n.dot(v);
    w /= w.norm();
    w -= n * n.dot(w);
    return w / w.norm();
}

}  // namespace

Point centroid(const Triple& x) { return (x[0] + x[1] + x[2]) / 3.0; }

bool is_collinear(const Triple& x, double tol) {
    const double s = x.scale();
    if (s == 0.0) return true;
    const Point u = x[1] - x[0];
    const double norm = u.norm();
    if (norm == 0.0) return true;  // repeated vertex: always collinear
    const Point n = u / norm;
    const Point spread = x[2] - x[0];
    const double perp = (spread - n * n.dot(spread)).norm();
    return perp <= tol * s;
}

PlaneFrame plane_frame(const Triple& x, double tol) {
    if (x.trivial()) {
        throw TrivialTriple("plane frame of a trivial triple is undefined");
    }
    const Point n = edge_direction(x);
    const Eigen::Index d = x.dim();

    if (!is_collinear(x, tol)) {
        const Point spread = x[2] - x[0];
        return {n, orthonormal_against(spread / spread.norm(), n)};
    }

    // Collinear: pick a deterministic perpendicular.
    if (d == 2) {
        Point t(2);
        t << -n[1], n[0];  // counter-clockwise quarter turn of n
        return {n, t};
    }
    Eigen::Index smallest = 0;
    for (Eigen::Index j = 1; j < d; ++j) {
        if (std::abs(n[j]) < std::abs(n[smallest])) smallest = j;
    }
    Point basis = Point::Zero(d);
    basis[smallest] = 1.0;
    return {n, orthonormal_against(basis, n)};
}

Eigen::MatrixXd rotation_operator(const Triple& x, double tol) {
    const Eigen::Index d = x.dim();
    if (x.trivial()) return Eigen::MatrixXd::Zero(d, d);
    const PlaneFrame frame = plane_frame(x, tol);
    return frame.t * frame.n.transpose() - frame.n * frame.t.transpose();
}

double equilaterality_residual(const Triple& x) {
    const double s01 = (x[0] - x[1]).squaredNorm();
    const double s02 = (x[0] - x[2]).squaredNorm();
    const double s12 = (x[1] - x[2]).squaredNorm();
    const double mean = (s01 + s02 + s12) / 3.0;
    const double dev = std::max(
        {std::abs(s01 - mean), std::abs(s02 - mean), std::abs(s12 - mean)});
    return dev / std::max(mean, std::numeric_limits<double>::min());
}

bool is_equilateral(const Triple& x, double tol) {
    return equilaterality_residual(x) <= tol;
}

}  // namespace napoleon
