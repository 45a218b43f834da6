#include "napoleon/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace napoleon {

namespace {

const double kHalfSqrt3 = std::sqrt(3.0) / 2.0;

Eigen::MatrixXd kron_with_identity(const Eigen::Matrix3d& a, Eigen::Index d) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(3 * d, 3 * d);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (a(i, j) != 0.0) {
                out.block(i * d, j * d, d, d) =
                    a(i, j) * Eigen::MatrixXd::Identity(d, d);
            }
        }
    }
    return out;
}

}  // namespace

StructureOperators structure_operators(Eigen::Index d) {
    if (d < 2) {
        throw DimensionMismatch("structure operators need dimension >= 2");
    }
    Eigen::Matrix3d k3;
    k3 << 0, 1, 1, 1, 0, 1, 1, 1, 0;
    Eigen::Matrix3d l3;
    l3 << 0, -1, 1, 1, 0, -1, -1, 1, 0;
    return {kron_with_identity(k3, d), kron_with_identity(l3, d)};
}

Point erected_vertex(const Point& a, const Point& b, const Eigen::MatrixXd& rot,
                     Kind kind) {
    if (a.size() != b.size() || rot.rows() != a.size() ||
        rot.cols() != a.size()) {
        throw DimensionMismatch("erected_vertex arguments disagree on dimension");
    }
    const double s = kind == Kind::inner ? 1.0 : -1.0;
    return 0.5 * (a + b) + (s * kHalfSqrt3) * (rot * (b - a));
}

Triple torricelli(const Triple& x, Kind kind, double tol) {
    if (x.trivial()) return x;
    const Eigen::MatrixXd rot = rotation_operator(x, tol);
    // Apex i sits on the side joining the other two vertices, in cyclic order
    // so that vertex i stays opposite its apex.
    return Triple(erected_vertex(x[1], x[2], rot, kind),
                  erected_vertex(x[2], x[0], rot, kind),
                  erected_vertex(x[0], x[1], rot, kind));
}

Triple napoleon(const Triple& x, Kind kind, double tol) {
    if (x.trivial()) return x;
    const Triple apex = torricelli(x, kind, tol);
    return Triple((x[1] + x[2] + apex[0]) / 3.0, (x[2] + x[0] + apex[1]) / 3.0,
                  (x[0] + x[1] + apex[2]) / 3.0);
}

Triple napoleon_iter(const Triple& x, Kind kind, long long k, double tol) {
    if (k < 0) {
        throw std::invalid_argument("iteration count must be nonnegative");
    }
    if (k == 0 || x.trivial()) return x;
    if (kind == Kind::inner) {
        if (k == 1) return napoleon(x, Kind::inner, tol);
        // From the second iterate on, everything sits at the centroid: the
        // first inner transform is equilateral, and the inner transform of
        // an equilateral triple is its centroid triple.
        const Point c = centroid(x);
        return Triple(c, c, c);
    }
    // Outer iterates are 2-periodic past the first step, so only the parity
    // of k matters once k >= 3.
    if (k >= 3) k = 1 + (k - 1) % 2;
    if (k == 1) return napoleon(x, Kind::outer, tol);
    return double_outer_napoleon(x, tol);
}

Triple double_outer_napoleon(const Triple& x, double tol) {
    if (x.trivial()) return x;
    const Triple apex = torricelli(x, Kind::inner, tol);
    return Triple((2.0 * x[0] + apex[0]) / 3.0, (2.0 * x[1] + apex[1]) / 3.0,
                  (2.0 * x[2] + apex[2]) / 3.0);
}

}  // namespace napoleon
