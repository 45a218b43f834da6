#include "napoleon/types.hpp"

#include <algorithm>
#include <utility>

namespace napoleon {

Triple::Triple(Point a, Point b, Point c)
    : vertices_{std::move(a), std::move(b), std::move(c)} {
    const Eigen::Index d = vertices_[0].size();
    if (vertices_[1].size() != d || vertices_[2].size() != d) {
        throw DimensionMismatch("triple vertices have mixed dimensions");
    }
    if (d < 2) {
        throw DimensionMismatch("triple dimension must be at least 2, got " +
                                std::to_string(d));
    }
    for (const Point& v : vertices_) {
        if (!v.allFinite()) {
            throw NonFiniteCoordinate("triple has a non-finite coordinate");
        }
    }
}

Triple Triple::from_rows(const Eigen::MatrixXd& rows) {
    if (rows.rows() != 3) {
        throw DimensionMismatch("expected 3 vertex rows, got " +
                                std::to_string(rows.rows()));
    }
    return Triple(rows.row(0), rows.row(1), rows.row(2));
}

Eigen::MatrixXd Triple::rows() const {
    Eigen::MatrixXd out(3, dim());
    for (int i = 0; i < 3; ++i) out.row(i) = vertices_[i];
    return out;
}

Triple Triple::from_stacked(const Eigen::VectorXd& stacked, Eigen::Index dim) {
    if (dim < 2 || stacked.size() != 3 * dim) {
        throw DimensionMismatch("stacked vector size " +
                                std::to_string(stacked.size()) +
                                " does not hold three vertices of dimension " +
                                std::to_string(dim));
    }
    return Triple(stacked.segment(0, dim), stacked.segment(dim, dim),
                  stacked.segment(2 * dim, dim));
}

Eigen::VectorXd Triple::stacked() const {
    const Eigen::Index d = dim();
    Eigen::VectorXd out(3 * d);
    for (int i = 0; i < 3; ++i) out.segment(i * d, d) = vertices_[i];
    return out;
}

double Triple::scale() const {
    const double d01 = (vertices_[0] - vertices_[1]).norm();
    const double d02 = (vertices_[0] - vertices_[2]).norm();
    const double d12 = (vertices_[1] - vertices_[2]).norm();
    return std::max({d01, d02, d12});
}

}  // namespace napoleon
