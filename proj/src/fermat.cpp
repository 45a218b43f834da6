#include "napoleon/fermat.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>

#include "napoleon/transforms.hpp"

namespace napoleon {

std::optional<int> wide_angle_vertex(const Triple& x, double tol) {
    for (int i = 0; i < 3; ++i) {
        const Point u = x[(i + 1) % 3] - x[i];
        const Point v = x[(i + 2) % 3] - x[i];
        const double nu = u.norm();
        const double nv = v.norm();
        if (nu == 0.0 || nv == 0.0) continue;
        if (u.dot(v) / (nu * nv) <= -0.5 + tol) return i;
    }
    return std::nullopt;
}

Point fermat_point(const Triple& x, double tol) {
    if (x.trivial()) {
        throw TrivialTriple("no Fermat point for a trivial triple");
    }

    if (is_collinear(x, tol)) {
        // The 1-median of three collinear points is the middle one.
        const PlaneFrame frame = plane_frame(x, tol);
        std::array<int, 3> order{0, 1, 2};
        std::array<double, 3> along{};
        for (int i = 0; i < 3; ++i) along[i] = frame.n.dot(x[i] - x[0]);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return along[a] != along[b] ? along[a] < along[b] : a < b;
        });
        return x[order[1]];
    }

    if (const auto wide = wide_angle_vertex(x)) return x[*wide];

    // All angles below 120 degrees: the minimizer is interior, at the common
    // point of the lines joining each vertex to its opposite outer apex.
    // Intersect two of them in plane coordinates.
    const PlaneFrame frame = plane_frame(x, tol);
    const Triple apex = torricelli(x, Kind::outer, tol);
    const auto project = [&](const Point& p) {
        return Eigen::Vector2d(frame.n.dot(p - x[0]), frame.t.dot(p - x[0]));
    };
    const Eigen::Vector2d p0 = project(x[0]);
    const Eigen::Vector2d p1 = project(x[1]);
    const Eigen::Vector2d u0 = project(apex[0]) - p0;
    const Eigen::Vector2d u1 = project(apex[1]) - p1;

    Eigen::Matrix2d lines;
    lines << u0[0], -u1[0], u0[1], -u1[1];
    const Eigen::Vector2d s = lines.fullPivLu().solve(p1 - p0);
    const Eigen::Vector2d meet = p0 + s[0] * u0;
    return x[0] + meet[0] * frame.n + meet[1] * frame.t;
}

}  // namespace napoleon
