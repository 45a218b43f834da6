#pragma once

#include <algorithm>
#include <initializer_list>

#include "napoleon/types.hpp"

namespace testutil {

inline Eigen::VectorXd vec(std::initializer_list<double> values) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const double v : values) out[i++] = v;
    return out;
}

inline napoleon::Triple t2(double ax, double ay, double bx, double by,
                           double cx, double cy) {
    return napoleon::Triple(vec({ax, ay}), vec({bx, by}), vec({cx, cy}));
}

inline napoleon::Triple t3(double ax, double ay, double az, double bx,
                           double by, double bz, double cx, double cy,
                           double cz) {
    return napoleon::Triple(vec({ax, ay, az}), vec({bx, by, bz}),
                            vec({cx, cy, cz}));
}

// Largest vertex-wise distance between two triples.
inline double gap(const napoleon::Triple& a, const napoleon::Triple& b) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        worst = std::max(worst, (a[i] - b[i]).norm());
    }
    return worst;
}

}  // namespace testutil
