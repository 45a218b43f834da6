#include "napoleon/alignment.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "napoleon/transforms.hpp"

namespace napoleon {

namespace {

const double kHalfSqrt3 = std::sqrt(3.0) / 2.0;

// Max multiple of the equilateral side spread tolerated by kkt_residual's
// precondition on y.
constexpr double kCertificateEquilateralTol = 1e-8;

void check_same_dim(const Triple& x, const Triple& y) {
    if (x.dim() != y.dim()) {
        throw DimensionMismatch("triples live in different dimensions");
    }
}

}  // namespace

double alignment_objective(const Triple& x, const Triple& y) {
    check_same_dim(x, y);
    return (x[0] - y[0]).squaredNorm() + (x[1] - y[1]).squaredNorm() +
           (x[2] - y[2]).squaredNorm();
}

Eigen::Vector2d PlanarParametrization::third_vertex(
    const Eigen::Vector2d& y1, const Eigen::Vector2d& y2) const {
    return 0.5 * (y1 + y2) + (k * kHalfSqrt3) * (quarter_turn * (y2 - y1));
}

Eigen::Matrix4d PlanarParametrization::reduced_hessian() const {
    Eigen::Matrix4d h;
    h.topLeftCorner<2, 2>() = 2.0 * Eigen::Matrix2d::Identity();
    h.topRightCorner<2, 2>() = -M;
    h.bottomLeftCorner<2, 2>() = -M.transpose();
    h.bottomRightCorner<2, 2>() = 2.0 * Eigen::Matrix2d::Identity();
    return h;
}

PlanarParametrization planar_parametrization(int k) {
    if (k != 1 && k != -1) {
        throw std::invalid_argument("orientation branch must be +1 or -1");
    }
    Eigen::Matrix2d j;
    j << 0.0, -1.0, 1.0, 0.0;
    const Eigen::Matrix2d m =
        0.5 * Eigen::Matrix2d::Identity() - (k * kHalfSqrt3) * j;
    return {k, j, m};
}

AlignmentResult optimal_equilateral_alignment(const Triple& x, double tol) {
    if (x.trivial()) {
        // x is its own (zero-cost) alignment. Collinear by convention, so
        // both branches tie on the same point.
        AlignmentResult result{x};
        result.unique = false;
        result.alternate_y = x;
        return result;
    }

    // Both branch optima are vertex-wise blends of x with a Torricelli
    // configuration; the inner blend is the global minimizer.
    const Triple y_pos = double_outer_napoleon(x, tol);
    const Triple apex_neg = torricelli(x, Kind::outer, tol);
    const Triple y_neg((2.0 * x[0] + apex_neg[0]) / 3.0,
                       (2.0 * x[1] + apex_neg[1]) / 3.0,
                       (2.0 * x[2] + apex_neg[2]) / 3.0);

    AlignmentResult result{y_pos};
    result.objective_pos = alignment_objective(x, y_pos);
    result.objective_neg = alignment_objective(x, y_neg);
    result.objective = result.objective_pos;
    result.branch_k = +1;
    result.unique = !is_collinear(x, tol);
    result.frame = plane_frame(x, tol);
    if (!result.unique) result.alternate_y = y_neg;
    return result;
}

LagrangeDiagnostics kkt_residual(const Triple& x, const Triple& y) {
    check_same_dim(x, y);
    if (equilaterality_residual(y) > kCertificateEquilateralTol) {
        throw NotEquilateral(
            "stationarity certificate needs an equilateral candidate");
    }

    // Stack the three stationarity blocks into one least-squares system
    // A [l1, l2]^T = b over the multipliers.
    const Eigen::Index d = x.dim();
    Eigen::MatrixXd a(3 * d, 2);
    Eigen::VectorXd b(3 * d);
    a.block(0, 0, d, 1) = y[2] - y[1];
    a.block(0, 1, d, 1) = y[0] - y[1];
    b.segment(0, d) = x[0] - y[0];
    a.block(d, 0, d, 1) = y[1] - y[0];
    a.block(d, 1, d, 1) = y[2] - y[0];
    b.segment(d, d) = x[1] - y[1];
    a.block(2 * d, 0, d, 1) = y[0] - y[2];
    a.block(2 * d, 1, d, 1) = y[1] - y[2];
    b.segment(2 * d, d) = x[2] - y[2];

    const Eigen::Vector2d lambda =
        a.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
    const double defect = (a * lambda - b).norm();
    const double floor = std::numeric_limits<double>::min();
    return {lambda[0], lambda[1],
            defect / std::max(x.scale(), floor)};
}

namespace {

// One orientation branch of the oracle's search space, in centered plane
// coordinates: vertices c + r * u_i(theta), u_i at 120 degree spacing with
// cyclic order flipped by k. For fixed theta the best radius is
// max(0, G/3) with G = sum_i p_i . u_i, since the u_i sum to zero and the
// p_i are centered.
struct BranchSearch {
    std::array<Eigen::Vector2d, 3> p;  // centered projections of x
    double q = 0.0;                    // sum_i |p_i|^2
    int k = 1;

    Eigen::Vector2d unit(int i, double theta) const {
        const double ang =
            theta + k * (2.0 * std::numbers::pi) * static_cast<double>(i) / 3.0;
        return {std::cos(ang), std::sin(ang)};
    }

    double gain(double theta) const {
        double g = 0.0;
        for (int i = 0; i < 3; ++i) g += p[i].dot(unit(i, theta));
        return g;
    }

    double value(double theta) const {
        const double r = std::max(0.0, gain(theta) / 3.0);
        return q - 2.0 * r * gain(theta) + 3.0 * r * r;
    }
};

double golden_section(const BranchSearch& branch, double lo, double hi,
                      int iters) {
    const double ratio = (std::sqrt(5.0) + 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - (b - a) / ratio;
    double d = a + (b - a) / ratio;
    for (int i = 0; i < iters; ++i) {
        if (branch.value(c) < branch.value(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - (b - a) / ratio;
        d = a + (b - a) / ratio;
    }
    return 0.5 * (a + b);
}

}  // namespace

AlignmentResult oracle_alignment(const Triple& x, int grid_n, int refine_iters,
                                 double theta0) {
    if (grid_n < 32) {
        throw std::invalid_argument("oracle theta grid needs at least 32 points");
    }
    if (refine_iters < 0) {
        throw std::invalid_argument("refinement steps must be nonnegative");
    }
    if (x.trivial()) {
        AlignmentResult result{x};
        result.unique = false;
        result.alternate_y = x;
        return result;
    }

    const PlaneFrame frame = plane_frame(x);
    const Point origin = centroid(x);

    // Project into the plane and center; the residual mean is roundoff, but
    // subtracting it keeps the center solve exact.
    std::array<Eigen::Vector2d, 3> proj;
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    for (int i = 0; i < 3; ++i) {
        proj[i] = {frame.n.dot(x[i] - origin), frame.t.dot(x[i] - origin)};
        mean += proj[i] / 3.0;
    }

    const double two_pi = 2.0 * std::numbers::pi;
    const double step = two_pi / static_cast<double>(grid_n);

    struct BranchBest {
        double theta = 0.0;
        double value = 0.0;
        double radius = 0.0;
    };
    std::array<BranchBest, 2> best{};
    std::array<BranchSearch, 2> search{};

    for (int bi = 0; bi < 2; ++bi) {
        BranchSearch& branch = search[bi];
        branch.k = bi == 0 ? 1 : -1;
        for (int i = 0; i < 3; ++i) {
            branch.p[i] = proj[i] - mean;
            branch.q += branch.p[i].squaredNorm();
        }
        double best_theta = theta0;
        double best_value = branch.value(theta0);
        for (int j = 1; j < grid_n; ++j) {
            const double theta = theta0 + step * static_cast<double>(j);
            const double value = branch.value(theta);
            if (value < best_value) {
                best_value = value;
                best_theta = theta;
            }
        }
        const double refined = golden_section(branch, best_theta - step,
                                              best_theta + step, refine_iters);
        if (branch.value(refined) < best_value) {
            best_theta = refined;
        }
        best[bi].theta = best_theta;
        best[bi].value = branch.value(best_theta);
        best[bi].radius = std::max(0.0, branch.gain(best_theta) / 3.0);
    }

    const auto rebuild = [&](int bi) {
        std::array<Point, 3> vertices;
        for (int i = 0; i < 3; ++i) {
            const Eigen::Vector2d v =
                mean + best[bi].radius * search[bi].unit(i, best[bi].theta);
            vertices[i] = origin + v[0] * frame.n + v[1] * frame.t;
        }
        return Triple(vertices[0], vertices[1], vertices[2]);
    };

    const int winner = best[1].value < best[0].value ? 1 : 0;
    const Triple y = rebuild(winner);
    AlignmentResult result{y};
    result.objective = alignment_objective(x, y);
    result.branch_k = search[winner].k;
    result.unique = !is_collinear(x);
    result.objective_pos = winner == 0 ? result.objective
                                       : alignment_objective(x, rebuild(0));
    result.objective_neg = winner == 1 ? result.objective
                                       : alignment_objective(x, rebuild(1));
    result.frame = frame;
    if (!result.unique) result.alternate_y = rebuild(1 - winner);
    return result;
}

Point weiszfeld(const Triple& x, double tol, int max_iters) {
    if (x.trivial()) {
        throw TrivialTriple("no sum-of-distances minimizer to search for");
    }
    const double s = x.scale();
    const double near_vertex = std::max(tol, 1e-14) * s;
    Point p = centroid(x);

    for (int iter = 0; iter < max_iters; ++iter) {
        // Vertex handling: the iteration map is singular at vertices, so
        // test vertex optimality directly and either stop or step off along
        // the descent direction.
        int at_vertex = -1;
        for (int i = 0; i < 3; ++i) {
            if ((p - x[i]).norm() <= near_vertex) {
                at_vertex = i;
                break;
            }
        }
        if (at_vertex >= 0) {
            const Point& v = x[at_vertex];
            Point pull = Point::Zero(x.dim());
            double inverse_distances = 0.0;
            int coincident = 0;
            for (int j = 0; j < 3; ++j) {
                const double dist = (x[j] - v).norm();
                if (dist <= near_vertex) {
                    ++coincident;
                } else {
                    pull += (x[j] - v) / dist;
                    inverse_distances += 1.0 / dist;
                }
            }
            const double strength = pull.norm();
            if (strength <= static_cast<double>(coincident)) return v;
            // Descent rate along pull is (strength - coincident); the
            // curvature away from the vertices is at most the sum of inverse
            // distances, giving a safe quadratic-model step.
            const double h = (strength - static_cast<double>(coincident)) /
                             inverse_distances;
            p = v + (h / strength) * pull;
            continue;
        }

        Point gradient = Point::Zero(x.dim());
        Point weighted = Point::Zero(x.dim());
        double weight_sum = 0.0;
        for (int i = 0; i < 3; ++i) {
            const Point offset = p - x[i];
            const double dist = offset.norm();
            gradient += offset / dist;
            weighted += x[i] / dist;
            weight_sum += 1.0 / dist;
        }
        // First-order stationarity: the unit vectors toward the vertices
        // cancel at the minimizer. A movement-based stop would quit too
        // early when the minimizer sits at a vertex with an angle close to
        // 120 degrees, where the iteration contracts arbitrarily slowly.
        if (gradient.norm() <= tol) return p;
        const Point next = weighted / weight_sum;
        const double move = (next - p).norm();
        p = next;
        // Once steps shrink to rounding level the iterate cannot improve.
        if (move <= std::numeric_limits<double>::epsilon() * s) return p;
    }
    throw NoConvergence("sum-of-distances iteration did not settle");
}

}  // namespace napoleon
