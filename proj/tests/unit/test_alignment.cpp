#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "doctest.h"
#include "helpers.hpp"
#include "napoleon/alignment.hpp"
#include "napoleon/frame.hpp"
#include "napoleon/transforms.hpp"

using napoleon::AlignmentResult;
using napoleon::Kind;
using napoleon::Point;
using napoleon::Triple;
using testutil::t2;
using testutil::vec;

namespace {

Triple random_triple(int d, unsigned seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::array<Point, 3> pts;
    for (auto& p : pts) {
        p = Point(d);
        for (int j = 0; j < d; ++j) {
            p[j] = dist(gen);
        }
    }
    return Triple(pts[0], pts[1], pts[2]);
}

}  // namespace

TEST_CASE("alignment objective sums the squared vertex displacements") {
    const Triple x = t2(0.0, 0.0, 1.0, 0.0, 0.0, 1.0);
    const Triple y = t2(1.0, 0.0, 1.0, 0.0, 0.0, 1.0);
    CHECK(napoleon::alignment_objective(x, y) == 1.0);
    const Triple z = t2(1.0, 0.0, 1.0, 1.0, 0.0, 1.0);
    CHECK(napoleon::alignment_objective(x, z) == 2.0);
    CHECK(napoleon::alignment_objective(x, x) == 0.0);
    CHECK_THROWS_AS(
        napoleon::alignment_objective(x, testutil::t3(0, 0, 0, 1, 0, 0, 0, 1, 0)),
        napoleon::DimensionMismatch);
}

TEST_CASE("planar parametrization encodes both equilateral branches") {
    for (int k : {+1, -1}) {
        const auto par = napoleon::planar_parametrization(k);
        CHECK(par.k == k);

        // Completing (y1, y2) with the third vertex always yields an
        // equilateral triple, whichever branch is chosen.
        const Eigen::Vector2d y1(0.3, -0.8);
        const Eigen::Vector2d y2(1.7, 0.4);
        const Eigen::Vector2d y3 = par.third_vertex(y1, y2);
        const double s12 = (y2 - y1).norm();
        CHECK((y3 - y1).norm() == doctest::Approx(s12).epsilon(1e-12));
        CHECK((y3 - y2).norm() == doctest::Approx(s12).epsilon(1e-12));

        // Opposite branches mirror the apex across the base line.
        const auto other = napoleon::planar_parametrization(-k);
        const Eigen::Vector2d y3b = other.third_vertex(y1, y2);
        CHECK((0.5 * (y3 + y3b) - 0.5 * (y1 + y2)).norm() <= 1e-12);

        // The quarter turn squares to minus the identity.
        const Eigen::Matrix2d sq = par.quarter_turn * par.quarter_turn;
        CHECK((sq + Eigen::Matrix2d::Identity()).norm() <= 1e-15);
    }
    CHECK_THROWS_AS(napoleon::planar_parametrization(0), std::invalid_argument);
}

TEST_CASE("reduced objective hessian is positive definite on both branches") {
    // Eliminating the third vertex leaves an unconstrained quadratic in
    // (y1, y2); its hessian block structure is [[2I, -M], [-M^T, 2I]]
    // and the smallest eigenvalue must stay at least 1.
    for (int k : {+1, -1}) {
        const auto par = napoleon::planar_parametrization(k);
        const Eigen::Matrix4d h = par.reduced_hessian();
        CHECK((h - h.transpose()).norm() <= 1e-15);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(h);
        CHECK(eig.eigenvalues().minCoeff() >= 1.0 - 1e-12);
    }
}

TEST_CASE("optimal alignment equals the double outer napoleon transform") {
    const int dims[] = {2, 3, 5};
    for (int d : dims) {
        for (unsigned seed = 0; seed < 25; ++seed) {
            const Triple x = random_triple(d, 11000u * d + seed);
            const AlignmentResult res =
                napoleon::optimal_equilateral_alignment(x);
            CHECK(testutil::gap(res.y, napoleon::double_outer_napoleon(x)) <=
                  1e-12 * (1.0 + x.scale()));
            CHECK(res.branch_k == 1);
            CHECK(res.objective ==
                  doctest::Approx(napoleon::alignment_objective(x, res.y))
                      .epsilon(1e-12));
            CHECK(res.objective <= res.objective_neg + 1e-15);
            CHECK(napoleon::equilaterality_residual(res.y) <= 1e-10);
        }
    }
}

TEST_CASE("alignment fixes equilateral triples and flags collinear ties") {
    const double s3 = std::sqrt(3.0);
    const Triple eq = t2(1.0, s3 / 3.0, 0.0, s3 / 3.0, 0.5, -s3 / 6.0);
    const AlignmentResult fixed = napoleon::optimal_equilateral_alignment(eq);
    CHECK(testutil::gap(fixed.y, eq) <= 1e-12);
    CHECK(fixed.objective <= 1e-24);
    CHECK(fixed.unique);

    // Collinear inputs make the two branches tie; both answers are kept.
    const Triple flat = t2(0.0, 0.0, 1.0, 0.0, 2.0, 0.0);
    const AlignmentResult tie = napoleon::optimal_equilateral_alignment(flat);
    CHECK(!tie.unique);
    CHECK(tie.objective_pos ==
          doctest::Approx(tie.objective_neg).epsilon(1e-12));
    REQUIRE(tie.alternate_y.has_value());
    CHECK(napoleon::alignment_objective(flat, *tie.alternate_y) ==
          doctest::Approx(tie.objective).epsilon(1e-10));
    CHECK(napoleon::equilaterality_residual(*tie.alternate_y) <= 1e-10);

    // Trivial triples are already aligned at objective zero.
    const AlignmentResult point =
        napoleon::optimal_equilateral_alignment(t2(2, 3, 2, 3, 2, 3));
    CHECK(point.objective == 0.0);
    CHECK(!point.unique);
}

TEST_CASE("non collinear triples strictly prefer the reflected branch") {
    for (unsigned seed = 0; seed < 30; ++seed) {
        const Triple x = random_triple(2, 12000u + seed);
        const AlignmentResult res = napoleon::optimal_equilateral_alignment(x);
        CHECK(res.unique);
        CHECK(res.objective_pos < res.objective_neg);
    }
}

TEST_CASE("kkt residual certifies the optimum and rejects other points") {
    const Triple x = t2(0.0, 0.0, 2.0, 0.0, 0.5, 1.1);
    const AlignmentResult res = napoleon::optimal_equilateral_alignment(x);

    const auto diag = napoleon::kkt_residual(x, res.y);
    CHECK(diag.gradient_residual <= 1e-12);
    CHECK(diag.lambda1 == doctest::Approx(0.18297940613610184).epsilon(1e-9));
    CHECK(diag.lambda2 == doctest::Approx(-0.05884359756799749).epsilon(1e-9));

    // A different equilateral triple satisfies the constraints but not the
    // stationarity condition, so the residual must stay far from zero.
    const Triple other = napoleon::napoleon(x, Kind::outer);
    const auto off = napoleon::kkt_residual(x, other);
    CHECK(off.gradient_residual ==
          doctest::Approx(1.6603726265160612).epsilon(1e-9));
    CHECK(off.gradient_residual > 1e-3);

    // Non equilateral candidates are rejected outright.
    CHECK_THROWS_AS(napoleon::kkt_residual(x, t2(0, 0, 1, 0, 0, 1)),
                    napoleon::NotEquilateral);
}

TEST_CASE("search oracle confirms the closed form on random planar triples") {
    for (unsigned seed = 0; seed < 8; ++seed) {
        const Triple x = random_triple(2, 13000u + seed);
        const AlignmentResult closed =
            napoleon::optimal_equilateral_alignment(x);
        const AlignmentResult searched = napoleon::oracle_alignment(x);

        const double scale2 = x.scale() * x.scale();
        CHECK(searched.objective >= closed.objective - 1e-9 * scale2);
        CHECK(searched.objective - closed.objective <= 1e-6 * scale2);
        CHECK(testutil::gap(searched.y, closed.y) <= 1e-4 * (1.0 + x.scale()));
        CHECK(searched.branch_k == closed.branch_k);
    }
}

TEST_CASE("search oracle works in higher dimensions") {
    const Triple x = random_triple(4, 14001u);
    const AlignmentResult closed = napoleon::optimal_equilateral_alignment(x);
    const AlignmentResult searched = napoleon::oracle_alignment(x);
    CHECK(searched.objective >= closed.objective - 1e-9);
    CHECK(searched.objective - closed.objective <= 1e-6 * x.scale() * x.scale());
}

TEST_CASE("search oracle is robust to grid phase and size") {
    const Triple x = t2(0.2, -0.4, 1.7, 0.3, 0.6, 1.5);
    const AlignmentResult a = napoleon::oracle_alignment(x, 64, 64, 0.0);
    const AlignmentResult b = napoleon::oracle_alignment(x, 97, 64, 0.37);
    CHECK(a.objective == doctest::Approx(b.objective).epsilon(1e-9));
    CHECK(testutil::gap(a.y, b.y) <= 1e-5);

    CHECK_THROWS_AS(napoleon::oracle_alignment(x, 16), std::invalid_argument);
}

TEST_CASE("search oracle handles equilateral and collinear input") {
    const double s3 = std::sqrt(3.0);
    const Triple eq = t2(1.0, s3 / 3.0, 0.0, s3 / 3.0, 0.5, -s3 / 6.0);
    const AlignmentResult res = napoleon::oracle_alignment(eq);
    CHECK(res.objective <= 1e-12);
    CHECK(testutil::gap(res.y, eq) <= 1e-6);

    const Triple flat = t2(0.0, 0.0, 1.0, 0.0, 2.0, 0.0);
    const AlignmentResult tie = napoleon::oracle_alignment(flat);
    const AlignmentResult closed = napoleon::optimal_equilateral_alignment(flat);
    CHECK(tie.objective >= closed.objective - 1e-9);
    CHECK(tie.objective - closed.objective <= 1e-6);
    CHECK(!tie.unique);
    CHECK(tie.alternate_y.has_value());
}
