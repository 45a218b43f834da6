#include "napoleon/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <vector>

#include "json.hpp"
#include "napoleon/alignment.hpp"
#include "napoleon/frame.hpp"
#include "napoleon/transforms.hpp"

namespace napoleon {

namespace {

constexpr double kFloor = std::numeric_limits<double>::min();

double triple_gap(const Triple& a, const Triple& b) {
    double gap = 0.0;
    for (int i = 0; i < 3; ++i) gap = std::max(gap, (a[i] - b[i]).norm());
    return gap;
}

// Side-length spread relative to max(mean squared side, unit). The extra
// floor keeps the ratio meaningful when the triple under test has collapsed
// to roundoff noise (the inner transform of an equilateral input does);
// `unit` should be the squared scale of the originating triple.
double equilateral_deviation(const Triple& t, double unit) {
    const double s01 = (t[0] - t[1]).squaredNorm();
    const double s02 = (t[0] - t[2]).squaredNorm();
    const double s12 = (t[1] - t[2]).squaredNorm();
    const double mean = (s01 + s02 + s12) / 3.0;
    const double dev = std::max({std::abs(s01 - mean), std::abs(s02 - mean),
                                 std::abs(s12 - mean)});
    return dev / std::max({mean, unit, kFloor});
}

}  // namespace

TripleSampler::TripleSampler(std::uint64_t seed) : engine_(seed) {}

double TripleSampler::uniform() {
    // Top 53 bits of the standard-pinned mt19937_64 stream.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double TripleSampler::gaussian() {
    // Box-Muller, cosine half only: sequence stays implementation-free.
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

Point TripleSampler::gaussian_point(Eigen::Index d) {
    Point p(d);
    for (Eigen::Index i = 0; i < d; ++i) p[i] = gaussian();
    return p;
}

Triple TripleSampler::gaussian_triple(Eigen::Index d) {
    return Triple(gaussian_point(d), gaussian_point(d), gaussian_point(d));
}

namespace {

Point random_unit(TripleSampler& sampler, Eigen::Index d) {
    for (;;) {
        Point p = sampler.gaussian_point(d);
        const double norm = p.norm();
        if (norm > 1e-6) return p / norm;
    }
}

Point random_unit_against(TripleSampler& sampler, const Point& n) {
    for (;;) {
        Point p = sampler.gaussian_point(n.size());
        p -= n * n.dot(p);
        const double norm = p.norm();
        if (norm > 1e-6) return p / norm;
    }
}

}  // namespace

Triple TripleSampler::equilateral_triple(Eigen::Index d) {
    const Point center = gaussian_point(d);
    const Point e1 = random_unit(*this, d);
    const Point e2 = random_unit_against(*this, e1);
    const double theta = 2.0 * std::numbers::pi * uniform();
    const double radius = 0.3 + std::abs(gaussian());
    const double orientation = uniform() < 0.5 ? 1.0 : -1.0;
    std::array<Point, 3> v;
    for (int i = 0; i < 3; ++i) {
        const double ang =
            theta + orientation * 2.0 * std::numbers::pi * i / 3.0;
        v[i] = center + radius * (std::cos(ang) * e1 + std::sin(ang) * e2);
    }
    return Triple(v[0], v[1], v[2]);
}

Triple TripleSampler::collinear_triple(Eigen::Index d) {
    const Point anchor = gaussian_point(d);
    const Point direction = random_unit(*this, d);
    double along[3];
    for (;;) {
        for (double& t : along) t = gaussian();
        const double sep = std::min({std::abs(along[0] - along[1]),
                                     std::abs(along[0] - along[2]),
                                     std::abs(along[1] - along[2])});
        if (sep > 1e-3) break;
    }
    return Triple(anchor + along[0] * direction, anchor + along[1] * direction,
                  anchor + along[2] * direction);
}

Triple TripleSampler::near_collinear_triple(Eigen::Index d, double offset) {
    const Triple base = collinear_triple(d);
    const Point line = (base[1] - base[0]).normalized();
    const Point perp = random_unit_against(*this, line);
    return Triple(base[0], base[1], base[2] + offset * perp);
}

Triple TripleSampler::trivial_triple(Eigen::Index d) {
    const Point p = gaussian_point(d);
    return Triple(p, p, p);
}

void CheckStats::record(bool pass, double residual) {
    ++applied;
    if (pass) ++passed;
    max_residual = std::max(max_residual, residual);
}

bool VerificationReport::all_passed() const {
    for (const CheckStats* stats :
         {&centroid_preservation, &equal_displacement, &napoleon_equilateral,
          &equilateral_identities, &iterate_consistency, &double_outer_identity,
          &oracle_gap, &oracle_argmin, &kkt_certificate, &branch_ordering}) {
        if (stats->passed != stats->applied) return false;
    }
    return true;
}

namespace {

nlohmann::ordered_json stats_json(const CheckStats& stats) {
    return {{"applied", stats.applied},
            {"passed", stats.passed},
            {"max_residual", stats.max_residual}};
}

struct NamedCheck {
    const char* name;
    const CheckStats VerificationReport::*stats;
};

constexpr NamedCheck kChecks[] = {
    {"centroid_preservation", &VerificationReport::centroid_preservation},
    {"equal_displacement", &VerificationReport::equal_displacement},
    {"napoleon_equilateral", &VerificationReport::napoleon_equilateral},
    {"equilateral_identities", &VerificationReport::equilateral_identities},
    {"iterate_consistency", &VerificationReport::iterate_consistency},
    {"double_outer_identity", &VerificationReport::double_outer_identity},
    {"oracle_gap", &VerificationReport::oracle_gap},
    {"oracle_argmin", &VerificationReport::oracle_argmin},
    {"kkt_certificate", &VerificationReport::kkt_certificate},
    {"branch_ordering", &VerificationReport::branch_ordering},
};

}  // namespace

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["seed"] = seed;
    doc["dimension"] = dimension;
    doc["instance_count"] = instance_count;
    nlohmann::ordered_json checks;
    for (const NamedCheck& check : kChecks) {
        checks[check.name] = stats_json(this->*check.stats);
    }
    doc["checks"] = std::move(checks);
    doc["passed"] = all_passed();
    return doc.dump(2) + "\n";
}

namespace {

void check_instance(const Triple& x, const VerifyOptions& options,
                    VerificationReport& report) {
    const double s = std::max(x.scale(), kFloor);
    const Point c = centroid(x);
    const Triple apex_inner = torricelli(x, Kind::inner);
    const Triple apex_outer = torricelli(x, Kind::outer);
    const Triple nap_inner = napoleon(x, Kind::inner);
    const Triple nap_outer = napoleon(x, Kind::outer);

    {  // Every transform keeps the centroid fixed.
        double gap = 0.0;
        for (const Triple* t : {&apex_inner, &apex_outer, &nap_inner, &nap_outer}) {
            gap = std::max(gap, (centroid(*t) - c).norm());
        }
        report.centroid_preservation.record(gap / s <= 1e-10, gap / s);
    }

    {  // The erected apexes sit equally far from their vertices. The spread
       // is floored by the triple scale because an equilateral input is a
       // fixed point of the inner transform: every displacement is then pure
       // roundoff and dividing noise by noise would report garbage.
        double spread = 0.0;
        for (const Triple* t : {&apex_inner, &apex_outer}) {
            double lo = std::numeric_limits<double>::infinity();
            double hi = 0.0;
            for (int i = 0; i < 3; ++i) {
                const double len = ((*t)[i] - x[i]).norm();
                lo = std::min(lo, len);
                hi = std::max(hi, len);
            }
            spread = std::max(spread, (hi - lo) / std::max(hi, s));
        }
        report.equal_displacement.record(spread <= 1e-10, spread);
    }

    {  // Both centroid triangles are equilateral, whatever the input. The
       // deviation is measured against the input's squared scale so that the
       // collapsed inner triangle of an equilateral input reads as exactly
       // equilateral instead of as noise.
        const double residual = std::max(equilateral_deviation(nap_inner, s * s),
                                         equilateral_deviation(nap_outer, s * s));
        report.napoleon_equilateral.record(residual <= 1e-10, residual);
    }

    {  // On an equilateral triple the inner transform collapses to the
       // centroid and the outer one reflects through it. Checked on x when
       // x is already equilateral, otherwise on its (equilateral) outer
       // transform.
        const Triple& z = is_equilateral(x) ? x : nap_outer;
        const Point zc = centroid(z);
        // Averaging roundoff grows with the distance from the origin, so a
        // coincident triple far from it still needs a nonzero yardstick.
        const double zs = std::max({z.scale(), zc.norm(), kFloor});
        const Triple in_z = napoleon(z, Kind::inner);
        const Triple out_z = napoleon(z, Kind::outer);
        double gap = 0.0;
        for (int i = 0; i < 3; ++i) {
            gap = std::max(gap, (in_z[i] - zc).norm());
            gap = std::max(gap, (out_z[i] - (2.0 * zc - z[i])).norm());
        }
        report.equilateral_identities.record(gap / zs <= 1e-10, gap / zs);
    }

    {  // Shortcut iterates match literal composition for k = 0..6.
        double gap = 0.0;
        for (const Kind kind : {Kind::inner, Kind::outer}) {
            Triple literal = x;
            gap = std::max(gap, triple_gap(napoleon_iter(x, kind, 0), literal));
            for (long long k = 1; k <= 6; ++k) {
                literal = napoleon(literal, kind);
                gap = std::max(gap, triple_gap(napoleon_iter(x, kind, k), literal));
            }
        }
        report.iterate_consistency.record(gap / s <= 1e-10, gap / s);
    }

    {  // The closed-form double outer transform equals the literal one.
        const Triple literal = napoleon(nap_outer, Kind::outer);
        const double gap = triple_gap(literal, double_outer_napoleon(x)) / s;
        report.double_outer_identity.record(gap <= 1e-10, gap);
    }

    const AlignmentResult closed = optimal_equilateral_alignment(x);
    const AlignmentResult oracle =
        oracle_alignment(x, options.grid_n, options.refine_iters);

    {  // The search oracle never beats the closed form by more than
       // roundoff and lands within 1e-6 of it (unit-scale inputs).
        const double gap = oracle.objective - closed.objective;
        report.oracle_gap.record(gap >= -1e-9 && gap <= 1e-6, std::abs(gap));
    }

    if (closed.unique) {  // ... and finds the same minimizer.
        const double gap = triple_gap(oracle.y, closed.y) / s;
        report.oracle_argmin.record(gap <= 1e-4, gap);
    }

    {  // Stationarity certificate for the closed form.
        const LagrangeDiagnostics diag = kkt_residual(x, closed.y);
        report.kkt_certificate.record(diag.gradient_residual <= 1e-8,
                                      diag.gradient_residual);
    }

    {  // Inner branch strictly wins except for collinear ties.
        if (closed.unique) {
            const double excess =
                std::max(0.0, closed.objective_pos - closed.objective_neg);
            report.branch_ordering.record(
                closed.objective_pos < closed.objective_neg, excess);
        } else {
            const double tie =
                std::abs(closed.objective_pos - closed.objective_neg);
            report.branch_ordering.record(tie <= 1e-9, tie);
        }
    }
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options,
                                    std::ostream& log) {
    TripleSampler sampler(options.seed);
    VerificationReport report;
    report.seed = options.seed;
    report.dimension = options.dimension;

    const Eigen::Index d = options.dimension;
    std::vector<Triple> instances;
    instances.reserve(static_cast<std::size_t>(options.n) + 4);
    instances.push_back(sampler.trivial_triple(d));
    instances.push_back(sampler.collinear_triple(d));
    instances.push_back(sampler.near_collinear_triple(d, 1e-12));
    instances.push_back(sampler.equilateral_triple(d));
    for (long i = 0; i < options.n; ++i) {
        instances.push_back(sampler.gaussian_triple(d));
    }
    report.instance_count = static_cast<long>(instances.size());

    for (const Triple& x : instances) check_instance(x, options, report);

    for (const NamedCheck& check : kChecks) {
        const CheckStats& stats = report.*check.stats;
        log << "[verify] " << check.name << ": " << stats.passed << "/"
            << stats.applied << " passed, max residual " << stats.max_residual
            << "\n";
    }
    return report;
}

}  // namespace napoleon
