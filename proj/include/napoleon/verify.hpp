#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>

#include "napoleon/types.hpp"

namespace napoleon {

// Deterministic triple generator. mt19937_64 has a standard-pinned output
// sequence and gaussians come from Box-Muller rather than
// std::normal_distribution (whose sequence is implementation-defined), so
// a seed pins every generated coordinate across toolchains.
class TripleSampler {
public:
    explicit TripleSampler(std::uint64_t seed);

    double uniform();  // in [0, 1)
    double gaussian();

    Point gaussian_point(Eigen::Index d);
    Triple gaussian_triple(Eigen::Index d);

    // Random equilateral triple: random plane, center, angle, orientation,
    // circumradius bounded away from zero.
    Triple equilateral_triple(Eigen::Index d);

    // Distinct collinear vertices on a random line.
    Triple collinear_triple(Eigen::Index d);

    // Collinear triple with the middle vertex pushed off the line by
    // `offset` along a perpendicular.
    Triple near_collinear_triple(Eigen::Index d, double offset);

    Triple trivial_triple(Eigen::Index d);

private:
    std::mt19937_64 engine_;
};

// Outcome of one invariant check over a batch: how many instances it
// applied to, how many of those passed, and the worst residual seen
// (in the check's own units).
struct CheckStats {
    long applied = 0;
    long passed = 0;
    double max_residual = 0.0;

    void record(bool pass, double residual);
};

struct VerificationReport {
    std::uint64_t seed = 0;
    Eigen::Index dimension = 2;
    long instance_count = 0;

    CheckStats centroid_preservation;   // T+-, N+- keep the centroid
    CheckStats equal_displacement;      // T+- move all vertices equally far
    CheckStats napoleon_equilateral;    // N+-(x) equilateral for every x
    CheckStats equilateral_identities;  // N+ collapse / N- reflection on
                                        // equilateral triples
    CheckStats iterate_consistency;     // fast-path iterate == literal, k<=6
    CheckStats double_outer_identity;   // N-^2 == (2x + T+(x)) / 3
    CheckStats oracle_gap;              // search oracle vs closed form value
    CheckStats oracle_argmin;           // ... and argmin, non-collinear only
    CheckStats kkt_certificate;         // stationarity residual <= 1e-8
    CheckStats branch_ordering;         // inner < outer, ties iff collinear

    bool all_passed() const;

    // Stable field order and number format; two runs with equal options
    // produce byte-identical text.
    std::string to_json() const;
};

struct VerifyOptions {
    long n = 1000;              // random instances; 4 edge cases are added
    Eigen::Index dimension = 2;
    std::uint64_t seed = 0;
    int grid_n = 64;            // oracle theta-grid size
    int refine_iters = 64;      // oracle golden-section steps
};

// Runs every invariant check over n gaussian triples plus four injected
// edge cases (trivial, collinear, near-collinear at offset 1e-12,
// equilateral), writing one summary line per check to `log`.
VerificationReport run_verification(const VerifyOptions& options,
                                    std::ostream& log);

}  // namespace napoleon
