#ifndef PREFCALC_AXIOMS_HPP
#define PREFCALC_AXIOMS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

namespace prefcalc {

// Numeric verifiers for the functional equations behind the inference rules.
// These check stated solutions and expose counterexamples for candidates
// that fail; they do not re-derive uniqueness.

// Candidate combiner F(u,v) on the unit square.
using BinaryCombiner = std::function<double(double, double)>;
// Candidate regrade S(u) on the unit interval.
using UnaryRegrade = std::function<double(double)>;

struct AssociativityResult {
    bool passed = true;
    std::size_t trials_run = 0;
    double max_violation = 0.0;
    // Lexicographically smallest violating (u,v,w) found, for reproducibility.
    std::optional<std::array<double, 3>> counterexample;
};

// Checks F(u, F(v, w)) == F(F(u, v), w) on the corner probes {0,1}^3 plus
// `trials` seeded random triples in [0,1]^3.
AssociativityResult check_associativity(const BinaryCombiner& f, std::size_t trials,
                                        double tol, std::uint64_t seed = 0);

enum class Monotonicity { Increasing, Decreasing, Constant, None };

struct ComplementarityResult {
    bool passed = false;          // range_ok && monotone && involution_ok
    bool range_ok = true;         // S maps [0,1] into [0,1]
    bool involution_ok = true;    // |S(S(u)) - u| <= tol on all samples
    Monotonicity direction = Monotonicity::Constant;
    bool trivial_identity = false;   // S(u) == u within tol everywhere sampled:
                                     // passes, but complement utility equals utility
    bool matches_complement = false; // S(u) == 1-u within tol everywhere sampled
    // engine-level check that U(e) + U(~e) = 1 under the complement solution;
    // only run when matches_complement
    bool engine_complement_ok = false;
    double max_involution_error = 0.0;
    std::optional<double> first_range_failure;  // smallest failing sample
};

// Checks that S is a sane complementarity regrade: bounded to [0,1],
// monotone on the sampled pairs, and an involution.  Samples the grid
// {0, .25, .5, .75, 1} plus `trials` seeded random points.
ComplementarityResult check_complementarity(const UnaryRegrade& s, std::size_t trials,
                                            double tol, std::uint64_t seed = 0);

}  // namespace prefcalc

#endif  // PREFCALC_AXIOMS_HPP
