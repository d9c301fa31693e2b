#ifndef PREFCALC_SUITES_HPP
#define PREFCALC_SUITES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "prefcalc/expr.hpp"
#include "prefcalc/model.hpp"

namespace prefcalc {

// ── The algebra of preferences ──────────────────────────────────────────────
// The eighteen identities of the preference algebra, as pairs of dual
// columns: double complement, idempotence, commutativity, De Morgan,
// associativity, distributivity, absorption, the Top/Bottom identity
// elements and their domination laws.  Each entry builds, from three atoms,
// a list of forms that must all be canonical_equal and domain-equal.

struct PreferenceIdentity {
    std::string name;
    std::function<std::vector<ExprPtr>(ExprPtr x, ExprPtr y, ExprPtr z)> instantiate;
};

const std::vector<PreferenceIdentity>& preference_identities();

struct IdentityCheckResult {
    std::string name;
    int trials = 0;
    int canonical_failures = 0;
    int domain_failures = 0;
    std::string first_failure;  // formatted instance, empty when clean
};

struct IdentitySuiteReport {
    std::vector<IdentityCheckResult> identities;
    bool all_passed = true;
};

// Instantiates every identity `trials` times with random atoms on random
// spaces (up to max_attrs x max_levels) and checks canonical and domain
// equality of all forms.
IdentitySuiteReport run_identity_suite(int max_attrs, int max_levels, int trials,
                                       std::uint64_t seed);

// ── Evaluator vs oracle ─────────────────────────────────────────────────────

struct OracleVerificationReport {
    int evaluations = 0;
    double max_relative_error = 0.0;
    std::string worst_expression;
    bool passed(double tol) const { return max_relative_error <= tol; }
};

// Compares eval_utility against the grid measure of the expression's domain
// for `trials` random expressions of depth <= max_depth.
OracleVerificationReport verify_against_oracle(const UtilityModel& model, int trials,
                                               int max_depth, std::uint64_t seed);

// |a - b| / max(1, |a|, |b|): relative with an absolute floor at one, the
// comparison used by the 1e-9 oracle-equivalence gate.
double relative_error(double a, double b);

// ── Axiom battery ───────────────────────────────────────────────────────────
// The canned functional-equation suite: the product combiner must satisfy
// associativity, its disjunction dual as well, the arithmetic mean must fail
// with counterexample (0,0,1), u -> 1-u must pass the complementarity checks
// and u -> u must be flagged as the trivial involution.

struct AxiomSuiteLine {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct AxiomSuiteReport {
    std::vector<AxiomSuiteLine> lines;
    bool all_passed = true;
};

AxiomSuiteReport run_axiom_suite(std::uint64_t seed);

}  // namespace prefcalc

#endif  // PREFCALC_SUITES_HPP
