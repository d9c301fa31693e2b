#ifndef PREFCALC_ENGINE_HPP
#define PREFCALC_ENGINE_HPP

#include <cstddef>
#include <string>

#include "prefcalc/expr.hpp"
#include "prefcalc/model.hpp"

namespace prefcalc {

// ── Evaluation ──────────────────────────────────────────────────────────────
// Utility of an arbitrary preference expression under an attribute-dominance
// model, by structural recursion on the canonical form:
//
//   U(TOP) = 1, U(BOT) = 0, U(~a) = 1 - U(a)
//   disjunctions fold by inclusion-exclusion:
//       U(a|b) = U(a) + U(b) - U(a.b)
//   a conjunction holding a negative literal expands through the complement:
//       U(c . ~x=b) = U(c) - U(c . x=b)
//   a conjunction of positive literals merges to per-attribute minimum
//   levels, fills unmentioned attributes at their maximum, and reads the
//   joint utility at that prospect.
//
// Results are memoised per query by canonical form, so evaluation is pure and
// safe to run concurrently on a shared model.  Queries are capped at 64
// literal occurrences.
double eval_utility(const ExprPtr& e, const UtilityModel& model);

// U(a | given) = U(a . given) / U(given).  Throws UndefinedConditionalError
// when U(given) = 0.
double conditional_utility(const ExprPtr& a, const ExprPtr& given, const UtilityModel& model);

// The inference rule u(Y|X) = u(Y) u(X|Y) / u(X) on raw utility values.
// Inputs must lie in [0,1]; throws UndefinedConditionalError when u_x = 0.
double bayes_update(double u_y, double u_x_given_y, double u_x);

// U(y | x | z_atom) = [U(y.z) + U(x.z) - U(y.x.z)] / U(z): the disjunction
// conditional.  Throws UndefinedConditionalError when U(z) = 0.
double disjunction_given(const Atom& y, const Atom& x, const Atom& z,
                         const UtilityModel& model);

// ── Utility independence ────────────────────────────────────────────────────

struct IndependenceReport {
    bool independent = true;      // max_deviation <= tol over every tested pair
    double max_deviation = 0.0;
    std::size_t pairs_tested = 0;
    std::size_t skipped = 0;      // conditioning atoms with zero utility
    double worst_level_a = 0.0;   // levels attaining max_deviation
    double worst_level_b = 0.0;
};

// Compares U(a-atom | b-atom) against the marginal U(a-atom) for every pair
// of grid levels, skipping conditioners of zero utility.  Direction matters:
// this checks the conditional utility *of a given b*.
IndependenceReport check_utility_independence(const UtilityModel& model,
                                              const std::string& attr_a,
                                              const std::string& attr_b, double tol);

}  // namespace prefcalc

#endif  // PREFCALC_ENGINE_HPP
