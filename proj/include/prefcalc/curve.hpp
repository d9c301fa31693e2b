#ifndef PREFCALC_CURVE_HPP
#define PREFCALC_CURVE_HPP

#include <string>

namespace prefcalc {

enum class CurveFamily { Linear, Exponential, Power };

// ── UtilityCurve ────────────────────────────────────────────────────────────
// A normalised 1-D utility function on a bounded range: curve(min) = 0,
// curve(max) = 1 exactly, strictly increasing in between.
//
//   linear        u(x) = t
//   exponential   u(x) = (1 - exp(-g*t*span)) / (1 - exp(-g*span)),  g != 0
//   power         u(x) = t^p,  p > 0
//
// with t = (x - min) / span.  The exponential parameter g is the
// risk-aversion coefficient in 1/attribute-units; g = 0 degenerates to the
// linear curve.

class UtilityCurve {
public:
    static UtilityCurve linear(double min, double max);
    static UtilityCurve exponential(double gamma, double min, double max);
    static UtilityCurve power(double exponent, double min, double max);

    // Value in [0,1].  Throws DomainError when x lies outside [min, max].
    double operator()(double x) const;

    CurveFamily family() const { return family_; }
    double parameter() const { return parameter_; }  // gamma or exponent
    double min() const { return min_; }
    double max() const { return max_; }

private:
    UtilityCurve(CurveFamily family, double parameter, double min, double max);

    CurveFamily family_;
    double parameter_;
    double min_;
    double max_;
};

// ── Exponential disjunction, closed form ────────────────────────────────────
// Composes the utility of "x or y" from the unnormalised exponential curves
// 1 - exp(-gamma*x) and 1 - exp(-beta*y) on [0, inf) via inclusion-exclusion,
// and also evaluates the algebraically expanded closed form
// 1 - exp(-(gamma*x + beta*y)).  Both are returned so callers can assert
// their equality.
struct NpvDisjunction {
    double composed;
    double closed_form;
};

// Requires gamma, beta > 0 and x, y >= 0.
NpvDisjunction npv_disjunction_check(double gamma, double beta, double x, double y);

const char* curve_family_name(CurveFamily f);

}  // namespace prefcalc

#endif  // PREFCALC_CURVE_HPP
