#include "prefcalc/curve.hpp"

#include <cmath>

#include "prefcalc/errors.hpp"

namespace prefcalc {

UtilityCurve::UtilityCurve(CurveFamily family, double parameter, double min, double max)
    : family_(family), parameter_(parameter), min_(min), max_(max) {
    if (!std::isfinite(min) || !std::isfinite(max) || !(min < max))
        throw Error("curve range must be a finite interval with min < max");
    if (!std::isfinite(parameter))
        throw Error("curve parameter must be finite");
}

UtilityCurve UtilityCurve::linear(double min, double max) {
    return UtilityCurve(CurveFamily::Linear, 0.0, min, max);
}

UtilityCurve UtilityCurve::exponential(double gamma, double min, double max) {
    return UtilityCurve(CurveFamily::Exponential, gamma, min, max);
}

UtilityCurve UtilityCurve::power(double exponent, double min, double max) {
    if (!(exponent > 0.0))
        throw Error("power curve exponent must be positive");
    return UtilityCurve(CurveFamily::Power, exponent, min, max);
}

double UtilityCurve::operator()(double x) const {
    if (!(x >= min_ && x <= max_))
        throw DomainError("curve argument outside range");
    if (x == min_) return 0.0;
    if (x == max_) return 1.0;
    const double span = max_ - min_;
    const double t = (x - min_) / span;
    switch (family_) {
        case CurveFamily::Linear:
            return t;
        case CurveFamily::Exponential: {
            const double g = parameter_;
            if (g == 0.0) return t;
            return std::expm1(-g * (x - min_)) / std::expm1(-g * span);
        }
        case CurveFamily::Power:
            return std::pow(t, parameter_);
    }
    throw Error("unreachable curve family");
}

NpvDisjunction npv_disjunction_check(double gamma, double beta, double x, double y) {
    if (!(gamma > 0.0) || !(beta > 0.0))
        throw Error("npv_disjunction_check requires positive risk coefficients");
    if (x < 0.0 || y < 0.0)
        throw Error("npv_disjunction_check requires nonnegative attribute values");
    const double ux = -std::expm1(-gamma * x);
    const double uy = -std::expm1(-beta * y);
    return NpvDisjunction{ux + uy - ux * uy, -std::expm1(-(gamma * x + beta * y))};
}

const char* curve_family_name(CurveFamily f) {
    switch (f) {
        case CurveFamily::Linear: return "linear";
        case CurveFamily::Exponential: return "exponential";
        case CurveFamily::Power: return "power";
    }
    return "?";
}

}  // namespace prefcalc
