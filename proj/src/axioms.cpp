#include "prefcalc/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "prefcalc/engine.hpp"
#include "prefcalc/errors.hpp"
#include "prefcalc/rng.hpp"

namespace prefcalc {

AssociativityResult check_associativity(const BinaryCombiner& f, std::size_t trials,
                                        double tol, std::uint64_t seed) {
    if (trials < 1) throw Error("check_associativity needs at least one trial");

    std::vector<std::array<double, 3>> probes;
    for (int u = 0; u <= 1; ++u)
        for (int v = 0; v <= 1; ++v)
            for (int w = 0; w <= 1; ++w)
                probes.push_back({double(u), double(v), double(w)});
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < trials; ++i)
        probes.push_back({uniform01(rng), uniform01(rng), uniform01(rng)});

    AssociativityResult result;
    result.trials_run = probes.size();
    for (const auto& p : probes) {
        const double left = f(p[0], f(p[1], p[2]));
        const double right = f(f(p[0], p[1]), p[2]);
        const double err = std::abs(left - right);
        if (!std::isfinite(err) || err > tol) {
            result.passed = false;
            if (std::isfinite(err)) result.max_violation = std::max(result.max_violation, err);
            if (!result.counterexample || p < *result.counterexample)
                result.counterexample = p;
        } else {
            result.max_violation = std::max(result.max_violation, err);
        }
    }
    return result;
}

namespace {

// Fixed product model used for the engine-level complement check.
double engine_complement_gap() {
    auto space = AttributeSpace::create({{"x", {0, 1, 2}}, {"y", {0, 1, 2}}});
    UtilityModel model = product_model(
        {UtilityCurve::linear(0, 2), UtilityCurve::exponential(0.7, 0, 2)}, space);

    const ExprPtr x1 = Expr::atom("x", 1), y1 = Expr::atom("y", 1), y2 = Expr::atom("y", 2);
    const std::vector<ExprPtr> cases = {
        x1,
        conj(x1, y1),
        disj(x1, y1),
        conj(Expr::complement(x1), y2),
        Expr::complement(disj(x1, Expr::complement(y1))),
        disj(conj(x1, y1), Expr::complement(conj(x1, y2))),
    };
    double gap = 0.0;
    for (const auto& e : cases) {
        const double sum = eval_utility(e, model) + eval_utility(Expr::complement(e), model);
        gap = std::max(gap, std::abs(sum - 1.0));
    }
    return gap;
}

}  // namespace

ComplementarityResult check_complementarity(const UnaryRegrade& s, std::size_t trials,
                                            double tol, std::uint64_t seed) {
    if (trials < 1) throw Error("check_complementarity needs at least one trial");

    std::vector<double> samples = {0.0, 0.25, 0.5, 0.75, 1.0};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < trials; ++i) samples.push_back(uniform01(rng));
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

    ComplementarityResult result;
    result.trivial_identity = true;
    result.matches_complement = true;

    std::vector<double> values(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double u = samples[i];
        const double v = s(u);
        values[i] = v;
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
            result.range_ok = false;
            if (!result.first_range_failure) result.first_range_failure = u;
            result.trivial_identity = false;
            result.matches_complement = false;
            continue;
        }
        const double err = std::abs(s(v) - u);
        result.max_involution_error = std::max(result.max_involution_error, err);
        if (!(err <= tol)) result.involution_ok = false;
        if (std::abs(v - u) > tol) result.trivial_identity = false;
        if (std::abs(v - (1.0 - u)) > tol) result.matches_complement = false;
    }

    // Direction on the sampled pairs (samples are sorted and distinct).
    bool up = false, down = false;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!std::isfinite(values[i]) || !std::isfinite(values[i - 1])) continue;
        if (values[i] > values[i - 1]) up = true;
        if (values[i] < values[i - 1]) down = true;
    }
    if (up && down) result.direction = Monotonicity::None;
    else if (up) result.direction = Monotonicity::Increasing;
    else if (down) result.direction = Monotonicity::Decreasing;
    else result.direction = Monotonicity::Constant;

    if (result.matches_complement)
        result.engine_complement_ok = engine_complement_gap() <= 1e-15;

    result.passed = result.range_ok && result.involution_ok &&
                    result.direction != Monotonicity::None &&
                    (!result.matches_complement || result.engine_complement_ok);
    return result;
}

}  // namespace prefcalc
