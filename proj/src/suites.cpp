#include "prefcalc/suites.hpp"

#include <cmath>

#include "prefcalc/axioms.hpp"
#include "prefcalc/domain.hpp"
#include "prefcalc/engine.hpp"
#include "prefcalc/generators.hpp"
#include "prefcalc/parser.hpp"

namespace prefcalc {

namespace {

ExprPtr neg(ExprPtr e) { return Expr::complement(std::move(e)); }

}  // namespace

const std::vector<PreferenceIdentity>& preference_identities() {
    using V = std::vector<ExprPtr>;
    static const std::vector<PreferenceIdentity> table = {
        {"double complement",
         [](ExprPtr x, ExprPtr, ExprPtr) -> V { return {neg(neg(x)), x}; }},
        {"double complement (dual)",
         [](ExprPtr x, ExprPtr, ExprPtr) -> V { return {neg(neg(x)), x}; }},
        {"conjunction idempotence",
         [](ExprPtr x, ExprPtr, ExprPtr) -> V { return {conj(x, x), x}; }},
        {"disjunction idempotence",
         [](ExprPtr x, ExprPtr, ExprPtr) -> V { return {disj(x, x), x}; }},
        {"conjunction commutativity",
         [](ExprPtr x, ExprPtr y, ExprPtr) -> V { return {conj(x, y), conj(y, x)}; }},
        {"disjunction commutativity",
         [](ExprPtr x, ExprPtr y, ExprPtr) -> V { return {disj(x, y), disj(y, x)}; }},
        {"De Morgan over conjunction",
         [](ExprPtr x, ExprPtr y, ExprPtr) -> V {
             return {neg(conj(x, y)), disj(neg(x), neg(y))};
         }},
        {"De Morgan over disjunction",
         [](ExprPtr x, ExprPtr y, ExprPtr) -> V {
             return {neg(disj(x, y)), conj(neg(x), neg(y))};
         }},
        {"conjunction associativity",
         [](ExprPtr x, ExprPtr y, ExprPtr z) -> V {
             return {conj(conj(x, y), z), conj(x, conj(y, z)),
                     Expr::conjunction({x, y, z})};
         }},
        {"disjunction associativity",
         [](ExprPtr x, ExprPtr y, ExprPtr z) -> V {
             return {disj(disj(x, y), z), disj(x, disj(y, z)),
                     Expr::disjunction({x, y, z})};
         }},
        {"conjunction distributes over disjunction",
         [](ExprPtr x, ExprPtr y, ExprPtr z) -> V {
             return {conj(disj(x, y), z), disj(conj(x, z), conj(y, z))};
         }},
        {"disjunction distributes over conjunction",
         [](ExprPtr x, ExprPtr y, ExprPtr z) -> V {
             return {disj(conj(x, y), z), conj(disj(x, z), disj(y, z))};
         }},
        {"conjunction absorption",
         [](ExprPtr x, ExprPtr y, ExprPtr) -> V { return {conj(disj(x, y), x), x}; }},
        {"disjunction absorption",
         [](ExprPtr x, ExprPtr y, ExprPtr) -> V { return {disj(conj(x, y), x), x}; }},
        {"full domain is the conjunction identity",
         [](ExprPtr x, ExprPtr y, ExprPtr) -> V {
             return {conj(disj(x, neg(x)), y), y};
         }},
        {"empty domain is the disjunction identity",
         [](ExprPtr x, ExprPtr y, ExprPtr) -> V {
             return {disj(conj(x, neg(x)), y), y};
         }},
        {"full domain dominates disjunction",
         [](ExprPtr x, ExprPtr y, ExprPtr) -> V {
             return {Expr::disjunction({x, neg(x), y}), disj(x, neg(x))};
         }},
        {"empty domain dominates conjunction",
         [](ExprPtr x, ExprPtr y, ExprPtr) -> V {
             return {Expr::conjunction({x, neg(x), y}), conj(x, neg(x))};
         }},
    };
    return table;
}

IdentitySuiteReport run_identity_suite(int max_attrs, int max_levels, int trials,
                                       std::uint64_t seed) {
    IdentitySuiteReport report;
    std::mt19937_64 rng(seed);
    for (const auto& identity : preference_identities()) {
        IdentityCheckResult result;
        result.name = identity.name;
        result.trials = trials;
        for (int t = 0; t < trials; ++t) {
            SpacePtr space = random_space(rng, max_attrs, max_levels);
            const ExprPtr x = Expr::atom(random_atom(rng, *space));
            const ExprPtr y = Expr::atom(random_atom(rng, *space));
            const ExprPtr z = Expr::atom(random_atom(rng, *space));
            const std::vector<ExprPtr> forms = identity.instantiate(x, y, z);

            bool canonical_ok = true, domain_ok = true;
            const DomainSet reference = eval_domain(forms[0], space);
            for (std::size_t i = 1; i < forms.size(); ++i) {
                if (!canonical_equal(forms[0], forms[i])) canonical_ok = false;
                if (!domains_equal(reference, eval_domain(forms[i], space)))
                    domain_ok = false;
            }
            if (!canonical_ok) ++result.canonical_failures;
            if (!domain_ok) ++result.domain_failures;
            if ((!canonical_ok || !domain_ok) && result.first_failure.empty())
                result.first_failure = format(forms[0]) + "  vs  " + format(forms[1]);
        }
        if (result.canonical_failures || result.domain_failures)
            report.all_passed = false;
        report.identities.push_back(std::move(result));
    }
    return report;
}

double relative_error(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

OracleVerificationReport verify_against_oracle(const UtilityModel& model, int trials,
                                               int max_depth, std::uint64_t seed) {
    OracleVerificationReport report;
    std::mt19937_64 rng(seed);
    const MassFunction masses = mobius_masses(model);
    for (int t = 0; t < trials; ++t) {
        const ExprPtr e = random_expr(rng, model.space(), max_depth);
        const double symbolic = eval_utility(e, model);
        const double oracle = measure(eval_domain(e, model.space()), masses);
        const double err = relative_error(symbolic, oracle);
        ++report.evaluations;
        if (err > report.max_relative_error) {
            report.max_relative_error = err;
            report.worst_expression = format(e);
        }
    }
    return report;
}

AxiomSuiteReport run_axiom_suite(std::uint64_t seed) {
    AxiomSuiteReport report;
    auto add = [&](std::string name, bool ok, std::string detail) {
        report.all_passed = report.all_passed && ok;
        report.lines.push_back({std::move(name), ok, std::move(detail)});
    };

    const BinaryCombiner product = [](double u, double v) { return u * v; };
    const BinaryCombiner dual = [](double u, double v) { return u + v - u * v; };
    const BinaryCombiner mean = [](double u, double v) { return (u + v) / 2.0; };

    auto assoc_product = check_associativity(product, 10000, 1e-12, seed);
    add("associativity of the product combiner", assoc_product.passed,
        "max violation " + format_number(assoc_product.max_violation, 3));

    auto assoc_dual = check_associativity(dual, 10000, 1e-12, seed);
    add("associativity of the disjunction dual", assoc_dual.passed,
        "max violation " + format_number(assoc_dual.max_violation, 3));

    auto assoc_mean = check_associativity(mean, 10000, 1e-12, seed);
    {
        const bool found = assoc_mean.counterexample.has_value();
        const bool expected = !assoc_mean.passed && found &&
                              (*assoc_mean.counterexample ==
                               std::array<double, 3>{0.0, 0.0, 1.0});
        std::string detail = "no counterexample";
        if (found) {
            const auto& c = *assoc_mean.counterexample;
            detail = "counterexample (" + format_number(c[0], 6) + ", " +
                     format_number(c[1], 6) + ", " + format_number(c[2], 6) + ")";
        }
        add("arithmetic mean rejected", expected, std::move(detail));
    }

    auto comp = check_complementarity([](double u) { return 1.0 - u; }, 10000, 1e-15, seed);
    add("complement regrade 1-u", comp.passed && comp.matches_complement &&
                                      comp.direction == Monotonicity::Decreasing,
        "max involution error " + format_number(comp.max_involution_error, 3));

    auto ident = check_complementarity([](double u) { return u; }, 10000, 1e-15, seed);
    add("identity regrade flagged trivial", ident.passed && ident.trivial_identity,
        "involution holds but complement utility equals utility");

    auto recip = check_complementarity([](double u) { return u == 0.0 ? 1e300 : 1.0 / u; },
                                       10000, 1e-15, seed);
    add("reciprocal regrade rejected", !recip.passed && !recip.range_ok,
        recip.first_range_failure
            ? "range violation at u = " + format_number(*recip.first_range_failure, 6)
            : "no range violation found");
    return report;
}

}  // namespace prefcalc
