#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>

#include "prefcalc/domain.hpp"
#include "prefcalc/engine.hpp"
#include "prefcalc/errors.hpp"
#include "prefcalc/generators.hpp"
#include "prefcalc/suites.hpp"

using namespace prefcalc;

namespace {

ExprPtr neg(ExprPtr e) { return Expr::complement(std::move(e)); }

// linear curves with U_x(6) = 0.6 and U_y(5) = 0.5
UtilityModel independent_model() {
    return product_model({UtilityCurve::linear(0, 10), UtilityCurve::linear(0, 10)},
                         AttributeSpace::create({{"x", {0, 6, 10}}, {"y", {0, 5, 10}}}));
}

// U(x1,y1) = 0.2, U(x1,ymax) = 0.5 on a 3x3 grid
UtilityModel conditional_table() {
    SpacePtr space = AttributeSpace::create({{"x", {0, 1, 2}}, {"y", {0, 1, 2}}});
    return UtilityModel(space, UtilityTable{{0, 0, 0, 0, 0.2, 0.5, 0, 0.6, 1}});
}

}  // namespace

TEST_CASE("evaluation follows the complement and inclusion-exclusion rules") {
    UtilityModel m = independent_model();
    const ExprPtr xb = Expr::atom("x", 6), yc = Expr::atom("y", 5);

    CHECK(eval_utility(disj(xb, neg(xb)), m) == 1.0);
    CHECK(eval_utility(conj(xb, neg(xb)), m) == 0.0);
    CHECK(eval_utility(conj(xb, yc), m) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(eval_utility(disj(xb, yc), m) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(eval_utility(conj(neg(xb), yc), m) == doctest::Approx(0.2).epsilon(1e-15));

    // cross-check every one of those against the grid oracle
    MassFunction masses = mobius_masses(m);
    for (const ExprPtr& e :
         {conj(xb, yc), disj(xb, yc), conj(neg(xb), yc), disj(xb, neg(yc))}) {
        const double oracle = measure(eval_domain(e, m.space()), masses);
        CHECK(eval_utility(e, m) == doctest::Approx(oracle).epsilon(1e-12));
    }
}

TEST_CASE("product models accept off-grid levels, tables do not") {
    UtilityModel m = independent_model();
    CHECK(eval_utility(Expr::atom("x", 3), m) == doctest::Approx(0.3).epsilon(1e-15));
    UtilityModel t = tabulate(m);
    CHECK_THROWS_AS(eval_utility(Expr::atom("x", 3), t), DomainError);
    CHECK_THROWS_AS(eval_utility(Expr::atom("q", 3), m), DomainError);
}

TEST_CASE("the complement rule holds exactly for random expressions") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 150; ++t) {
        SpacePtr space = random_space(rng, 3, 5);
        UtilityModel model = random_model(rng, space);
        ExprPtr e = random_expr(rng, space, 5);
        const double sum = eval_utility(e, model) + eval_utility(neg(e), model);
        CHECK(std::abs(sum - 1.0) <= 1e-15);
    }
}

TEST_CASE("inclusion-exclusion balances for atom pairs") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 50; ++t) {
        SpacePtr space = random_space(rng, 3, 5);
        UtilityModel model = random_model(rng, space);
        const ExprPtr a = Expr::atom(random_atom(rng, *space));
        const ExprPtr b = Expr::atom(random_atom(rng, *space));
        const double lhs = eval_utility(disj(a, b), model) + eval_utility(conj(a, b), model);
        const double rhs = eval_utility(a, model) + eval_utility(b, model);
        CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
}

TEST_CASE("conditional utility implements the product rule") {
    UtilityModel m = independent_model();
    const ExprPtr xb = Expr::atom("x", 6), yc = Expr::atom("y", 5);

    // independence: conditioning changes nothing
    CHECK(conditional_utility(yc, xb, m) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(conditional_utility(xb, xb, m) == 1.0);

    UtilityModel t = conditional_table();
    CHECK(conditional_utility(Expr::atom("y", 1), Expr::atom("x", 1), t) ==
          doctest::Approx(0.4).epsilon(1e-15));

    // product-rule consistency on random inputs
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 80; ++trial) {
        SpacePtr space = random_space(rng, 3, 5);
        UtilityModel model = random_model(rng, space);
        const ExprPtr a = Expr::atom(random_atom(rng, *space));
        const ExprPtr b = Expr::atom(random_atom(rng, *space));
        const double ub = eval_utility(b, model);
        if (ub == 0.0) continue;
        CHECK(std::abs(conditional_utility(a, b, model) * ub -
                       eval_utility(conj(a, b), model)) <= 1e-12);
    }
}

TEST_CASE("conditioning on zero utility is an error") {
    UtilityModel m = independent_model();
    CHECK_THROWS_AS(conditional_utility(Expr::atom("y", 5), Expr::atom("x", 0), m),
                    UndefinedConditionalError);
    CHECK_THROWS_AS(conditional_utility(Expr::atom("y", 5), Expr::bottom(), m),
                    UndefinedConditionalError);
}

TEST_CASE("bayes_update matches the conditional on a realising table") {
    // u(Y) = 0.5, u(X|Y) = 0.6, u(X) = 0.75
    CHECK(bayes_update(0.5, 0.6, 0.75) == doctest::Approx(0.4).epsilon(1e-15));

    SpacePtr space = AttributeSpace::create({{"x", {0, 1, 2}}, {"y", {0, 1, 2}}});
    UtilityModel t(space, UtilityTable{{0, 0, 0, 0, 0.3, 0.75, 0, 0.5, 1}});
    REQUIRE(validate_model(t).ok());
    const double via_table =
        conditional_utility(Expr::atom("y", 1), Expr::atom("x", 1), t);
    CHECK(std::abs(bayes_update(0.5, 0.6, 0.75) - via_table) <= 1e-15);

    // independence passes the prior through
    CHECK(bayes_update(0.37, 0.62, 0.62) == doctest::Approx(0.37).epsilon(1e-15));

    CHECK_THROWS_AS(bayes_update(0.5, 0.6, 0.0), UndefinedConditionalError);
    CHECK_THROWS_AS(bayes_update(1.5, 0.6, 0.5), Error);
}

TEST_CASE("disjunction conditionals") {
    SpacePtr space = AttributeSpace::create(
        {{"x", {0, 4, 10}}, {"y", {0, 3, 10}}, {"z", {0, 2, 10}}});
    UtilityModel m = product_model({UtilityCurve::linear(0, 10), UtilityCurve::linear(0, 10),
                                    UtilityCurve::linear(0, 10)},
                                   space);
    const Atom y{"y", 3}, x{"x", 4}, z{"z", 2};

    // independent model: z cancels, leaving u(y) + u(x) - u(y)u(x)
    const double expected = 0.3 + 0.4 - 0.3 * 0.4;
    CHECK(disjunction_given(y, x, z, m) == doctest::Approx(expected).epsilon(1e-12));

    // conditioning on the maximum level is no conditioning at all
    const Atom z_max{"z", 10};
    CHECK(disjunction_given(y, x, z_max, m) ==
          doctest::Approx(eval_utility(disj(Expr::atom(y), Expr::atom(x)), m))
              .epsilon(1e-12));

    const Atom z_min{"z", 0};
    CHECK_THROWS_AS(disjunction_given(y, x, z_min, m), UndefinedConditionalError);

    // general check against the direct evaluator ratio on random models
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        SpacePtr s = random_space(rng, 3, 5);
        UtilityModel model = random_model(rng, s);
        const Atom ya = random_atom(rng, *s), xa = random_atom(rng, *s);
        const Atom za = random_atom(rng, *s);
        const ExprPtr ze = Expr::atom(za);
        const double uz = eval_utility(ze, model);
        if (uz == 0.0) continue;
        const double direct =
            eval_utility(conj(disj(Expr::atom(ya), Expr::atom(xa)), ze), model) / uz;
        CHECK(std::abs(disjunction_given(ya, xa, za, model) - direct) <= 1e-12);
    }
}

TEST_CASE("utility independence of product models, both directions") {
    UtilityModel m = independent_model();
    IndependenceReport ab = check_utility_independence(m, "x", "y", 1e-9);
    IndependenceReport ba = check_utility_independence(m, "y", "x", 1e-9);
    CHECK(ab.independent);
    CHECK(ba.independent);
    CHECK(ab.skipped == 1);  // the zero-utility minimum level of y
    CHECK(ba.skipped == 1);
}

TEST_CASE("a one-cell perturbation breaks independence in both directions") {
    SpacePtr space = AttributeSpace::create({{"x", {0, 1, 2}}, {"y", {0, 1, 2}}});
    UtilityModel m(space, UtilityTable{{0, 0, 0, 0, 0.25 + 0.05, 0.5, 0, 0.5, 1}});
    REQUIRE(validate_model(m).ok());
    CHECK_FALSE(check_utility_independence(m, "x", "y", 1e-6).independent);
    CHECK_FALSE(check_utility_independence(m, "y", "x", 1e-6).independent);
    // a vacuous tolerance accepts anything
    CHECK(check_utility_independence(m, "x", "y", 1.0).independent);
}

TEST_CASE("independence passed one way passes the other way at 10x tolerance") {
    // tables whose first positive marginals stay comfortably above 0.1, so
    // the inference-rule bound dev(b|a) <= dev(a|b) / min marginal applies
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 30; ++trial) {
        SpacePtr space = AttributeSpace::create(
            {{"x", {0, 1, 2, 3}}, {"y", {0, 1, 2, 3}}});
        std::vector<double> mass(space->cell_count(), 0.0);
        double total = 0.0;
        for (std::size_t cell = 0; cell < space->cell_count(); ++cell) {
            const auto idx = space->multi_index(cell);
            if (idx[0] == 0 || idx[1] == 0) continue;
            double v = double(1 + pick_index(rng, 10));
            if (idx[0] == 1 && idx[1] == 1) v += 60.0;  // heavy low-corner mass
            mass[cell] = v;
            total += v;
        }
        std::vector<double> values(space->cell_count(), 0.0);
        for (std::size_t cell = 0; cell < space->cell_count(); ++cell) {
            const auto idx = space->multi_index(cell);
            double sum = 0.0;
            for (std::size_t other = 0; other < space->cell_count(); ++other) {
                const auto oidx = space->multi_index(other);
                if (oidx[0] <= idx[0] && oidx[1] <= idx[1]) sum += mass[other];
            }
            values[cell] = sum / total;
        }
        UtilityModel model(space, UtilityTable{values});
        REQUIRE(validate_model(model).ok());

        const double dev = check_utility_independence(model, "x", "y", 1e-9).max_deviation;
        const double t = std::max(dev, 1e-12);
        CHECK(check_utility_independence(model, "x", "y", t).independent);
        CHECK(check_utility_independence(model, "y", "x", 10.0 * t).independent);
    }
}

TEST_CASE("evaluation is monotone and bounded for nonnegative masses") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 80; ++trial) {
        SpacePtr space = random_space(rng, 3, 5);
        UtilityModel model = pick_index(rng, 2) == 0 ? random_product_model(rng, space)
                                                     : random_table_model(rng, space);
        ExprPtr e = random_expr(rng, space, 4);
        ExprPtr f = random_expr(rng, space, 4);
        const double ue = eval_utility(e, model);
        CHECK(ue >= -1e-12);
        CHECK(ue <= 1.0 + 1e-12);
        CHECK(eval_utility(conj(e, f), model) <= ue + 1e-12);
        CHECK(ue <= eval_utility(disj(e, f), model) + 1e-12);
    }
}

TEST_CASE("the evaluator agrees with the oracle measure") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 6; ++trial) {
        SpacePtr space = random_space(rng, 3, 6);
        UtilityModel model = random_model(rng, space);
        OracleVerificationReport report = verify_against_oracle(model, 60, 6, rng());
        INFO(report.worst_expression);
        CHECK(report.max_relative_error <= 1e-9);
    }
}

TEST_CASE("queries are capped at 64 literals") {
    UtilityModel m = independent_model();
    std::vector<ExprPtr> parts;
    for (int i = 0; i < 65; ++i) parts.push_back(Expr::atom("x", 6));
    CHECK_THROWS_AS(eval_utility(Expr::conjunction(parts), m), Error);
}

TEST_CASE("evaluation is deterministic") {
    UtilityModel m = independent_model();
    ExprPtr e = disj(conj(Expr::atom("x", 6), neg(Expr::atom("y", 5))),
                     neg(conj(Expr::atom("x", 10), Expr::atom("y", 5))));
    CHECK(eval_utility(e, m) == eval_utility(e, m));
}

TEST_CASE("grids with negative levels behave like any other grid") {
    SpacePtr space = AttributeSpace::create({{"t", {-40, -10, 0, 25}}, {"p", {-2, -1}}});
    UtilityModel m = product_model(
        {UtilityCurve::exponential(-0.05, -40, 25), UtilityCurve::linear(-2, -1)}, space);
    REQUIRE(validate_model(m).ok());

    MassFunction masses = mobius_masses(m);
    for (const ExprPtr& e :
         {conj(Expr::atom("t", -10), Expr::atom("p", -1)),
          disj(Expr::atom("t", 0), Expr::complement(Expr::atom("p", -2))),
          Expr::complement(conj(Expr::atom("t", -40), Expr::atom("p", -2)))}) {
        const double oracle = measure(eval_domain(e, space), masses);
        CHECK(eval_utility(e, m) == doctest::Approx(oracle).epsilon(1e-12));
    }
    CHECK(eval_utility(Expr::atom("t", -40), m) == 0.0);
}

TEST_CASE("concurrent queries on one model agree") {
    std::mt19937_64 rng(89);
    SpacePtr space = random_space(rng, 3, 5);
    UtilityModel model = random_model(rng, space);
    std::vector<ExprPtr> exprs;
    for (int i = 0; i < 32; ++i) exprs.push_back(random_expr(rng, space, 5));

    std::vector<double> expected;
    for (const auto& e : exprs) expected.push_back(eval_utility(e, model));

    std::vector<std::vector<double>> results(4);
    std::vector<std::thread> workers;
    for (auto& slot : results)
        workers.emplace_back([&exprs, &model, &slot] {
            for (const auto& e : exprs) slot.push_back(eval_utility(e, model));
        });
    for (auto& w : workers) w.join();
    for (const auto& slot : results) CHECK(slot == expected);
}
