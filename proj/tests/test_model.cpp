#include <doctest.h>

#include <random>

#include "prefcalc/domain.hpp"
#include "prefcalc/errors.hpp"
#include "prefcalc/generators.hpp"
#include "prefcalc/model.hpp"

using namespace prefcalc;

namespace {

SpacePtr two_linear_space() {
    return AttributeSpace::create({{"x", {0, 6, 10}}, {"y", {0, 5, 10}}});
}

UtilityModel two_linear_model() {
    return product_model({UtilityCurve::linear(0, 10), UtilityCurve::linear(0, 10)},
                         two_linear_space());
}

}  // namespace

TEST_CASE("joint utility of a product model multiplies the curve values") {
    UtilityModel m = two_linear_model();
    CHECK(joint_utility({6, 5}, m) == 0.3);        // 0.6 * 0.5
    CHECK(joint_utility({0, 5}, m) == 0.0);        // any minimum forces zero
    CHECK(joint_utility({6, 0}, m) == 0.0);
    CHECK(joint_utility({10, 10}, m) == 1.0);
    // single-attribute reading: the other attribute sits at its maximum
    CHECK(joint_utility({10, 5}, m) == 0.5);
}

TEST_CASE("tabulating two linear curves gives the product table") {
    SpacePtr space = AttributeSpace::create({{"x", {0, 1, 2}}, {"y", {0, 1, 2}}});
    UtilityModel m = tabulate(product_model(
        {UtilityCurve::linear(0, 2), UtilityCurve::linear(0, 2)}, space));
    const auto& v = m.table().values;
    CHECK(v[0] == 0.0);                        // (0,0)
    CHECK(v[8] == 1.0);                        // (2,2)
    CHECK(v[4] == 0.25);                       // (1,1)
    CHECK(v[5] == 0.5);                        // (1,2)
    CHECK(validate_model(m).ok());
}

TEST_CASE("table models require exact grid levels") {
    SpacePtr space = AttributeSpace::create({{"x", {0, 1, 2}}});
    UtilityModel m(space, UtilityTable{{0.0, 0.5, 1.0}});
    CHECK(joint_utility({1}, m) == 0.5);
    CHECK_THROWS_AS(joint_utility({0.5}, m), DomainError);
}

TEST_CASE("validation flags the attribute-dominance violations") {
    SpacePtr space = AttributeSpace::create({{"x", {0, 1, 2}}, {"y", {0, 1, 2}}});

    SUBCASE("nonzero all-minimum corner") {
        UtilityTable t{{0.1, 0, 0, 0, 0.25, 0.5, 0, 0.5, 1}};
        CHECK_FALSE(validate_model(UtilityModel(space, t)).ok());
    }
    SUBCASE("nonzero minimum slice") {
        UtilityTable t{{0, 0.2, 0, 0, 0.25, 0.5, 0, 0.5, 1}};
        CHECK_FALSE(validate_model(UtilityModel(space, t)).ok());
    }
    SUBCASE("all-maximum corner differs from one") {
        UtilityTable t{{0, 0, 0, 0, 0.25, 0.5, 0, 0.5, 0.9}};
        CHECK_FALSE(validate_model(UtilityModel(space, t)).ok());
    }
    SUBCASE("decreasing along x at fixed y") {
        UtilityTable t{{0, 0, 0, 0, 0.6, 0.7, 0, 0.5, 1}};
        CHECK_FALSE(validate_model(UtilityModel(space, t)).ok());
    }
    SUBCASE("a valid table passes") {
        UtilityTable t{{0, 0, 0, 0, 0.25, 0.5, 0, 0.5, 1}};
        CHECK(validate_model(UtilityModel(space, t)).ok());
    }
}

TEST_CASE("non-totally-monotone tables warn instead of failing") {
    SpacePtr space = AttributeSpace::create({{"x", {0, 1, 2}}, {"y", {0, 1, 2}}});
    // increasing in both coordinates, but the top-right rectangle increment
    // is 1 - 0.9 - 0.9 + 0.5 < 0
    UtilityModel m(space, UtilityTable{{0, 0, 0, 0, 0.5, 0.9, 0, 0.9, 1}});
    Diagnostics diag = validate_model(m);
    CHECK(diag.ok());
    bool warned = false;
    for (const auto& d : diag.entries)
        if (d.severity == Diagnostic::Severity::Warning) warned = true;
    CHECK(warned);

    MassFunction masses = mobius_masses(m);
    CHECK(masses.negative_count == 1);
    CHECK(masses.min_mass == doctest::Approx(-0.3).epsilon(1e-12));
    CHECK(masses.total() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("product models of valid curves validate cleanly") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 40; ++t) {
        SpacePtr space = random_space(rng, 3, 5);
        UtilityModel m = random_product_model(rng, space);
        CHECK(validate_model(m).ok());
        CHECK(mobius_masses(m).negative_count == 0);
    }
}

TEST_CASE("model construction rejects mismatched shapes") {
    SpacePtr space = two_linear_space();
    CHECK_THROWS_AS(product_model({UtilityCurve::linear(0, 10)}, space), Error);
    CHECK_THROWS_AS(product_model({UtilityCurve::linear(0, 10), UtilityCurve::linear(0, 9)},
                                  space),
                    Error);
    CHECK_THROWS_AS(UtilityModel(space, UtilityTable{{0, 1}}), Error);
}
