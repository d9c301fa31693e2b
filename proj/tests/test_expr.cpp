#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "prefcalc/domain.hpp"
#include "prefcalc/expr.hpp"
#include "prefcalc/generators.hpp"
#include "prefcalc/parser.hpp"
#include "prefcalc/suites.hpp"

using namespace prefcalc;

namespace {

ExprPtr neg(ExprPtr e) { return Expr::complement(std::move(e)); }

ExprPtr x(double l) { return Expr::atom("x", l); }
ExprPtr y(double l) { return Expr::atom("y", l); }
ExprPtr z(double l) { return Expr::atom("z", l); }

}  // namespace

TEST_CASE("to_nnf pushes complements to the atoms") {
    CHECK(structurally_equal(to_nnf(neg(conj(x(2), y(3)))),
                             disj(neg(x(2)), neg(y(3)))));
    CHECK(structurally_equal(to_nnf(neg(disj(x(2), y(3)))),
                             conj(neg(x(2)), neg(y(3)))));
    CHECK(structurally_equal(to_nnf(neg(neg(x(2)))), x(2)));
    CHECK(structurally_equal(to_nnf(neg(Expr::top())), Expr::bottom()));
    CHECK(structurally_equal(to_nnf(neg(Expr::bottom())), Expr::top()));
}

TEST_CASE("to_nnf is idempotent and preserves domains") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        SpacePtr space = random_space(rng, 3, 5);
        ExprPtr e = random_expr(rng, space, 5);
        ExprPtr n = to_nnf(e);
        CHECK(structurally_equal(to_nnf(n), n));
        CHECK(domains_equal(eval_domain(e, space), eval_domain(n, space)));
    }
}

TEST_CASE("simplify applies idempotence, absorption and annihilation") {
    CHECK(structurally_equal(simplify(conj(x(2), x(2))), x(2)));
    CHECK(structurally_equal(simplify(conj(disj(x(2), y(3)), x(2))), x(2)));
    CHECK(structurally_equal(simplify(conj(x(2), neg(x(2)))), Expr::bottom()));
    CHECK(structurally_equal(simplify(disj(x(2), neg(x(2)))), Expr::top()));
}

TEST_CASE("simplify merges same-attribute literals") {
    // positive conjunction keeps the smaller level: lower intervals nest
    CHECK(structurally_equal(simplify(conj(x(2), x(4))), x(2)));
    CHECK(structurally_equal(simplify(disj(x(2), x(4))), x(4)));
    CHECK(structurally_equal(simplify(conj(neg(x(2)), neg(x(4)))), neg(x(4))));
    CHECK(structurally_equal(simplify(disj(neg(x(2)), neg(x(4)))), neg(x(2))));

    // cross-check the merge direction against the grid oracle
    SpacePtr space = AttributeSpace::create({{"x", {0, 1, 2, 3, 4, 5}}});
    CHECK(domains_equal(eval_domain(conj(x(2), x(4)), space), eval_domain(x(2), space)));
    CHECK(domains_equal(eval_domain(disj(x(2), x(4)), space), eval_domain(x(4), space)));
}

TEST_CASE("mixed literals on one attribute") {
    // x<=1 and x>2 cannot both hold
    CHECK(structurally_equal(simplify(conj(x(1), neg(x(2)))), Expr::bottom()));
    // the strip 1 < x <= 3 stays symbolic
    ExprPtr strip = simplify(conj(x(3), neg(x(1))));
    CHECK(strip->kind() == ExprKind::Conjunction);
    CHECK(strip->children().size() == 2);

    SpacePtr space = AttributeSpace::create({{"x", {0, 1, 2, 3, 4, 5}}});
    CHECK(eval_domain(strip, space).size() == 2);  // cells for levels 2 and 3
    CHECK(domains_equal(eval_domain(strip, space),
                        eval_domain(conj(x(3), neg(x(1))), space)));
}

TEST_CASE("canonical_equal recognises commutativity and associativity") {
    CHECK(canonical_equal(conj(x(2), y(3)), conj(y(3), x(2))));
    CHECK(canonical_equal(conj(conj(x(2), y(3)), z(1)), conj(x(2), conj(y(3), z(1)))));
    CHECK_FALSE(canonical_equal(x(2), x(3)));
}

TEST_CASE("simplify is idempotent and preserves domains") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 400; ++t) {
        SpacePtr space = random_space(rng, 3, 5);
        ExprPtr e = random_expr(rng, space, 5);
        ExprPtr s = simplify(e);
        CHECK(structurally_equal(simplify(s), s));
        CHECK(domains_equal(eval_domain(e, space), eval_domain(s, space)));
    }
}

TEST_CASE("any permutation and re-parenthesisation is canonical_equal") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 120; ++t) {
        SpacePtr space = random_space(rng, 3, 5);
        std::vector<ExprPtr> parts;
        const std::size_t n = 2 + pick_index(rng, 3);
        for (std::size_t i = 0; i < n; ++i)
            parts.push_back(random_expr(rng, space, 2));

        const bool conjunction = pick_index(rng, 2) == 0;
        auto build_flat = [&](const std::vector<ExprPtr>& v) {
            return conjunction ? Expr::conjunction(v) : Expr::disjunction(v);
        };
        ExprPtr flat = build_flat(parts);

        std::vector<ExprPtr> shuffled = parts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(canonical_equal(flat, build_flat(shuffled)));

        // right-nested re-parenthesisation
        ExprPtr nested = shuffled.back();
        for (std::size_t i = shuffled.size() - 1; i-- > 0;)
            nested = conjunction ? conj(shuffled[i], nested) : disj(shuffled[i], nested);
        CHECK(canonical_equal(flat, nested));
    }
}

TEST_CASE("the full identity table holds on random instantiations") {
    IdentitySuiteReport report = run_identity_suite(3, 6, 60, 20240817);
    CHECK(report.identities.size() == 18);
    for (const auto& r : report.identities) {
        INFO(r.name << " " << r.first_failure);
        CHECK(r.canonical_failures == 0);
        CHECK(r.domain_failures == 0);
    }
    CHECK(report.all_passed);
}

TEST_CASE("canonical form shape invariants") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        SpacePtr space = random_space(rng, 3, 5);
        ExprPtr s = simplify(random_expr(rng, space, 5));
        // complements only above atoms, conjunctions hold only literals,
        // disjunction children are sorted terms
        std::function<void(const ExprPtr&, bool)> walk = [&](const ExprPtr& e, bool root) {
            switch (e->kind()) {
                case ExprKind::Complement:
                    CHECK(e->child()->kind() == ExprKind::Atom);
                    break;
                case ExprKind::Conjunction:
                    CHECK(e->children().size() >= 2);
                    for (const auto& c : e->children()) {
                        CHECK((c->kind() == ExprKind::Atom ||
                               c->kind() == ExprKind::Complement));
                        walk(c, false);
                    }
                    break;
                case ExprKind::Disjunction: {
                    CHECK(root);
                    CHECK(e->children().size() >= 2);
                    for (std::size_t i = 1; i < e->children().size(); ++i)
                        CHECK(compare(e->children()[i - 1], e->children()[i]) < 0);
                    for (const auto& c : e->children()) {
                        CHECK(c->kind() != ExprKind::Disjunction);
                        walk(c, false);
                    }
                    break;
                }
                default:
                    break;
            }
        };
        walk(s, true);
    }
}

TEST_CASE("atom construction rejects bad input") {
    CHECK_THROWS_AS(Expr::atom("", 1), Error);
    CHECK_THROWS_AS(Expr::atom("x", std::nan("")), Error);
}
