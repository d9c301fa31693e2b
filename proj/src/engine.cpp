#include "prefcalc/engine.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <unordered_map>

#include "prefcalc/errors.hpp"

namespace prefcalc {

namespace {

constexpr std::size_t kLiteralCap = 64;

using Memo = std::unordered_map<std::string, double>;

// Injective serialisation of a canonical form, used as the memo key.
void key_append(std::string& out, const ExprPtr& e) {
    switch (e->kind()) {
        case ExprKind::Top: out += 'T'; return;
        case ExprKind::Bottom: out += 'F'; return;
        case ExprKind::Atom: {
            const Atom& a = e->atom_value();
            out += 'a';
            out += std::to_string(a.attribute.size());
            out += ':';
            out += a.attribute;
            std::uint64_t bits;
            std::memcpy(&bits, &a.level, sizeof bits);
            char buf[17];
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(bits));
            out += buf;
            return;
        }
        case ExprKind::Complement:
            out += '~';
            key_append(out, e->child());
            return;
        case ExprKind::Conjunction:
        case ExprKind::Disjunction:
            out += e->kind() == ExprKind::Conjunction ? '&' : '|';
            out += '(';
            for (const auto& c : e->children()) key_append(out, c);
            out += ')';
            return;
    }
}

std::string canonical_key(const ExprPtr& e) {
    std::string out;
    key_append(out, e);
    return out;
}

// Utility of a conjunction of positive literals: per-attribute guaranteed
// level, all other attributes at their maximum.
double positive_conjunction_utility(const std::vector<ExprPtr>& literals,
                                    const UtilityModel& model) {
    const SpacePtr& space = model.space();
    std::vector<double> point(space->attribute_count());
    for (std::size_t a = 0; a < point.size(); ++a) point[a] = space->maximum(a);
    for (const auto& lit : literals) {
        const Atom& atom = lit->atom_value();
        auto attr = space->find(atom.attribute);
        if (!attr) throw DomainError("unknown attribute '" + atom.attribute + "'");
        if (atom.level < point[*attr]) point[*attr] = atom.level;
    }
    return joint_utility(point, model);
}

double eval_canonical(const ExprPtr& s, const UtilityModel& model, Memo& memo) {
    switch (s->kind()) {
        case ExprKind::Top: return 1.0;
        case ExprKind::Bottom: return 0.0;
        case ExprKind::Atom:
            return positive_conjunction_utility({s}, model);
        case ExprKind::Complement:
            return 1.0 - eval_canonical(s->child(), model, memo);
        default: break;
    }

    const std::string key = canonical_key(s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    double value = 0.0;
    if (s->kind() == ExprKind::Disjunction) {
        // left fold of U(a|b) = U(a) + U(b) - U(a.b) over the disjuncts
        const auto& kids = s->children();
        value = eval_canonical(kids[0], model, memo);
        std::vector<ExprPtr> seen{kids[0]};
        for (std::size_t i = 1; i < kids.size(); ++i) {
            const double u_next = eval_canonical(kids[i], model, memo);
            ExprPtr overlap = simplify(
                conj(Expr::disjunction(std::vector<ExprPtr>(seen)), kids[i]));
            const double u_overlap = eval_canonical(overlap, model, memo);
            value += u_next - u_overlap;
            seen.push_back(kids[i]);
        }
    } else {
        // conjunction of literals; expand the last negative literal, if any:
        // U(c . ~x=b) = U(c) - U(c . x=b)
        const auto& kids = s->children();
        std::size_t neg = kids.size();
        for (std::size_t i = kids.size(); i-- > 0;) {
            if (kids[i]->kind() == ExprKind::Complement) { neg = i; break; }
        }
        if (neg == kids.size()) {
            value = positive_conjunction_utility(kids, model);
        } else {
            std::vector<ExprPtr> rest;
            rest.reserve(kids.size() - 1);
            for (std::size_t i = 0; i < kids.size(); ++i)
                if (i != neg) rest.push_back(kids[i]);
            ExprPtr without = Expr::conjunction(std::vector<ExprPtr>(rest));
            rest.push_back(kids[neg]->child());
            ExprPtr with_positive = simplify(Expr::conjunction(std::move(rest)));
            value = eval_canonical(without, model, memo) -
                    eval_canonical(with_positive, model, memo);
        }
    }
    memo.emplace(key, value);
    return value;
}

}  // namespace

double eval_utility(const ExprPtr& e, const UtilityModel& model) {
    if (!e) throw Error("null expression");
    if (e->literal_count() > kLiteralCap)
        throw Error("expression exceeds the cap of 64 literals per query");
    // complement rule at the root, so U(e) + U(~e) = 1 holds by construction
    if (e->kind() == ExprKind::Complement)
        return 1.0 - eval_utility(e->child(), model);
    Memo memo;
    return eval_canonical(simplify(e), model, memo);
}

double conditional_utility(const ExprPtr& a, const ExprPtr& given,
                           const UtilityModel& model) {
    const double u_given = eval_utility(given, model);
    if (u_given == 0.0)
        throw UndefinedConditionalError(
            "conditioning on an expression of zero utility");
    return eval_utility(conj(a, given), model) / u_given;
}

double bayes_update(double u_y, double u_x_given_y, double u_x) {
    if (!(u_y >= 0.0 && u_y <= 1.0) || !(u_x_given_y >= 0.0 && u_x_given_y <= 1.0) ||
        !(u_x >= 0.0 && u_x <= 1.0))
        throw Error("bayes_update inputs must lie in [0,1]");
    if (u_x == 0.0)
        throw UndefinedConditionalError("bayes_update with zero-utility conditioner");
    return u_y * u_x_given_y / u_x;
}

double disjunction_given(const Atom& y, const Atom& x, const Atom& z,
                         const UtilityModel& model) {
    const ExprPtr ye = Expr::atom(y), xe = Expr::atom(x), ze = Expr::atom(z);
    const double u_z = eval_utility(ze, model);
    if (u_z == 0.0)
        throw UndefinedConditionalError(
            "disjunction conditional with zero-utility conditioner");
    const double u_yz = eval_utility(conj(ye, ze), model);
    const double u_xz = eval_utility(conj(xe, ze), model);
    const double u_yxz = eval_utility(Expr::conjunction({ye, xe, ze}), model);
    return (u_yz + u_xz - u_yxz) / u_z;
}

IndependenceReport check_utility_independence(const UtilityModel& model,
                                              const std::string& attr_a,
                                              const std::string& attr_b, double tol) {
    const SpacePtr& space = model.space();
    auto ia = space->find(attr_a);
    auto ib = space->find(attr_b);
    if (!ia) throw DomainError("unknown attribute '" + attr_a + "'");
    if (!ib) throw DomainError("unknown attribute '" + attr_b + "'");

    IndependenceReport report;
    for (double level_b : space->attribute(*ib).levels) {
        const ExprPtr cond = Expr::atom(attr_b, level_b);
        const double u_b = eval_utility(cond, model);
        if (u_b == 0.0) {
            ++report.skipped;
            continue;
        }
        for (double level_a : space->attribute(*ia).levels) {
            const ExprPtr a = Expr::atom(attr_a, level_a);
            const double marginal = eval_utility(a, model);
            const double conditional = eval_utility(conj(a, cond), model) / u_b;
            const double dev = std::abs(conditional - marginal);
            ++report.pairs_tested;
            if (dev > report.max_deviation) {
                report.max_deviation = dev;
                report.worst_level_a = level_a;
                report.worst_level_b = level_b;
            }
        }
    }
    report.independent = report.max_deviation <= tol;
    return report;
}

}  // namespace prefcalc
