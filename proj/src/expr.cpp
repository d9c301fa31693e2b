#include "prefcalc/expr.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "prefcalc/errors.hpp"

namespace prefcalc {

// ── Builders ────────────────────────────────────────────────────────────────

ExprPtr Expr::atom(std::string attribute, double level) {
    return atom(Atom{std::move(attribute), level});
}

ExprPtr Expr::atom(Atom a) {
    if (a.attribute.empty())
        throw Error("atom attribute name must be nonempty");
    if (!std::isfinite(a.level))
        throw Error("atom level must be finite");
    return std::make_shared<Expr>(ExprKind::Atom, std::move(a), std::vector<ExprPtr>{});
}

ExprPtr Expr::complement(ExprPtr child) {
    if (!child) throw Error("complement of null expression");
    return std::make_shared<Expr>(ExprKind::Complement, Atom{},
                                  std::vector<ExprPtr>{std::move(child)});
}

ExprPtr Expr::conjunction(std::vector<ExprPtr> children) {
    if (children.empty()) return top();
    if (children.size() == 1) return children[0];
    return std::make_shared<Expr>(ExprKind::Conjunction, Atom{}, std::move(children));
}

ExprPtr Expr::disjunction(std::vector<ExprPtr> children) {
    if (children.empty()) return bottom();
    if (children.size() == 1) return children[0];
    return std::make_shared<Expr>(ExprKind::Disjunction, Atom{}, std::move(children));
}

ExprPtr Expr::top() {
    static const ExprPtr t =
        std::make_shared<Expr>(ExprKind::Top, Atom{}, std::vector<ExprPtr>{});
    return t;
}

ExprPtr Expr::bottom() {
    static const ExprPtr b =
        std::make_shared<Expr>(ExprKind::Bottom, Atom{}, std::vector<ExprPtr>{});
    return b;
}

std::size_t Expr::literal_count() const {
    switch (kind_) {
        case ExprKind::Atom: return 1;
        case ExprKind::Top:
        case ExprKind::Bottom: return 0;
        default: {
            std::size_t n = 0;
            for (const auto& c : children_) n += c->literal_count();
            return n;
        }
    }
}

// ── Ordering ────────────────────────────────────────────────────────────────

namespace {

bool is_literal(const Expr& e) {
    return e.kind() == ExprKind::Atom ||
           (e.kind() == ExprKind::Complement && e.child()->kind() == ExprKind::Atom);
}

int sort_rank(const Expr& e) {
    if (is_literal(e)) return 0;
    switch (e.kind()) {
        case ExprKind::Top: return 1;
        case ExprKind::Bottom: return 2;
        case ExprKind::Complement: return 3;
        case ExprKind::Conjunction: return 4;
        default: return 5;  // Disjunction
    }
}

int cmp(double a, double b) { return a < b ? -1 : (a > b ? 1 : 0); }

}  // namespace

int compare(const ExprPtr& a, const ExprPtr& b) {
    int ra = sort_rank(*a), rb = sort_rank(*b);
    if (ra != rb) return ra < rb ? -1 : 1;
    if (ra == 0) {
        bool na = a->kind() == ExprKind::Complement;
        const Atom& aa = na ? a->child()->atom_value() : a->atom_value();
        bool nb = b->kind() == ExprKind::Complement;
        const Atom& ab = nb ? b->child()->atom_value() : b->atom_value();
        if (int c = aa.attribute.compare(ab.attribute)) return c < 0 ? -1 : 1;
        if (int c = cmp(aa.level, ab.level)) return c;
        return static_cast<int>(na) - static_cast<int>(nb);  // atom before complement
    }
    if (ra == 1 || ra == 2) return 0;  // Top/Bottom are singletons
    if (ra == 3) return compare(a->child(), b->child());
    const auto& ca = a->children();
    const auto& cb = b->children();
    for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i)
        if (int c = compare(ca[i], cb[i])) return c;
    if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
    return 0;
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) { return compare(a, b) == 0; }

// ── Negation normal form ────────────────────────────────────────────────────

ExprPtr to_nnf(const ExprPtr& e) {
    switch (e->kind()) {
        case ExprKind::Atom:
        case ExprKind::Top:
        case ExprKind::Bottom:
            return e;
        case ExprKind::Conjunction:
        case ExprKind::Disjunction: {
            std::vector<ExprPtr> kids;
            kids.reserve(e->children().size());
            for (const auto& c : e->children()) kids.push_back(to_nnf(c));
            return e->kind() == ExprKind::Conjunction ? Expr::conjunction(std::move(kids))
                                                      : Expr::disjunction(std::move(kids));
        }
        case ExprKind::Complement: {
            const ExprPtr& c = e->child();
            switch (c->kind()) {
                case ExprKind::Atom:
                    return e;
                case ExprKind::Complement:  // ~~e = e
                    return to_nnf(c->child());
                case ExprKind::Top:
                    return Expr::bottom();
                case ExprKind::Bottom:
                    return Expr::top();
                case ExprKind::Conjunction:
                case ExprKind::Disjunction: {
                    // De Morgan: ~(a.b) = ~a | ~b and ~(a|b) = ~a . ~b
                    std::vector<ExprPtr> kids;
                    kids.reserve(c->children().size());
                    for (const auto& k : c->children())
                        kids.push_back(to_nnf(Expr::complement(k)));
                    return c->kind() == ExprKind::Conjunction
                               ? Expr::disjunction(std::move(kids))
                               : Expr::conjunction(std::move(kids));
                }
            }
        }
    }
    throw Error("unreachable expression kind");
}

// ── Canonicalisation ────────────────────────────────────────────────────────
//
// Internally a canonical expression is a set of terms.  A term is a
// conjunction of literals, stored per attribute as interval bounds:
//
//   upper = u   from the positive literal x=u   (domain x <= u)
//   lower = l   from the negative literal ~x=l  (domain x >  l)
//
// Merging repeated literals takes min over uppers and max over lowers (lower
// intervals are nested).  A term whose bounds satisfy upper <= lower on some
// attribute is empty on every grid containing its levels and is dropped.

namespace {

struct Bounds {
    std::optional<double> upper;
    std::optional<double> lower;

    bool operator==(const Bounds& other) const {
        return upper == other.upper && lower == other.lower;
    }
};

using Term = std::map<std::string, Bounds>;

// Conjoin `b` into `a`; false when the result is an empty term.
bool combine_into(Term& a, const Term& b) {
    for (const auto& [attr, bounds] : b) {
        Bounds& mine = a[attr];
        if (bounds.upper && (!mine.upper || *bounds.upper < *mine.upper))
            mine.upper = bounds.upper;
        if (bounds.lower && (!mine.lower || *bounds.lower > *mine.lower))
            mine.lower = bounds.lower;
        if (mine.upper && mine.lower && *mine.upper <= *mine.lower)
            return false;
    }
    return true;
}

// True when every grid cell of `sub` lies in `super`: each constraint of
// `super` must be implied by a constraint of `sub`.
bool subsumes(const Term& super, const Term& sub) {
    for (const auto& [attr, bounds] : super) {
        auto it = sub.find(attr);
        if (bounds.upper &&
            (it == sub.end() || !it->second.upper || *it->second.upper > *bounds.upper))
            return false;
        if (bounds.lower &&
            (it == sub.end() || !it->second.lower || *it->second.lower < *bounds.lower))
            return false;
    }
    return true;
}

// Disjunctive normal form of an NNF expression.  No term is empty; the empty
// *map* as a term denotes Top.
std::vector<Term> dnf(const ExprPtr& e) {
    switch (e->kind()) {
        case ExprKind::Atom:
            return {Term{{e->atom_value().attribute, Bounds{e->atom_value().level, {}}}}};
        case ExprKind::Complement:
            if (e->child()->kind() != ExprKind::Atom)
                throw Error("internal: expression not in negation normal form");
            return {Term{{e->child()->atom_value().attribute,
                          Bounds{{}, e->child()->atom_value().level}}}};
        case ExprKind::Top:
            return {Term{}};
        case ExprKind::Bottom:
            return {};
        case ExprKind::Disjunction: {
            std::vector<Term> out;
            for (const auto& c : e->children()) {
                auto sub = dnf(c);
                out.insert(out.end(), sub.begin(), sub.end());
            }
            return out;
        }
        case ExprKind::Conjunction: {
            std::vector<Term> acc{Term{}};
            for (const auto& c : e->children()) {
                std::vector<Term> sub = dnf(c);
                std::vector<Term> next;
                next.reserve(acc.size() * sub.size());
                for (const auto& t1 : acc)
                    for (const auto& t2 : sub) {
                        Term merged = t1;
                        if (combine_into(merged, t2)) next.push_back(std::move(merged));
                    }
                acc = std::move(next);
                if (acc.empty()) break;
            }
            return acc;
        }
    }
    throw Error("unreachable expression kind");
}

ExprPtr term_to_expr(const Term& t) {
    std::vector<ExprPtr> literals;
    for (const auto& [attr, bounds] : t) {
        if (bounds.upper) literals.push_back(Expr::atom(attr, *bounds.upper));
        if (bounds.lower) literals.push_back(Expr::complement(Expr::atom(attr, *bounds.lower)));
    }
    std::sort(literals.begin(), literals.end(),
              [](const ExprPtr& a, const ExprPtr& b) { return compare(a, b) < 0; });
    return Expr::conjunction(std::move(literals));
}

// Two terms with identical constraints except on one attribute merge when
// their level intervals (lower, upper] on that attribute overlap or touch;
// the union is then a single interval.  Missing bounds act as infinities.
// This is the disjunction side of literal merging; it also covers the
// complementary pair (s . x=l) | (s . ~x=l) -> s.
std::optional<Term> glue_on_one_attribute(const Term& a, const Term& b) {
    const std::string* differing = nullptr;
    for (const auto& [attr, bounds] : a) {
        auto it = b.find(attr);
        if (it != b.end() && it->second == bounds) continue;
        if (differing) return std::nullopt;
        differing = &attr;
    }
    for (const auto& [attr, bounds] : b) {
        if (a.find(attr) == a.end()) {
            if (differing && *differing != attr) return std::nullopt;
            differing = &attr;
        }
    }
    if (!differing) return std::nullopt;  // identical terms are deduped elsewhere

    auto interval = [](const Term& t, const std::string& attr) {
        auto it = t.find(attr);
        return it == t.end() ? Bounds{} : it->second;
    };
    const Bounds ia = interval(a, *differing);
    const Bounds ib = interval(b, *differing);

    const bool overlap =
        (!ib.lower || !ia.upper || *ib.lower <= *ia.upper) &&
        (!ia.lower || !ib.upper || *ia.lower <= *ib.upper);
    if (!overlap) return std::nullopt;

    Bounds merged;
    if (ia.upper && ib.upper) merged.upper = std::max(*ia.upper, *ib.upper);
    if (ia.lower && ib.lower) merged.lower = std::min(*ia.lower, *ib.lower);

    Term out = a;
    if (!merged.upper && !merged.lower) out.erase(*differing);
    else out[*differing] = merged;
    return out;
}

// Applies absorption and single-attribute interval gluing until stable.
void reduce_terms(std::vector<Term>& terms) {
    bool changed = true;
    while (changed) {
        changed = false;

        // dedupe + absorption: drop any term contained in another term
        for (std::size_t i = 0; i < terms.size(); ++i) {
            for (std::size_t j = 0; j < terms.size();) {
                if (i != j &&
                    (terms[i] == terms[j] || subsumes(terms[i], terms[j]))) {
                    terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(j));
                    if (j < i) --i;
                    changed = true;
                } else {
                    ++j;
                }
            }
        }

        for (std::size_t i = 0; i < terms.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < terms.size() && !changed; ++j) {
                if (auto merged = glue_on_one_attribute(terms[i], terms[j])) {
                    terms[i] = std::move(*merged);
                    terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                }
            }
        }
    }
}

}  // namespace

ExprPtr simplify(const ExprPtr& e) {
    std::vector<Term> terms = dnf(to_nnf(e));
    reduce_terms(terms);

    if (terms.empty()) return Expr::bottom();
    for (const auto& t : terms)
        if (t.empty()) return Expr::top();

    std::vector<ExprPtr> parts;
    parts.reserve(terms.size());
    for (const auto& t : terms) parts.push_back(term_to_expr(t));
    std::sort(parts.begin(), parts.end(),
              [](const ExprPtr& a, const ExprPtr& b) { return compare(a, b) < 0; });
    return Expr::disjunction(std::move(parts));
}

bool canonical_equal(const ExprPtr& a, const ExprPtr& b) {
    return structurally_equal(simplify(a), simplify(b));
}

}  // namespace prefcalc
