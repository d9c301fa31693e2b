#ifndef PREFCALC_EXPR_HPP
#define PREFCALC_EXPR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace prefcalc {

// ── Preference expressions ──────────────────────────────────────────────────
//
// An expression describes a domain of prospects: an atom x=b stands for the
// lower interval of prospects guaranteeing level b of attribute x, the
// complement ~e for the remaining prospects, conjunction for intersection and
// disjunction for union of domains.  Top is the full domain (x=b | ~x=b) and
// Bottom the empty one (x=b . ~x=b).
//
// Nodes are immutable and shared; all algebra functions are pure, so
// expressions can be used concurrently without synchronisation.

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class ExprKind : std::uint8_t {
    Atom,
    Complement,
    Conjunction,
    Disjunction,
    Top,
    Bottom,
};

// A guaranteed level of one attribute.  Levels are exact reals: two atoms are
// the same atom iff attribute name and level compare equal.
struct Atom {
    std::string attribute;
    double level = 0.0;

    bool operator==(const Atom& other) const {
        return attribute == other.attribute && level == other.level;
    }
};

class Expr {
public:
    // Node builders.  conjunction/disjunction collapse trivially: an empty
    // child list yields the operator's identity element (Top for conjunction,
    // Bottom for disjunction) and a single child is returned as-is.
    static ExprPtr atom(std::string attribute, double level);
    static ExprPtr atom(Atom a);
    static ExprPtr complement(ExprPtr child);
    static ExprPtr conjunction(std::vector<ExprPtr> children);
    static ExprPtr disjunction(std::vector<ExprPtr> children);
    static ExprPtr top();
    static ExprPtr bottom();

    ExprKind kind() const { return kind_; }
    const Atom& atom_value() const { return atom_; }         // kind == Atom
    const ExprPtr& child() const { return children_[0]; }    // kind == Complement
    const std::vector<ExprPtr>& children() const { return children_; }

    // Number of literal occurrences (atoms, counted under complements too).
    std::size_t literal_count() const;

    Expr(ExprKind kind, Atom a, std::vector<ExprPtr> children)
        : kind_(kind), atom_(std::move(a)), children_(std::move(children)) {}

private:
    ExprKind kind_;
    Atom atom_;
    std::vector<ExprPtr> children_;
};

// Convenience binary builders.
inline ExprPtr conj(ExprPtr a, ExprPtr b) { return Expr::conjunction({std::move(a), std::move(b)}); }
inline ExprPtr disj(ExprPtr a, ExprPtr b) { return Expr::disjunction({std::move(a), std::move(b)}); }

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

// Total order on expressions used for canonical child sorting: literals by
// (attribute name, level, node kind), literals before compound children,
// compound children lexicographically.
int compare(const ExprPtr& a, const ExprPtr& b);

// Negation normal form: pushes complements inward with the De Morgan
// identities and cancels double complements, so that Complement nodes remain
// only directly above atoms.  Domain-equivalent to the input; idempotent.
ExprPtr to_nnf(const ExprPtr& e);

// Canonical form.  Rewrites to NNF, distributes conjunction over disjunction,
// flattens, sorts children, applies idempotence, absorption and annihilation,
// and merges same-attribute literals:
//
//   x=a . x=b  ->  x=min(a,b)         ~x=a . ~x=b  ->  ~x=max(a,b)
//   x=a | x=b  ->  x=max(a,b)         ~x=a | ~x=b  ->  ~x=min(a,b)
//   x=a . ~x=b ->  Bottom when a <= b (empty strip); kept otherwise
//   x=a | ~x=a ->  Top                x=a . ~x=a   ->  Bottom
//
// and, across disjuncts differing on a single attribute, level intervals
// whose union is again an interval are glued (x=a | (~x=a . x=b) -> x=b).
//
// The result is a disjunction of conjunctions of literals (or a single term,
// a literal, Top, or Bottom), domain-equivalent to the input on every space
// covering its atoms.  Idempotent.
ExprPtr simplify(const ExprPtr& e);

// True iff simplify(a) and simplify(b) are structurally identical.
bool canonical_equal(const ExprPtr& a, const ExprPtr& b);

}  // namespace prefcalc

#endif  // PREFCALC_EXPR_HPP
