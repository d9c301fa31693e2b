#ifndef PREFCALC_DOMAIN_HPP
#define PREFCALC_DOMAIN_HPP

#include <cstddef>
#include <vector>

#include "prefcalc/expr.hpp"
#include "prefcalc/space.hpp"

namespace prefcalc {

class UtilityModel;

// ── DomainSet ───────────────────────────────────────────────────────────────
// A subset of the grid cells of a space: the ground-truth, brute-force
// representation of the domain of a preference expression.  An atom x=b
// covers every cell whose x index is <= index(b), unconstrained elsewhere;
// the complement is the strictly-greater remainder.

class DomainSet {
public:
    DomainSet(SpacePtr space, bool filled);

    const SpacePtr& space() const { return space_; }
    bool contains(std::size_t cell) const { return cells_[cell]; }
    std::size_t size() const;                       // number of cells in the set
    std::size_t capacity() const { return cells_.size(); }

    DomainSet complement() const;
    DomainSet intersect(const DomainSet& other) const;   // throws on space mismatch
    DomainSet unite(const DomainSet& other) const;
    bool is_subset_of(const DomainSet& other) const;

    void set(std::size_t cell, bool value = true) { cells_[cell] = value; }

    bool operator==(const DomainSet& other) const;

private:
    SpacePtr space_;
    std::vector<bool> cells_;
};

// Grid semantics of an expression.  Every atom must name an attribute of the
// space and sit exactly on its grid; throws DomainError otherwise.
DomainSet eval_domain(const ExprPtr& e, const SpacePtr& space);

// Exact set equality.  Throws SpaceMismatchError when the spaces differ.
bool domains_equal(const DomainSet& a, const DomainSet& b);

// ── MassFunction ────────────────────────────────────────────────────────────
// One signed mass per grid cell such that summing masses over the rectangle
// {0..i} x {0..j} x ... reproduces the joint utility at grid point (i,j,...).
// Masses sum to one (the all-maximum normalisation); they may be negative
// when a tabulated joint is not totally monotone, which is reported via
// `negative_count` rather than treated as an error.

struct MassFunction {
    SpacePtr space;
    std::vector<double> masses;
    std::size_t negative_count = 0;
    double min_mass = 0.0;

    double total() const;
};

// Alternating-sign finite differences of the joint utility over the corners
// of each cell's lower-orthant step; out-of-range corners contribute zero.
MassFunction mobius_masses(const UtilityModel& model);

// Sum of masses over the cells of `d`.  In [0,1] when masses are
// nonnegative.  Throws SpaceMismatchError when the spaces differ.
double measure(const DomainSet& d, const MassFunction& m);

}  // namespace prefcalc

#endif  // PREFCALC_DOMAIN_HPP
