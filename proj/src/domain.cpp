#include "prefcalc/domain.hpp"

#include <algorithm>

#include "prefcalc/errors.hpp"
#include "prefcalc/model.hpp"

namespace prefcalc {

DomainSet::DomainSet(SpacePtr space, bool filled)
    : space_(std::move(space)), cells_(space_->cell_count(), filled) {}

std::size_t DomainSet::size() const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), true));
}

DomainSet DomainSet::complement() const {
    DomainSet out(space_, false);
    for (std::size_t i = 0; i < cells_.size(); ++i) out.cells_[i] = !cells_[i];
    return out;
}

namespace {
void require_same_space(const SpacePtr& a, const SpacePtr& b) {
    if (!same_space(a, b))
        throw SpaceMismatchError("domain operation across different attribute spaces");
}
}  // namespace

DomainSet DomainSet::intersect(const DomainSet& other) const {
    require_same_space(space_, other.space_);
    DomainSet out(space_, false);
    for (std::size_t i = 0; i < cells_.size(); ++i)
        out.cells_[i] = cells_[i] && other.cells_[i];
    return out;
}

DomainSet DomainSet::unite(const DomainSet& other) const {
    require_same_space(space_, other.space_);
    DomainSet out(space_, false);
    for (std::size_t i = 0; i < cells_.size(); ++i)
        out.cells_[i] = cells_[i] || other.cells_[i];
    return out;
}

bool DomainSet::is_subset_of(const DomainSet& other) const {
    require_same_space(space_, other.space_);
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i] && !other.cells_[i]) return false;
    return true;
}

bool DomainSet::operator==(const DomainSet& other) const {
    return same_space(space_, other.space_) && cells_ == other.cells_;
}

DomainSet eval_domain(const ExprPtr& e, const SpacePtr& space) {
    switch (e->kind()) {
        case ExprKind::Top:
            return DomainSet(space, true);
        case ExprKind::Bottom:
            return DomainSet(space, false);
        case ExprKind::Atom: {
            const Atom& a = e->atom_value();
            auto attr = space->find(a.attribute);
            if (!attr)
                throw DomainError("unknown attribute '" + a.attribute + "'");
            auto idx = space->level_index(*attr, a.level);
            if (!idx)
                throw DomainError("level of atom on attribute '" + a.attribute +
                                  "' is not a grid level");
            DomainSet out(space, false);
            for (std::size_t cell = 0; cell < space->cell_count(); ++cell)
                if (space->multi_index(cell)[*attr] <= *idx) out.set(cell);
            return out;
        }
        case ExprKind::Complement:
            return eval_domain(e->child(), space).complement();
        case ExprKind::Conjunction: {
            DomainSet out = eval_domain(e->children()[0], space);
            for (std::size_t i = 1; i < e->children().size(); ++i)
                out = out.intersect(eval_domain(e->children()[i], space));
            return out;
        }
        case ExprKind::Disjunction: {
            DomainSet out = eval_domain(e->children()[0], space);
            for (std::size_t i = 1; i < e->children().size(); ++i)
                out = out.unite(eval_domain(e->children()[i], space));
            return out;
        }
    }
    throw Error("unreachable expression kind");
}

bool domains_equal(const DomainSet& a, const DomainSet& b) {
    require_same_space(a.space(), b.space());
    return a == b;
}

double MassFunction::total() const {
    double t = 0.0;
    for (double m : masses) t += m;
    return t;
}

MassFunction mobius_masses(const UtilityModel& model) {
    const SpacePtr& space = model.space();
    const std::size_t n = space->attribute_count();

    MassFunction out;
    out.space = space;
    out.masses.resize(space->cell_count());
    out.min_mass = 0.0;

    std::vector<std::size_t> corner(n);
    for (std::size_t cell = 0; cell < space->cell_count(); ++cell) {
        const std::vector<std::size_t> idx = space->multi_index(cell);
        double mass = 0.0;
        // corners of the lower-orthant step, signed by parity
        for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
            bool in_range = true;
            int parity = 0;
            for (std::size_t a = 0; a < n; ++a) {
                if (bits & (std::size_t{1} << a)) {
                    ++parity;
                    if (idx[a] == 0) { in_range = false; break; }
                    corner[a] = idx[a] - 1;
                } else {
                    corner[a] = idx[a];
                }
            }
            if (!in_range) continue;  // joint is zero below the grid
            const double u = joint_utility_at(corner, model);
            mass += (parity % 2 == 0) ? u : -u;
        }
        out.masses[cell] = mass;
        if (mass < 0.0) {
            ++out.negative_count;
            out.min_mass = std::min(out.min_mass, mass);
        }
    }
    return out;
}

double measure(const DomainSet& d, const MassFunction& m) {
    require_same_space(d.space(), m.space);
    double sum = 0.0;
    for (std::size_t cell = 0; cell < m.masses.size(); ++cell)
        if (d.contains(cell)) sum += m.masses[cell];
    return sum;
}

}  // namespace prefcalc
