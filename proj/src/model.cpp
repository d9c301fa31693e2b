#include "prefcalc/model.hpp"

#include <cmath>
#include <sstream>

#include "prefcalc/domain.hpp"
#include "prefcalc/errors.hpp"

namespace prefcalc {

namespace {
constexpr double kCornerTol = 1e-12;
// Skip the rectangle-increment warning scan when it would be unreasonably
// large (the scan costs cells * 2^attrs joint evaluations).
constexpr std::size_t kMassScanBudget = std::size_t{1} << 26;
}  // namespace

UtilityModel::UtilityModel(SpacePtr space, std::variant<ProductOfCurves, UtilityTable> joint,
                           std::string context)
    : space_(std::move(space)), joint_(std::move(joint)), context_(std::move(context)) {
    if (!space_) throw Error("utility model needs a space");
    if (const auto* p = std::get_if<ProductOfCurves>(&joint_)) {
        if (p->curves.size() != space_->attribute_count())
            throw Error("product model needs exactly one curve per attribute");
    } else {
        const auto& t = std::get<UtilityTable>(joint_);
        if (t.values.size() != space_->cell_count())
            throw Error("table size does not match the grid");
    }
}

double joint_utility(const std::vector<double>& point, const UtilityModel& model) {
    const SpacePtr& space = model.space();
    if (point.size() != space->attribute_count())
        throw Error("point must carry one level per attribute");
    if (model.is_product()) {
        double u = 1.0;
        for (std::size_t a = 0; a < point.size(); ++a)
            u *= model.product().curves[a](point[a]);
        return u;
    }
    std::vector<std::size_t> indices(point.size());
    for (std::size_t a = 0; a < point.size(); ++a) {
        auto idx = space->level_index(a, point[a]);
        if (!idx)
            throw DomainError("level is not a grid level of attribute '" +
                              space->attribute(a).id.name + "'");
        indices[a] = *idx;
    }
    return model.table().values[space->linear_index(indices)];
}

double joint_utility_at(const std::vector<std::size_t>& indices, const UtilityModel& model) {
    const SpacePtr& space = model.space();
    if (!model.is_product())
        return model.table().values[space->linear_index(indices)];
    double u = 1.0;
    for (std::size_t a = 0; a < indices.size(); ++a)
        u *= model.product().curves[a](space->attribute(a).levels[indices[a]]);
    return u;
}

std::string Diagnostics::to_string() const {
    std::ostringstream os;
    for (const auto& d : entries)
        os << (d.severity == Diagnostic::Severity::Error ? "error: " : "warning: ")
           << d.message << "\n";
    return os.str();
}

Diagnostics validate_model(const UtilityModel& model) {
    Diagnostics diag;
    const SpacePtr& space = model.space();
    const std::size_t n = space->attribute_count();

    for (std::size_t cell = 0; cell < space->cell_count(); ++cell) {
        const std::vector<std::size_t> idx = space->multi_index(cell);
        const double u = joint_utility_at(idx, model);

        if (!std::isfinite(u)) {
            diag.error("joint utility is not finite at cell " + std::to_string(cell));
            continue;
        }
        bool on_min_slice = false;
        for (std::size_t a = 0; a < n; ++a)
            if (idx[a] == 0) { on_min_slice = true; break; }
        if (on_min_slice && std::abs(u) > kCornerTol) {
            diag.error("joint utility must be zero when any attribute is at its minimum "
                       "(cell " + std::to_string(cell) + " has " + std::to_string(u) + ")");
        }
        bool at_max = true;
        for (std::size_t a = 0; a < n; ++a)
            if (idx[a] + 1 != space->level_count(a)) { at_max = false; break; }
        if (at_max && std::abs(u - 1.0) > kCornerTol)
            diag.error("joint utility must be one at the all-maximum prospect");

        // nondecreasing along each coordinate
        for (std::size_t a = 0; a < n; ++a) {
            if (idx[a] == 0) continue;
            std::vector<std::size_t> prev = idx;
            --prev[a];
            if (u < joint_utility_at(prev, model))
                diag.error("joint utility decreases along attribute '" +
                           space->attribute(a).id.name + "' at cell " + std::to_string(cell));
        }
    }

    if (diag.ok() && (space->cell_count() << n) <= kMassScanBudget) {
        MassFunction masses = mobius_masses(model);
        if (masses.negative_count > 0)
            diag.warn(std::to_string(masses.negative_count) +
                      " negative rectangle increment(s), smallest " +
                      std::to_string(masses.min_mass) +
                      "; signed measures still reproduce the joint utility");
    }
    return diag;
}

UtilityModel product_model(std::vector<UtilityCurve> curves, SpacePtr space,
                           std::string context) {
    if (!space) throw Error("product model needs a space");
    if (curves.size() != space->attribute_count())
        throw Error("product model needs exactly one curve per attribute");
    for (std::size_t a = 0; a < curves.size(); ++a) {
        if (curves[a].min() != space->minimum(a) || curves[a].max() != space->maximum(a))
            throw Error("curve range of attribute '" + space->attribute(a).id.name +
                        "' does not match its level range");
    }
    return UtilityModel(std::move(space), ProductOfCurves{std::move(curves)},
                        std::move(context));
}

UtilityModel tabulate(const UtilityModel& model) {
    const SpacePtr& space = model.space();
    UtilityTable table;
    table.values.resize(space->cell_count());
    for (std::size_t cell = 0; cell < space->cell_count(); ++cell)
        table.values[cell] = joint_utility_at(space->multi_index(cell), model);
    return UtilityModel(space, std::move(table), model.context());
}

}  // namespace prefcalc
