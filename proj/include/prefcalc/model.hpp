#ifndef PREFCALC_MODEL_HPP
#define PREFCALC_MODEL_HPP

#include <string>
#include <variant>
#include <vector>

#include "prefcalc/curve.hpp"
#include "prefcalc/space.hpp"

namespace prefcalc {

// Joint utility as a product of per-attribute curves (one per attribute, in
// space order): the utility-independent case.
struct ProductOfCurves {
    std::vector<UtilityCurve> curves;
};

// Joint utility tabulated on the grid, row-major with the last attribute
// fastest.
struct UtilityTable {
    std::vector<double> values;
};

// ── UtilityModel ────────────────────────────────────────────────────────────
// An attribute-dominance joint utility over a space: zero whenever any
// attribute sits at its minimum, one at the all-maximum prospect, and
// nondecreasing in each coordinate.  `context` is the opaque label of the
// state of preference the utilities are conditioned on; updating the state
// means switching to a different model.
class UtilityModel {
public:
    UtilityModel(SpacePtr space, std::variant<ProductOfCurves, UtilityTable> joint,
                 std::string context = {});

    const SpacePtr& space() const { return space_; }
    const std::string& context() const { return context_; }

    bool is_product() const { return std::holds_alternative<ProductOfCurves>(joint_); }
    const ProductOfCurves& product() const { return std::get<ProductOfCurves>(joint_); }
    const UtilityTable& table() const { return std::get<UtilityTable>(joint_); }

private:
    SpacePtr space_;
    std::variant<ProductOfCurves, UtilityTable> joint_;
    std::string context_;
};

// Joint utility at a prospect, one level per attribute in space order.
// Product models accept any level within range; table models require exact
// grid levels.  Throws DomainError otherwise.
double joint_utility(const std::vector<double>& point, const UtilityModel& model);

// Same, addressed by grid indices.
double joint_utility_at(const std::vector<std::size_t>& indices, const UtilityModel& model);

// ── Validation ──────────────────────────────────────────────────────────────

struct Diagnostic {
    enum class Severity { Error, Warning };
    Severity severity;
    std::string message;
};

struct Diagnostics {
    std::vector<Diagnostic> entries;

    bool ok() const {
        for (const auto& d : entries)
            if (d.severity == Diagnostic::Severity::Error) return false;
        return true;
    }
    void error(std::string msg) { entries.push_back({Diagnostic::Severity::Error, std::move(msg)}); }
    void warn(std::string msg) { entries.push_back({Diagnostic::Severity::Warning, std::move(msg)}); }
    std::string to_string() const;
};

// Checks the attribute-dominance invariants on the grid: zero on every
// minimum slice, one at the all-maximum corner, nondecreasing along each
// coordinate.  Negative rectangle increments produce a warning, not an
// error.  Tolerance on the corner/slice checks is 1e-12.
Diagnostics validate_model(const UtilityModel& model);

// Utility-independent model from one curve per attribute.  Curve ranges must
// match the attribute ranges exactly.
UtilityModel product_model(std::vector<UtilityCurve> curves, SpacePtr space,
                           std::string context = {});

// Tabulates any model on its grid (used by the CSV export round trip).
UtilityModel tabulate(const UtilityModel& model);

}  // namespace prefcalc

#endif  // PREFCALC_MODEL_HPP
