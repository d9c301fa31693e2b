#ifndef PREFCALC_SPACE_HPP
#define PREFCALC_SPACE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace prefcalc {

// Identity of an attribute within a space: a nonempty name, unique within the
// space, plus its position in the space's attribute order.
struct AttributeId {
    std::string name;
    std::size_t index = 0;
};

// ── AttributeSpace ──────────────────────────────────────────────────────────
// An ordered list of attributes, each carrying a finite, strictly increasing
// grid of levels.  The first level of an attribute is its minimum, the last
// its maximum.  Spaces are immutable after construction; every grid-based
// object (DomainSet, MassFunction, UtilityModel) holds a shared reference.
//
// The total grid is the cartesian product of the per-attribute level lists.
// Cells are addressed by one index per attribute and linearised row-major
// with the LAST attribute fastest (the same order used by tabulated joint
// utilities and the CSV export).

class AttributeSpace {
public:
    struct Attribute {
        AttributeId id;
        std::vector<double> levels;  // strictly increasing, size >= 2
    };

    // Throws Error on: empty attribute list, duplicate/empty names, fewer
    // than two levels, non-increasing levels, non-finite levels, or a total
    // cell count above kMaxCells.
    static std::shared_ptr<const AttributeSpace>
    create(std::vector<std::pair<std::string, std::vector<double>>> attributes);

    static constexpr std::size_t kMaxCells = 1'000'000;

    std::size_t attribute_count() const { return attributes_.size(); }
    const Attribute& attribute(std::size_t i) const { return attributes_[i]; }
    const std::vector<Attribute>& attributes() const { return attributes_; }

    // Index of the named attribute, or nullopt.
    std::optional<std::size_t> find(const std::string& name) const;

    double minimum(std::size_t attr) const { return attributes_[attr].levels.front(); }
    double maximum(std::size_t attr) const { return attributes_[attr].levels.back(); }

    // Index of an exact grid level of one attribute, or nullopt if the value
    // is not a grid point.
    std::optional<std::size_t> level_index(std::size_t attr, double level) const;

    std::size_t level_count(std::size_t attr) const { return attributes_[attr].levels.size(); }
    std::size_t cell_count() const { return cell_count_; }

    // Linearised cell index from one level-index per attribute.
    std::size_t linear_index(const std::vector<std::size_t>& indices) const;
    // Inverse of linear_index.
    std::vector<std::size_t> multi_index(std::size_t linear) const;

    bool operator==(const AttributeSpace& other) const;

private:
    std::vector<Attribute> attributes_;
    std::vector<std::size_t> strides_;  // last attribute has stride 1
    std::size_t cell_count_ = 0;
};

using SpacePtr = std::shared_ptr<const AttributeSpace>;

// True when both handles refer to the same space or to structurally equal ones.
bool same_space(const SpacePtr& a, const SpacePtr& b);

}  // namespace prefcalc

#endif  // PREFCALC_SPACE_HPP
