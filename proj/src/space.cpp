#include "prefcalc/space.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "prefcalc/errors.hpp"

namespace prefcalc {

std::shared_ptr<const AttributeSpace>
AttributeSpace::create(std::vector<std::pair<std::string, std::vector<double>>> attributes) {
    if (attributes.empty())
        throw Error("attribute space needs at least one attribute");

    auto space = std::make_shared<AttributeSpace>();
    std::unordered_set<std::string> seen;
    std::size_t cells = 1;
    for (std::size_t i = 0; i < attributes.size(); ++i) {
        auto& [name, levels] = attributes[i];
        if (name.empty())
            throw Error("attribute name must be nonempty");
        if (!seen.insert(name).second)
            throw Error("duplicate attribute name '" + name + "'");
        if (levels.size() < 2)
            throw Error("attribute '" + name + "' needs at least 2 levels");
        for (std::size_t k = 0; k < levels.size(); ++k) {
            if (!std::isfinite(levels[k]))
                throw Error("attribute '" + name + "' has a non-finite level");
            if (k > 0 && !(levels[k - 1] < levels[k]))
                throw Error("levels of attribute '" + name + "' must be strictly increasing");
        }
        if (cells > kMaxCells / levels.size())
            throw Error("grid exceeds the cell cap of 1000000");
        cells *= levels.size();
        space->attributes_.push_back(Attribute{AttributeId{std::move(name), i}, std::move(levels)});
    }
    space->cell_count_ = cells;

    space->strides_.assign(space->attributes_.size(), 1);
    for (std::size_t i = space->attributes_.size(); i-- > 1;)
        space->strides_[i - 1] = space->strides_[i] * space->attributes_[i].levels.size();
    return space;
}

std::optional<std::size_t> AttributeSpace::find(const std::string& name) const {
    for (const auto& a : attributes_)
        if (a.id.name == name) return a.id.index;
    return std::nullopt;
}

std::optional<std::size_t> AttributeSpace::level_index(std::size_t attr, double level) const {
    const auto& levels = attributes_[attr].levels;
    auto it = std::lower_bound(levels.begin(), levels.end(), level);
    if (it != levels.end() && *it == level)
        return static_cast<std::size_t>(it - levels.begin());
    return std::nullopt;
}

std::size_t AttributeSpace::linear_index(const std::vector<std::size_t>& indices) const {
    std::size_t linear = 0;
    for (std::size_t i = 0; i < attributes_.size(); ++i)
        linear += indices[i] * strides_[i];
    return linear;
}

std::vector<std::size_t> AttributeSpace::multi_index(std::size_t linear) const {
    std::vector<std::size_t> indices(attributes_.size());
    for (std::size_t i = 0; i < attributes_.size(); ++i) {
        indices[i] = linear / strides_[i];
        linear %= strides_[i];
    }
    return indices;
}

bool AttributeSpace::operator==(const AttributeSpace& other) const {
    if (attributes_.size() != other.attributes_.size()) return false;
    for (std::size_t i = 0; i < attributes_.size(); ++i) {
        if (attributes_[i].id.name != other.attributes_[i].id.name) return false;
        if (attributes_[i].levels != other.attributes_[i].levels) return false;
    }
    return true;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace prefcalc
