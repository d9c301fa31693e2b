#include "prefcalc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "prefcalc/errors.hpp"

namespace prefcalc {

namespace {

std::string attribute_name(std::size_t i) {
    static const char* pool[] = {"x", "y", "z", "u", "v", "w"};
    if (i < std::size(pool)) return pool[i];
    return "a" + std::to_string(i + 1);
}

}  // namespace

SpacePtr random_space(std::mt19937_64& rng, int max_attrs, int max_levels) {
    if (max_attrs < 1 || max_levels < 2)
        throw Error("random_space needs max_attrs >= 1 and max_levels >= 2");
    const std::size_t n_attrs = 1 + pick_index(rng, static_cast<std::size_t>(max_attrs));
    std::vector<std::pair<std::string, std::vector<double>>> attrs_spec;
    for (std::size_t a = 0; a < n_attrs; ++a) {
        const std::size_t n_levels =
            2 + pick_index(rng, static_cast<std::size_t>(max_levels - 1));
        std::vector<double> levels;
        while (levels.size() < n_levels) {
            const double l = uniform01(rng) * 10.0;
            if (std::find(levels.begin(), levels.end(), l) == levels.end())
                levels.push_back(l);
        }
        std::sort(levels.begin(), levels.end());
        attrs_spec.emplace_back(attribute_name(a), std::move(levels));
    }
    return AttributeSpace::create(std::move(attrs_spec));
}

Atom random_atom(std::mt19937_64& rng, const AttributeSpace& space) {
    const std::size_t a = pick_index(rng, space.attribute_count());
    const auto& levels = space.attribute(a).levels;
    return Atom{space.attribute(a).id.name, levels[pick_index(rng, levels.size())]};
}

namespace {

ExprPtr gen_expr(std::mt19937_64& rng, const SpacePtr& space, int depth, int& budget) {
    if (budget < 1)
        return uniform01(rng) < 0.5 ? Expr::top() : Expr::bottom();
    if (depth <= 0 || uniform01(rng) < 0.35) {
        const double r = uniform01(rng);
        if (r < 0.06) return Expr::top();
        if (r < 0.12) return Expr::bottom();
        --budget;
        return Expr::atom(random_atom(rng, *space));
    }
    const double r = uniform01(rng);
    if (r < 0.28)
        return Expr::complement(gen_expr(rng, space, depth - 1, budget));
    const std::size_t arity = 2 + pick_index(rng, 2);
    std::vector<ExprPtr> kids;
    for (std::size_t i = 0; i < arity; ++i)
        kids.push_back(gen_expr(rng, space, depth - 1, budget));
    return r < 0.64 ? Expr::conjunction(std::move(kids))
                    : Expr::disjunction(std::move(kids));
}

}  // namespace

ExprPtr random_expr(std::mt19937_64& rng, const SpacePtr& space, int max_depth,
                    int literal_budget) {
    int budget = literal_budget;
    return gen_expr(rng, space, max_depth, budget);
}

UtilityCurve random_curve(std::mt19937_64& rng, double min, double max) {
    switch (pick_index(rng, 3)) {
        case 0:
            return UtilityCurve::linear(min, max);
        case 1: {
            double gamma = (uniform01(rng) * 2.0 - 1.0);
            if (std::abs(gamma) < 0.05) gamma = 0.3;  // keep away from the linear limit
            return UtilityCurve::exponential(gamma, min, max);
        }
        default:
            return UtilityCurve::power(0.4 + uniform01(rng) * 2.1, min, max);
    }
}

UtilityModel random_product_model(std::mt19937_64& rng, SpacePtr space) {
    std::vector<UtilityCurve> curves;
    for (std::size_t a = 0; a < space->attribute_count(); ++a)
        curves.push_back(random_curve(rng, space->minimum(a), space->maximum(a)));
    return product_model(std::move(curves), std::move(space));
}

UtilityModel random_table_model(std::mt19937_64& rng, SpacePtr space, int interior_floor) {
    const std::size_t n = space->attribute_count();
    const std::size_t cells = space->cell_count();

    // integer masses: zero on minimum slices, floor..floor+100 elsewhere
    std::vector<std::int64_t> mass(cells, 0);
    std::int64_t total = 0;
    for (std::size_t cell = 0; cell < cells; ++cell) {
        const auto idx = space->multi_index(cell);
        if (std::any_of(idx.begin(), idx.end(), [](std::size_t i) { return i == 0; }))
            continue;
        mass[cell] = interior_floor + static_cast<std::int64_t>(pick_index(rng, 101));
        total += mass[cell];
    }
    if (total == 0) {  // degenerate draw: put everything on the top corner
        mass[cells - 1] = 1;
        total = 1;
    }

    // cumulative sums along each axis turn cell masses into rectangle totals
    std::vector<std::int64_t> cumulative = std::move(mass);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t cell = 0; cell < cells; ++cell) {
            const auto idx = space->multi_index(cell);
            if (idx[a] == 0) continue;
            auto prev = idx;
            --prev[a];
            cumulative[cell] += cumulative[space->linear_index(prev)];
        }
    }

    UtilityTable table;
    table.values.resize(cells);
    for (std::size_t cell = 0; cell < cells; ++cell)
        table.values[cell] =
            static_cast<double>(cumulative[cell]) / static_cast<double>(total);
    return UtilityModel(std::move(space), std::move(table));
}

UtilityModel random_model(std::mt19937_64& rng, SpacePtr space) {
    return pick_index(rng, 2) == 0 ? random_product_model(rng, std::move(space))
                                   : random_table_model(rng, std::move(space));
}

}  // namespace prefcalc
