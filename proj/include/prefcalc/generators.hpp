#ifndef PREFCALC_GENERATORS_HPP
#define PREFCALC_GENERATORS_HPP

#include <random>

#include "prefcalc/expr.hpp"
#include "prefcalc/model.hpp"
#include "prefcalc/rng.hpp"
#include "prefcalc/space.hpp"

namespace prefcalc {

// Seeded generators for the property suites (the identities and verify
// commands) and the tests.  All draws go through the generator passed in, so
// a fixed seed reproduces the full trial sequence.

// A space with 1..max_attrs attributes, each holding 2..max_levels sorted
// distinct levels in [0, 10).
SpacePtr random_space(std::mt19937_64& rng, int max_attrs, int max_levels);

// A random attribute at a random grid level of the space.
Atom random_atom(std::mt19937_64& rng, const AttributeSpace& space);

// A random expression over grid atoms of the space.  Depth is bounded by
// max_depth and the total number of literals by `literal_budget`; TOP and
// BOT leaves appear occasionally.
ExprPtr random_expr(std::mt19937_64& rng, const SpacePtr& space, int max_depth,
                    int literal_budget = 48);

// A normalised strictly increasing curve of a random family on [min, max].
UtilityCurve random_curve(std::mt19937_64& rng, double min, double max);

// Utility-independent model with one random curve per attribute.
UtilityModel random_product_model(std::mt19937_64& rng, SpacePtr space);

// Tabulated model built from integer cell masses over a common denominator,
// so corners and slices are exact and the table is nondecreasing by
// construction.  `interior_floor` > 0 guarantees strictly positive utilities
// away from the minimum slices.
UtilityModel random_table_model(std::mt19937_64& rng, SpacePtr space,
                                int interior_floor = 0);

// Product or table, evenly.
UtilityModel random_model(std::mt19937_64& rng, SpacePtr space);

}  // namespace prefcalc

#endif  // PREFCALC_GENERATORS_HPP
