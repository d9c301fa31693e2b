#ifndef PREFCALC_MODEL_IO_HPP
#define PREFCALC_MODEL_IO_HPP

#include <iosfwd>
#include <string>

#include "prefcalc/errors.hpp"
#include "prefcalc/model.hpp"

namespace prefcalc {

// The file could not be read or does not match the model schema.
class ModelIoError : public Error {
public:
    explicit ModelIoError(const std::string& what) : Error(what) {}
};

// The file parsed, but the model violates the attribute-dominance
// invariants; carries the validate_model diagnostics.
class ModelValidationError : public Error {
public:
    ModelValidationError(const std::string& what, Diagnostics diagnostics)
        : Error(what), diagnostics_(std::move(diagnostics)) {}
    const Diagnostics& diagnostics() const { return diagnostics_; }

private:
    Diagnostics diagnostics_;
};

// Loads and validates a model from a JSON document:
//
//   {
//     "attributes": [
//       {"name": "x", "levels": [0, 10, 25, 50],
//        "curve": {"family": "exponential", "params": [0.1]}},
//       ...
//     ],
//     "joint": {"type": "product"}
//             | {"type": "table", "values": [/* row-major, last attribute
//                fastest */]},
//     "context": "optional state-of-preference label"
//   }
//
// "product" requires a curve on every attribute; curve ranges are the
// attribute's [first, last] levels.  Curve params: "linear" takes none,
// "exponential" takes [gamma], "power" takes [exponent].
UtilityModel load_model(const std::string& path);

// Same, from an in-memory document.
UtilityModel parse_model(const std::string& json_text, const std::string& origin = "<string>");

// Writes the full utility grid as CSV: a header of attribute names plus
// "utility", one row per cell in lexicographic grid order (first attribute
// slowest), 12 significant digits, LF newlines.
void write_grid_csv(const UtilityModel& model, std::ostream& out);

}  // namespace prefcalc

#endif  // PREFCALC_MODEL_IO_HPP
