#include "prefcalc/model_io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "prefcalc/parser.hpp"

namespace prefcalc {

namespace {

using nlohmann::json;

double require_finite_number(const json& j, const std::string& what) {
    if (!j.is_number())
        throw ModelIoError(what + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v))
        throw ModelIoError(what + " must be finite");
    return v;
}

UtilityCurve parse_curve(const json& j, double min, double max, const std::string& attr) {
    if (!j.is_object() || !j.contains("family"))
        throw ModelIoError("curve of attribute '" + attr + "' needs a \"family\"");
    const std::string family = j.at("family").get<std::string>();
    std::vector<double> params;
    if (j.contains("params")) {
        if (!j.at("params").is_array())
            throw ModelIoError("curve \"params\" of attribute '" + attr + "' must be an array");
        for (const auto& p : j.at("params"))
            params.push_back(require_finite_number(p, "curve parameter of '" + attr + "'"));
    }
    auto want = [&](std::size_t n) {
        if (params.size() != n)
            throw ModelIoError("curve family \"" + family + "\" of attribute '" + attr +
                               "' takes " + std::to_string(n) + " parameter(s)");
    };
    if (family == "linear") {
        want(0);
        return UtilityCurve::linear(min, max);
    }
    if (family == "exponential") {
        want(1);
        return UtilityCurve::exponential(params[0], min, max);
    }
    if (family == "power") {
        want(1);
        return UtilityCurve::power(params[0], min, max);
    }
    throw ModelIoError("unknown curve family \"" + family + "\" on attribute '" + attr + "'");
}

}  // namespace

UtilityModel parse_model(const std::string& json_text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ModelIoError(origin + ": " + e.what());
    }

    try {
        if (!doc.is_object() || !doc.contains("attributes") || !doc.contains("joint"))
            throw ModelIoError(origin + ": model needs \"attributes\" and \"joint\"");
        const json& attrs = doc.at("attributes");
        if (!attrs.is_array() || attrs.empty())
            throw ModelIoError(origin + ": \"attributes\" must be a nonempty array");

        std::vector<std::pair<std::string, std::vector<double>>> attrs_spec;
        std::vector<const json*> curve_specs;
        for (const auto& a : attrs) {
            if (!a.is_object() || !a.contains("name") || !a.contains("levels"))
                throw ModelIoError(origin + ": every attribute needs \"name\" and \"levels\"");
            const std::string name = a.at("name").get<std::string>();
            if (!a.at("levels").is_array())
                throw ModelIoError(origin + ": \"levels\" of '" + name + "' must be an array");
            std::vector<double> levels;
            for (const auto& l : a.at("levels"))
                levels.push_back(require_finite_number(l, "level of '" + name + "'"));
            attrs_spec.emplace_back(name, std::move(levels));
            curve_specs.push_back(a.contains("curve") ? &a.at("curve") : nullptr);
        }
        SpacePtr space = AttributeSpace::create(std::move(attrs_spec));

        const json& joint = doc.at("joint");
        if (!joint.is_object() || !joint.contains("type"))
            throw ModelIoError(origin + ": \"joint\" needs a \"type\"");
        const std::string type = joint.at("type").get<std::string>();
        std::string context = doc.value("context", std::string{});

        std::variant<ProductOfCurves, UtilityTable> built;
        if (type == "product") {
            ProductOfCurves product;
            for (std::size_t a = 0; a < space->attribute_count(); ++a) {
                const auto& attr = space->attribute(a);
                if (!curve_specs[a])
                    throw ModelIoError(origin + ": product joint needs a \"curve\" on '" +
                                       attr.id.name + "'");
                product.curves.push_back(parse_curve(*curve_specs[a], attr.levels.front(),
                                                     attr.levels.back(), attr.id.name));
            }
            built = std::move(product);
        } else if (type == "table") {
            if (!joint.contains("values") || !joint.at("values").is_array())
                throw ModelIoError(origin + ": table joint needs a \"values\" array");
            UtilityTable table;
            for (const auto& v : joint.at("values"))
                table.values.push_back(require_finite_number(v, "table value"));
            if (table.values.size() != space->cell_count())
                throw ModelIoError(origin + ": table has " +
                                   std::to_string(table.values.size()) + " values, grid has " +
                                   std::to_string(space->cell_count()) + " cells");
            built = std::move(table);
        } else {
            throw ModelIoError(origin + ": unknown joint type \"" + type + "\"");
        }

        UtilityModel model(std::move(space), std::move(built), std::move(context));
        Diagnostics diag = validate_model(model);
        if (!diag.ok())
            throw ModelValidationError(origin + ": model failed validation\n" + diag.to_string(),
                                       std::move(diag));
        return model;
    } catch (const json::exception& e) {
        throw ModelIoError(origin + ": " + e.what());
    } catch (const ModelIoError&) {
        throw;
    } catch (const ModelValidationError&) {
        throw;
    } catch (const Error& e) {
        // space/curve construction errors carry schema meaning here
        throw ModelIoError(origin + ": " + e.what());
    }
}

UtilityModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ModelIoError("cannot open model file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_model(buffer.str(), path);
}

void write_grid_csv(const UtilityModel& model, std::ostream& out) {
    const SpacePtr& space = model.space();
    for (std::size_t a = 0; a < space->attribute_count(); ++a)
        out << space->attribute(a).id.name << ',';
    out << "utility\n";
    for (std::size_t cell = 0; cell < space->cell_count(); ++cell) {
        const auto idx = space->multi_index(cell);
        for (std::size_t a = 0; a < idx.size(); ++a)
            out << format_number(space->attribute(a).levels[idx[a]], 12) << ',';
        out << format_number(joint_utility_at(idx, model), 12) << '\n';
    }
}

}  // namespace prefcalc
