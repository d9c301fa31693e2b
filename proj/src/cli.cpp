#include "prefcalc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "prefcalc/engine.hpp"
#include "prefcalc/model_io.hpp"
#include "prefcalc/parser.hpp"
#include "prefcalc/suites.hpp"

namespace prefcalc {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::uint64_t seed_from_environment(std::ostream& err, bool& ok) {
    ok = true;
    const char* raw = std::getenv("PREFCALC_SEED");
    if (!raw) return 0;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0') {
        err << "PREFCALC_SEED must be a decimal integer, got '" << raw << "'\n";
        ok = false;
        return 0;
    }
    return static_cast<std::uint64_t>(value);
}

// Loads a model and surfaces validation warnings (signed rectangle
// increments) without failing.
UtilityModel load_model_reporting(const std::string& path, std::ostream& err) {
    UtilityModel model = load_model(path);
    for (const auto& d : validate_model(model).entries)
        if (d.severity == Diagnostic::Severity::Warning)
            err << "warning: " << d.message << "\n";
    return model;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"preference-algebra calculator"};
    app.require_subcommand(1);

    std::string expr_text, given_text, model_path, out_path;
    int attrs = 3, levels = 6, trials = 200;

    auto* cmd_parse = app.add_subcommand("parse", "print the canonical form of EXPR");
    cmd_parse->add_option("expr", expr_text, "preference expression")->required();

    auto* cmd_eval = app.add_subcommand("eval", "utility of EXPR under a model");
    cmd_eval->add_option("--model", model_path, "model file")->required();
    cmd_eval->add_option("expr,--expr", expr_text, "preference expression");

    auto* cmd_cond = app.add_subcommand("cond", "conditional utility of EXPR given --given");
    cmd_cond->add_option("--model", model_path, "model file")->required();
    cmd_cond->add_option("--given", given_text, "conditioning expression")->required();
    cmd_cond->add_option("expr", expr_text, "preference expression")->required();

    auto* cmd_ident = app.add_subcommand("identities", "run the preference-algebra identity suite");
    cmd_ident->add_option("--attrs", attrs, "max attributes per space")->check(CLI::Range(1, 6));
    cmd_ident->add_option("--levels", levels, "max levels per attribute")->check(CLI::Range(2, 32));
    cmd_ident->add_option("--trials", trials, "trials per identity")->check(CLI::PositiveNumber);

    auto* cmd_verify = app.add_subcommand("verify", "compare the evaluator with the grid oracle");
    cmd_verify->add_option("--model", model_path, "model file")->required();
    cmd_verify->add_option("--trials", trials, "number of random expressions")
        ->check(CLI::PositiveNumber);

    auto* cmd_grid = app.add_subcommand("grid", "export the utility grid as CSV");
    cmd_grid->add_option("--model", model_path, "model file")->required();
    cmd_grid->add_option("--out", out_path, "output file")->required();

    auto* cmd_axioms = app.add_subcommand("axioms", "run the functional-equation checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    bool seed_ok = false;
    const std::uint64_t seed = seed_from_environment(err, seed_ok);
    if (!seed_ok) return kExitUsage;

    try {
        if (cmd_parse->parsed()) {
            out << format(simplify(parse(expr_text))) << "\n";
            return kExitOk;
        }

        if (cmd_eval->parsed()) {
            if (expr_text.empty()) {
                err << "eval needs an expression\n";
                return kExitUsage;
            }
            UtilityModel model = load_model_reporting(model_path, err);
            ExprPtr e = parse(expr_text);
            out << format_number(eval_utility(e, model), 12) << "\n";
            return kExitOk;
        }

        if (cmd_cond->parsed()) {
            UtilityModel model = load_model_reporting(model_path, err);
            ExprPtr e = parse(expr_text);
            ExprPtr given = parse(given_text);
            out << format_number(conditional_utility(e, given, model), 12) << "\n";
            return kExitOk;
        }

        if (cmd_ident->parsed()) {
            IdentitySuiteReport report = run_identity_suite(attrs, levels, trials, seed);
            for (const auto& r : report.identities) {
                const bool ok = r.canonical_failures == 0 && r.domain_failures == 0;
                out << (ok ? "pass" : "FAIL") << "  " << r.name << " (" << r.trials
                    << " trials)";
                if (!ok)
                    out << "  canonical " << r.canonical_failures << ", domain "
                        << r.domain_failures << ", e.g. " << r.first_failure;
                out << "\n";
            }
            out << (report.all_passed ? "all identities hold\n" : "identity failures\n");
            return report.all_passed ? kExitOk : kExitCheckFailed;
        }

        if (cmd_verify->parsed()) {
            UtilityModel model = load_model_reporting(model_path, err);
            OracleVerificationReport report = verify_against_oracle(model, trials, 6, seed);
            out << "evaluations " << report.evaluations << ", max relative error "
                << format_number(report.max_relative_error, 3) << "\n";
            if (!report.worst_expression.empty())
                out << "worst: " << report.worst_expression << "\n";
            return report.passed(1e-9) ? kExitOk : kExitCheckFailed;
        }

        if (cmd_grid->parsed()) {
            UtilityModel model = load_model_reporting(model_path, err);
            std::ofstream file(out_path, std::ios::binary);
            if (!file) {
                err << "cannot open '" << out_path << "' for writing\n";
                return kExitUsage;
            }
            write_grid_csv(model, file);
            return kExitOk;
        }

        if (cmd_axioms->parsed()) {
            AxiomSuiteReport report = run_axiom_suite(seed);
            for (const auto& line : report.lines)
                out << (line.ok ? "pass" : "FAIL") << "  " << line.name << ": "
                    << line.detail << "\n";
            return report.all_passed ? kExitOk : kExitCheckFailed;
        }
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const ModelValidationError& e) {
        err << e.what();
        return kExitUsage;
    } catch (const ModelIoError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const UndefinedConditionalError& e) {
        err << "undefined conditional: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}

}  // namespace prefcalc
