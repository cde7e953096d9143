#include "revtri/cli.hpp"

#include "revtri/errors.hpp"
#include "revtri/report_io.hpp"
#include "revtri/scenario.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

namespace revtri {

namespace {

struct Flags {
    std::string scenario;
    std::size_t grid = 0;
    double tol_ineq = 0.0;
    double tol_hyp = 0.0;
    std::uint64_t seed = 0;
    std::string format;
    std::string out;
};

void add_flags(CLI::App& cmd, Flags& f, bool needs_scenario) {
    auto* scenario = cmd.add_option("--scenario", f.scenario, "scenario JSON file");
    if (needs_scenario) scenario->required()->check(CLI::ExistingFile);
    cmd.add_option("--grid", f.grid, "override the number of grid intervals N (even, >= 2)");
    cmd.add_option("--tol-ineq", f.tol_ineq, "absolute and relative inequality tolerance")->check(CLI::NonNegativeNumber);
    cmd.add_option("--tol-hyp", f.tol_hyp, "hypothesis tolerance")->check(CLI::NonNegativeNumber);
    cmd.add_option("--seed", f.seed, "search seed");
    cmd.add_option("--format", f.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    cmd.add_option("--out", f.out, "write the report here instead of stdout");
}

Overrides overrides_from(const CLI::App& cmd, const Flags& f) {
    Overrides o;
    if (cmd.count("--grid")) o.grid = f.grid;
    if (cmd.count("--tol-ineq")) o.tol_ineq = f.tol_ineq;
    if (cmd.count("--tol-hyp")) o.tol_hyp = f.tol_hyp;
    if (cmd.count("--seed")) o.seed = f.seed;
    if (cmd.count("--format")) o.format = f.format == "csv" ? OutputFormat::csv : OutputFormat::json;
    if (cmd.count("--out")) o.out = f.out;
    return o;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot write report to '" + path + "'");
    file << text;
}

int cmd_run(const Flags& f, const Overrides& o, std::ostream& out) {
    const auto doc = load_json_file(f.scenario);
    if (doc.is_object() && doc.contains("sweep")) throw InputError("scenario declares a sweep; use the sweep command");
    auto scenario = parse_scenario(doc);
    apply_overrides(scenario, o);
    const auto result = run_scenario(scenario);
    const auto text = scenario.format == OutputFormat::csv ? run_report_csv(result)
                                                           : dump_report(run_report_json(scenario, result));
    emit(text, scenario.output_path, out);
    return result.exit_code;
}

int cmd_sweep(const Flags& f, const Overrides& o, std::ostream& out) {
    const auto doc = load_json_file(f.scenario);
    const auto result = run_sweep(doc, o);
    // Format and path come from the file unless overridden.
    auto base = doc;
    base.erase("sweep");
    auto scenario = parse_scenario(base);
    apply_overrides(scenario, o);
    const auto text = scenario.format == OutputFormat::csv ? sweep_report_csv(result)
                                                           : dump_report(sweep_report_json(result));
    emit(text, scenario.output_path, out);
    return result.exit_code;
}

int cmd_demo(const Overrides& o, std::ostream& out) {
    auto scenario = demo_scenario();
    apply_overrides(scenario, o);
    const auto result = run_scenario(scenario);
    out << summary_text(scenario, result);
    if (!scenario.output_path.empty()) {
        const auto text = scenario.format == OutputFormat::csv ? run_report_csv(result)
                                                               : dump_report(run_report_json(scenario, result));
        emit(text, scenario.output_path, out);
    }
    return result.exit_code;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical checks of reverse triangle inequalities for Bochner integrals in C^n", "revtri"};
    app.require_subcommand(1);

    Flags run_flags, sweep_flags, demo_flags;
    auto* run = app.add_subcommand("run", "evaluate one scenario");
    auto* sweep = app.add_subcommand("sweep", "evaluate a scenario over a parameter range");
    auto* demo = app.add_subcommand("demo", "built-in complex example");
    add_flags(*run, run_flags, true);
    add_flags(*sweep, sweep_flags, true);
    add_flags(*demo, demo_flags, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (run->parsed()) return cmd_run(run_flags, overrides_from(*run, run_flags), out);
        if (sweep->parsed()) return cmd_sweep(sweep_flags, overrides_from(*sweep, sweep_flags), out);
        return cmd_demo(overrides_from(*demo, demo_flags), out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace revtri
