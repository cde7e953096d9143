#pragma once

#include "revtri/function_space.hpp"
#include "revtri/hypothesis.hpp"
#include "revtri/inequality.hpp"
#include "revtri/search.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace revtri {

constexpr int kSchemaVersion = 1;

// Exit codes; a run reports the largest code it encountered.
enum ExitCode : int {
    kExitOk = 0,
    kExitViolated = 1,
    kExitHypothesisUnmet = 2,
    kExitInputError = 3,
};

struct ConstantFamily {
    ComplexVector value;
};
struct VectorFamily {
    std::vector<ComponentProfiles> components;
};
struct ScalarMultipleFamily {
    Profile phi;
    ComplexVector e;
};
struct BallFamily {
    BallFamilySpec spec;
};
struct LagrangeFamilyDecl {
    Profile psi;
    double theta = 0.0;
    double Theta = 0.0;
    ComplexVector direction{Scalar{1.0, 0.0}};
};

using FamilySpec = std::variant<ConstantFamily, VectorFamily, ScalarMultipleFamily, BallFamily, LagrangeFamilyDecl>;

/// Samples the family and collects the parameters it implies: e (ball,
/// scalar-multiple), rho (ball), gamma/Gamma and m := gamma, M := Gamma (lagrange).
FamilyInstance build_family(const FamilySpec& family, const Grid& grid);

struct HypothesisDecl {
    HypothesisKind kind = HypothesisKind::diaz_metcalf_K;
    std::optional<double> K, rho, m, M, gamma, Gamma, theta;
    std::optional<ComplexVector> e;
    std::optional<Profile> profile; // k(t) or r(t)
};

struct InequalityDecl {
    std::string id;
    InequalityParams overrides; // k_nodes / r_nodes unused here, see k / r
    std::optional<Profile> k;
    std::optional<Profile> r;
};

struct SweepDecl {
    std::vector<std::string> targets; // "m=M" ties several keys to one value
    std::vector<double> values;       // ascending
};

enum class OutputFormat { json, csv };

struct Scenario {
    int schema_version = kSchemaVersion;
    std::string name;
    double a = 0.0;
    double b = 1.0;
    QuadratureConfig quad;
    std::optional<FamilySpec> family;
    std::vector<HypothesisDecl> hypotheses;
    std::vector<InequalityDecl> inequalities;
    Tolerances tol;
    std::optional<SearchSpec> search;
    OutputFormat format = OutputFormat::json;
    std::string output_path;
};

/// Strict parser: unknown keys, wrong types, or a schema_version other than 1
/// throw InputError.
Scenario parse_scenario(const nlohmann::json& doc);
nlohmann::json load_json_file(const std::string& path);

/// Extracts the sweep declaration. Throws InputError when absent, empty, or
/// naming more than one parameter.
SweepDecl parse_sweep(const nlohmann::json& doc);

/// Copy of doc without "sweep", with every target key in the family,
/// hypotheses, inequalities and search.fixed objects set to value. Throws
/// InputError if no target key occurs anywhere.
nlohmann::json substitute_sweep_value(const nlohmann::json& doc, const SweepDecl& sweep, double value);

enum class Status { satisfied, violated, hypothesis_unmet };
std::string_view to_string(Status status);

struct InequalityOutcome {
    std::string id;
    Status status = Status::satisfied;
    std::optional<InequalityReport> report;     // absent when hypothesis_unmet
    std::optional<HypothesisReport> hypothesis; // the failing report when hypothesis_unmet
};

struct HypothesisOutcome {
    HypothesisReport report;
};

struct RunResult {
    std::vector<HypothesisOutcome> hypotheses;
    std::vector<InequalityOutcome> inequalities;
    std::optional<SearchResult> search;
    std::optional<std::string> search_error;
    int exit_code = kExitOk;
};

/// Builds the family, checks declared hypotheses, evaluates every inequality
/// (companion reports are listed after their primary report) and runs the
/// optional search. Input problems throw InputError.
RunResult run_scenario(const Scenario& scenario);

struct SweepRow {
    double value;
    RunResult result;
};

struct SweepResult {
    SweepDecl sweep;
    std::vector<SweepRow> rows;
    int exit_code = kExitOk;
};

/// Command-line overrides applied to every parsed scenario.
struct Overrides {
    std::optional<std::size_t> grid;
    std::optional<double> tol_ineq;
    std::optional<double> tol_hyp;
    std::optional<std::uint64_t> seed;
    std::optional<OutputFormat> format;
    std::optional<std::string> out;
};

void apply_overrides(Scenario& scenario, const Overrides& overrides);

/// One run per sweep value, rows in ascending parameter order.
SweepResult run_sweep(const nlohmann::json& doc, const Overrides& overrides);

/// The built-in example: phi(t) = exp(-t) (1 + i) on [0, 1], gamma = 1,
/// Gamma = e, run through the complex suite.
Scenario demo_scenario(std::size_t intervals = kDefaultIntervals);

} // namespace revtri
