#include <doctest.h>

#include "revtri/cli.hpp"
#include "revtri/errors.hpp"
#include "revtri/report_io.hpp"
#include "revtri/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace revtri;
using nlohmann::json;

namespace {

const std::string fixtures = FIXTURE_DIR;

json base_doc() {
    return json::parse(R"({
        "schema_version": 1,
        "interval": {"a": 0.0, "b": 1.0},
        "grid": {"N": 32},
        "family": {"kind": "constant", "value": [1.0, 0.0]},
        "inequalities": [{"id": "triangle"}]
    })");
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / ("revtri_test_" + name);
    std::ofstream(path) << body;
    return path;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("constant scenario: triangle with equal sides") {
    const auto s = parse_scenario(base_doc());
    const auto r = run_scenario(s);
    CHECK(r.exit_code == kExitOk);
    REQUIRE(r.inequalities.size() == 1);
    CHECK(r.inequalities[0].report->lhs == doctest::Approx(r.inequalities[0].report->rhs));
}

TEST_CASE("strict parsing") {
    auto doc = base_doc();
    doc["typo"] = 1;
    CHECK_THROWS_AS(parse_scenario(doc), InputError);

    doc = base_doc();
    doc["schema_version"] = 2;
    CHECK_THROWS_AS(parse_scenario(doc), InputError);

    doc = base_doc();
    doc["grid"]["N"] = 7;
    CHECK_THROWS_AS(parse_scenario(doc), InputError);

    doc = base_doc();
    doc["inequalities"] = json::array();
    CHECK_THROWS_AS(parse_scenario(doc), InputError);

    doc = base_doc();
    doc["inequalities"][0]["id"] = "unknown";
    CHECK_THROWS_AS(parse_scenario(doc), InputError);

    doc = base_doc();
    doc["family"]["colour"] = "red";
    CHECK_THROWS_AS(parse_scenario(doc), InputError);

    doc = base_doc();
    doc["interval"]["a"] = 2.0;
    CHECK_THROWS_AS(parse_scenario(doc), InputError);

    doc = base_doc();
    doc["family"] = {{"kind", "vector"}, {"components", {{{"kind", "sine"}, {"freq", 2.0}}}}};
    CHECK_THROWS_AS(parse_scenario(doc), InputError);

    doc = base_doc();
    doc["hypotheses"] = {{{"kind", "kernel-upper"}}};
    CHECK_THROWS_AS(parse_scenario(doc), InputError);
}

TEST_CASE("family kinds parse and build") {
    auto doc = base_doc();
    doc["family"] = json::parse(R"({"kind": "vector", "components": [
        {"re": {"kind": "cosine"}, "im": {"kind": "sine", "amplitude": 0.5}},
        [{"kind": "linear", "intercept": 1.0, "slope": 2.0}, 0.5],
        {"kind": "polynomial", "coefficients": [1, 0, 1]}]})");
    auto s = parse_scenario(doc);
    const auto fam = build_family(*s.family, Grid(0.0, 1.0, 4));
    CHECK(fam.f.dim() == 3);
    CHECK(fam.f[4][1].real() == doctest::Approx(3.5));
    CHECK(fam.f[4][0].imag() == doctest::Approx(0.5 * std::sin(1.0)));

    doc["family"] = json::parse(R"({"kind": "scalar-multiple", "phi": {"kind": "exp", "rate": -1.0},
                                     "e": [[0.0, 1.0]]})");
    s = parse_scenario(doc);
    const auto sm = build_family(*s.family, Grid(0.0, 1.0, 4));
    CHECK(sm.params.e.has_value());
    CHECK(sm.f[0][0].imag() == doctest::Approx(1.0));

    doc["family"] = json::parse(R"({"kind": "lagrange", "psi": {"kind": "linear", "slope": 1.0},
                                     "theta": 0.0, "Theta": 1.0})");
    s = parse_scenario(doc);
    const auto lg = build_family(*s.family, Grid(0.0, 1.0, 4));
    CHECK(*lg.params.Gamma == doctest::Approx(std::exp(1.0)));
    CHECK(*lg.params.M == doctest::Approx(std::exp(1.0)));
    CHECK(*lg.params.m == doctest::Approx(1.0));

    doc["family"] = json::parse(R"({"kind": "ball", "e": [1, 0], "u": [0, 1], "rho": 0.4,
                                     "modulation": {"kind": "step", "at": 0.5, "left": -1, "right": 1}})");
    s = parse_scenario(doc);
    const auto ball = build_family(*s.family, Grid(0.0, 1.0, 4));
    CHECK(*ball.params.rho == 0.4);
    CHECK(ball.f[0][1].real() == doctest::Approx(-0.4));
}

TEST_CASE("explicit parameters override derived ones") {
    auto doc = base_doc();
    doc["family"] = json::parse(R"({"kind": "lagrange", "psi": {"kind": "linear", "slope": 1.0},
                                     "theta": 0.0, "Theta": 1.0})");
    doc["inequalities"] = json::parse(R"([{"id": "quadratic-ratio"}, {"id": "quadratic-ratio", "M": 5.0}])");
    const auto r = run_scenario(parse_scenario(doc));
    REQUIRE(r.inequalities.size() == 4);
    CHECK(r.inequalities[2].report->rhs > r.inequalities[0].report->rhs);
}

TEST_CASE("exit codes: each class and their precedence") {
    auto doc = base_doc();
    CHECK(run_scenario(parse_scenario(doc)).exit_code == kExitOk);

    doc["family"] = json::parse(R"({"kind": "vector", "components": [{"kind": "linear", "slope": 1.0}]})");
    doc["inequalities"] = json::parse(R"([{"id": "triangle"}, {"id": "quadratic-mM", "m": 1, "M": 1}])");
    auto r = run_scenario(parse_scenario(doc));
    CHECK(r.exit_code == kExitHypothesisUnmet);
    CHECK(r.inequalities[0].status == Status::satisfied);
    CHECK(r.inequalities[1].status == Status::hypothesis_unmet);
    CHECK(r.inequalities[1].hypothesis.has_value());

    const auto violated = parse_scenario(load_json_file(fixtures + "/violated.json"));
    r = run_scenario(violated);
    CHECK(r.exit_code == kExitViolated);
    CHECK(r.inequalities[0].status == Status::violated);

    // violated plus hypothesis-unmet reports 2
    auto both = load_json_file(fixtures + "/violated.json");
    both["inequalities"].push_back(json::parse(R"({"id": "quadratic-mM", "m": 1, "M": 1})"));
    r = run_scenario(parse_scenario(both));
    CHECK(r.exit_code == kExitHypothesisUnmet);

    // input errors win over everything at the CLI
    both["inequalities"].push_back(json::parse(R"({"id": "multiplicative-K"})"));
    const auto path = temp_file("input_error.json", both.dump());
    CHECK(cli({"run", "--scenario", path.string()}).code == kExitInputError);
}

TEST_CASE("declared hypotheses are reported") {
    auto doc = base_doc();
    doc["hypotheses"] = json::parse(R"([{"kind": "diaz-metcalf-K", "K": 1, "e": [1, 0]},
                                        {"kind": "ball-rho", "rho": 0.5, "e": [0, 1]}])");
    const auto r = run_scenario(parse_scenario(doc));
    REQUIRE(r.hypotheses.size() == 2);
    CHECK(r.hypotheses[0].report.holds);
    CHECK_FALSE(r.hypotheses[1].report.holds);
    CHECK(r.exit_code == kExitHypothesisUnmet);
}

TEST_CASE("k(t) and r(t) profiles from a scenario") {
    auto doc = base_doc();
    doc["inequalities"] = json::parse(R"([
        {"id": "additive-k", "e": [1, 0], "k": 0.0},
        {"id": "additive-r", "e": [1, 0], "r": {"kind": "constant", "value": 0.6}}])");
    const auto r = run_scenario(parse_scenario(doc));
    CHECK(r.exit_code == kExitOk);
    CHECK(r.inequalities[1].report->rhs == doctest::Approx(0.18));
}

TEST_CASE("sweep parsing and substitution") {
    auto doc = load_json_file(fixtures + "/rho-sweep.json");
    const auto sweep = parse_sweep(doc);
    CHECK(sweep.values == std::vector<double>{0.1, 0.5, 0.9});

    const auto result = run_sweep(doc, {});
    REQUIRE(result.rows.size() == 3);
    for (std::size_t k = 1; k < 3; ++k) {
        CHECK(result.rows[k].result.inequalities[0].report->rel_gap >=
              result.rows[k - 1].result.inequalities[0].report->rel_gap);
    }

    auto empty = doc;
    empty["sweep"]["values"] = json::array();
    CHECK_THROWS_AS(parse_sweep(empty), InputError);

    auto multi = doc;
    multi["sweep"]["parameter"] = json::array({"rho", "m"});
    CHECK_THROWS_AS(parse_sweep(multi), InputError);

    auto missing = doc;
    missing["sweep"]["parameter"] = "Gamma";
    CHECK_THROWS_AS(run_sweep(missing, {}), InputError);

    auto ranged = doc;
    ranged["sweep"] = json::parse(R"({"parameter": "rho", "range": {"from": 0.2, "to": 0.8, "count": 4}})");
    const auto rs = parse_sweep(ranged);
    REQUIRE(rs.values.size() == 4);
    CHECK(rs.values[3] == doctest::Approx(0.8));
}

TEST_CASE("tied m=M sweep gives a single equality row") {
    auto doc = base_doc();
    doc["inequalities"] = json::parse(R"([{"id": "quadratic-ratio", "m": 2.0, "M": 3.0}])");
    doc["sweep"] = json::parse(R"({"parameter": "m=M", "values": [1.0]})");
    const auto result = run_sweep(doc, {});
    REQUIRE(result.rows.size() == 1);
    const auto& rep = *result.rows[0].result.inequalities[0].report;
    CHECK(std::abs(rep.rel_gap) <= 1e-12);
    CHECK(result.exit_code == kExitOk);
}

TEST_CASE("search entry in a scenario") {
    auto doc = base_doc();
    doc.erase("family");
    doc["inequalities"] = json::array();
    doc["search"] = json::parse(R"({"family": "ball", "free": {"rho": [0.1, 0.9]},
                                    "inequality": "multiplicative-ball", "budget": 40, "seed": 7})");
    const auto s = parse_scenario(doc);
    const auto r = run_scenario(s);
    REQUIRE(r.search.has_value());
    const auto report = run_report_json(s, r);
    CHECK(report["search"]["label"] == "exploratory");
    CHECK(report["search"]["seed"] == 7);

    doc["search"]["fixed"] = {{"K", 1.0}};
    doc["search"]["inequality"] = "multiplicative-K";
    const auto bad = run_scenario(parse_scenario(doc));
    CHECK(bad.search_error.has_value());
    CHECK(bad.exit_code == kExitHypothesisUnmet);
}

TEST_CASE("report json round-trips byte for byte") {
    auto s = demo_scenario();
    const auto text = dump_report(run_report_json(s, run_scenario(s)));
    const auto again = dump_report(ReportJson::parse(text));
    CHECK(text == again);
    CHECK(text.find("1.0000000000000001e-09") != std::string::npos);

    ReportJson tricky;
    tricky["neg_zero"] = -0.0;
    tricky["tenth"] = 0.1;
    tricky["big"] = 1e300;
    tricky["whole"] = 3.0;
    tricky["text"] = "a \"quoted\" word";
    tricky["empty"] = ReportJson::array();
    const auto t1 = dump_report(tricky);
    CHECK(t1 == dump_report(ReportJson::parse(t1)));
    CHECK(t1.find("\"neg_zero\": 0,") != std::string::npos);
    CHECK(t1.find("0.10000000000000001") != std::string::npos);
}

TEST_CASE("csv column order") {
    auto s = demo_scenario(16);
    const auto csv = run_report_csv(run_scenario(s));
    CHECK(csv.rfind("id,lhs,rhs,abs_gap,rel_gap,satisfied,equality_residual,hypothesis_holds,worst_margin\n", 0) == 0);
    CHECK(csv.find("complex-quadratic-mM,") != std::string::npos);
    const auto sweep = run_sweep(load_json_file(fixtures + "/rho-sweep.json"), {});
    CHECK(sweep_report_csv(sweep).rfind("value,id,", 0) == 0);
}

TEST_CASE("cli: run, sweep and demo") {
    CHECK(cli({"run", "--scenario", fixtures + "/all-pass.json"}).code == 0);
    CHECK(cli({"run", "--scenario", fixtures + "/hypothesis-unmet.json"}).code == 2);
    const auto bad = cli({"run", "--scenario", fixtures + "/malformed.json"});
    CHECK(bad.code == 3);
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());

    // run refuses a sweep file and sweep requires one
    CHECK(cli({"run", "--scenario", fixtures + "/rho-sweep.json"}).code == 3);
    CHECK(cli({"sweep", "--scenario", fixtures + "/all-pass.json"}).code == 3);

    const auto sweep = cli({"sweep", "--scenario", fixtures + "/rho-sweep.json", "--format", "csv"});
    CHECK(sweep.code == 0);
    std::istringstream lines(sweep.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 4);

    CHECK(cli({"demo", "--bogus"}).code == 3);
    CHECK(cli({"demo", "--format", "xml"}).code == 3);
    CHECK(cli({"demo", "--grid", "5"}).code == 3);
    CHECK(cli({}).code == 3);
    CHECK(cli({"--help"}).code == 0);

    const auto demo = cli({"demo"});
    CHECK(demo.code == 0);
    CHECK(demo.out.find("complex-weighted-gamma") != std::string::npos);
    CHECK(cli({"demo", "--grid", "4"}).code == 0);
}

TEST_CASE("cli: overrides and output files") {
    const auto out1 = std::filesystem::temp_directory_path() / "revtri_demo_1.json";
    const auto out2 = std::filesystem::temp_directory_path() / "revtri_demo_2.json";
    CHECK(cli({"demo", "--out", out1.string()}).code == 0);
    CHECK(cli({"demo", "--out", out2.string()}).code == 0);
    std::ifstream a(out1), b(out2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(!sa.str().empty());
    CHECK(sa.str() == sb.str());

    const auto run = cli({"run", "--scenario", fixtures + "/all-pass.json", "--grid", "8", "--tol-hyp", "1e-6"});
    const auto report = json::parse(run.out);
    CHECK(report["grid"]["N"] == 8);
    CHECK(report["tolerances"]["tol_hyp"].get<double>() == 1e-6);

    // zero tolerance turns the round-off case into a violation; the default does not
    CHECK(cli({"run", "--scenario", fixtures + "/violated.json"}).code == 1);
    CHECK(cli({"run", "--scenario", fixtures + "/violated.json", "--tol-ineq", "1e-8"}).code == 0);

    const auto csv = cli({"run", "--scenario", fixtures + "/all-pass.json", "--format", "csv"});
    CHECK(csv.out.rfind("id,lhs", 0) == 0);
}
