#include "revtri/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace revtri {

namespace {

std::string format_double(double x) {
    if (!std::isfinite(x)) return "null";
    if (x == 0.0) x = 0.0; // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void dump_value(const ReportJson& v, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
    const std::string close(static_cast<std::size_t>(depth) * 2, ' ');
    switch (v.type()) {
    case ReportJson::value_t::object: {
        if (v.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, item] : v.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + ReportJson(key).dump() + ": ";
            dump_value(item, out, depth + 1);
        }
        out += "\n" + close + "}";
        return;
    }
    case ReportJson::value_t::array: {
        if (v.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k) out += ",\n";
            out += pad;
            dump_value(v[k], out, depth + 1);
        }
        out += "\n" + close + "]";
        return;
    }
    case ReportJson::value_t::number_float:
        out += format_double(v.get<double>());
        return;
    default:
        out += v.dump();
    }
}

ReportJson optional_number(const std::optional<double>& x) {
    return x ? ReportJson(*x) : ReportJson(nullptr);
}

std::string csv_number(double x) { return format_double(x) == "null" ? "" : format_double(x); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

const char* kCsvHeader = "id,lhs,rhs,abs_gap,rel_gap,satisfied,equality_residual,hypothesis_holds,worst_margin";

std::string csv_row(const InequalityOutcome& o) {
    std::ostringstream row;
    row << csv_field(o.id) << ',';
    const HypothesisReport* hyp = nullptr;
    if (o.report) {
        const auto& r = *o.report;
        row << csv_number(r.lhs) << ',' << csv_number(r.rhs) << ',' << csv_number(r.abs_gap) << ','
            << csv_number(r.rel_gap) << ',' << (r.satisfied ? "true" : "false") << ','
            << (r.equality_residual ? csv_number(*r.equality_residual) : "") << ',';
        if (r.hypothesis) hyp = &*r.hypothesis;
    } else {
        row << ",,,,false,,";
        if (o.hypothesis) hyp = &*o.hypothesis;
    }
    if (hyp) row << (hyp->holds ? "true" : "false") << ',' << csv_number(hyp->worst_margin);
    else row << ',';
    return row.str();
}

} // namespace

ReportJson to_json(const HypothesisReport& r) {
    ReportJson j;
    j["kind"] = std::string(to_string(r.kind));
    j["holds"] = r.holds;
    j["worst_margin"] = r.worst_margin;
    j["worst_i"] = r.worst_i;
    j["worst_j"] = r.worst_j ? ReportJson(*r.worst_j) : ReportJson(nullptr);
    j["points_checked"] = r.points_checked;
    j["consistency_violations"] = r.consistency_violations;
    return j;
}

ReportJson to_json(const InequalityReport& r) {
    ReportJson j;
    j["id"] = r.id;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["abs_gap"] = r.abs_gap;
    j["rel_gap"] = r.rel_gap;
    j["satisfied"] = r.satisfied;
    j["equality_residual"] = optional_number(r.equality_residual);
    j["hypothesis"] = r.hypothesis ? to_json(*r.hypothesis) : ReportJson(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

ReportJson to_json(const InequalityOutcome& o) {
    ReportJson j;
    if (o.report) {
        j = to_json(*o.report);
    } else {
        j["id"] = o.id;
        j["hypothesis"] = o.hypothesis ? to_json(*o.hypothesis) : ReportJson(nullptr);
    }
    j["status"] = std::string(to_string(o.status));
    return j;
}

ReportJson to_json(const SearchResult& result, const SearchSpec& spec) {
    ReportJson j;
    j["label"] = "exploratory";
    j["family"] = std::string(to_string(spec.family));
    j["inequality"] = spec.inequality_id;
    j["seed"] = spec.seed;
    j["budget"] = spec.budget;
    j["evaluations"] = result.evaluations;
    ReportJson params = ReportJson::object();
    for (const auto& [name, value] : result.params) params[name] = value;
    j["params"] = std::move(params);
    j["report"] = to_json(result.report);
    return j;
}

ReportJson run_report_json(const Scenario& s, const RunResult& result) {
    ReportJson j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = s.name;
    j["interval"] = {{"a", s.a}, {"b", s.b}};
    j["grid"] = {{"N", s.quad.intervals}, {"rule", std::string(to_string(s.quad.rule))}};
    j["tolerances"] = {{"tol_hyp", s.tol.hyp}, {"tol_ineq", s.tol.ineq_abs}};
    ReportJson hyps = ReportJson::array();
    for (const auto& h : result.hypotheses) hyps.push_back(to_json(h.report));
    j["hypotheses"] = std::move(hyps);
    ReportJson ineqs = ReportJson::array();
    for (const auto& o : result.inequalities) ineqs.push_back(to_json(o));
    j["inequalities"] = std::move(ineqs);
    if (result.search && s.search) {
        j["search"] = to_json(*result.search, *s.search);
    } else if (result.search_error) {
        j["search"] = {{"label", "exploratory"}, {"error", *result.search_error}};
    }
    j["exit_code"] = result.exit_code;
    return j;
}

ReportJson sweep_report_json(const SweepResult& result) {
    ReportJson j;
    j["schema_version"] = kSchemaVersion;
    std::string parameter;
    for (const auto& t : result.sweep.targets) parameter += (parameter.empty() ? "" : "=") + t;
    j["parameter"] = parameter;
    ReportJson rows = ReportJson::array();
    for (const auto& row : result.rows) {
        ReportJson r;
        r["value"] = row.value;
        ReportJson ineqs = ReportJson::array();
        for (const auto& o : row.result.inequalities) ineqs.push_back(to_json(o));
        r["inequalities"] = std::move(ineqs);
        r["exit_code"] = row.result.exit_code;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["exit_code"] = result.exit_code;
    return j;
}

std::string dump_report(const ReportJson& doc) {
    std::string out;
    dump_value(doc, out, 0);
    out += '\n';
    return out;
}

std::string run_report_csv(const RunResult& result) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& o : result.inequalities) out += csv_row(o) + "\n";
    return out;
}

std::string sweep_report_csv(const SweepResult& result) {
    std::string out = "value," + std::string(kCsvHeader) + "\n";
    for (const auto& row : result.rows) {
        for (const auto& o : row.result.inequalities) out += csv_number(row.value) + "," + csv_row(o) + "\n";
    }
    return out;
}

std::string summary_text(const Scenario& s, const RunResult& result) {
    std::ostringstream out;
    char line[256];
    out << s.name << "\n";
    out << "interval [" << format_double(s.a) << ", " << format_double(s.b) << "], N = " << s.quad.intervals
        << ", rule " << to_string(s.quad.rule) << "\n";
    for (const auto& h : result.hypotheses) {
        std::snprintf(line, sizeof line, "  hypothesis %-22s %s  (worst margin %.6g)\n",
                      std::string(to_string(h.report.kind)).c_str(), h.report.holds ? "holds " : "FAILS ",
                      h.report.worst_margin);
        out << line;
    }
    for (const auto& o : result.inequalities) {
        if (o.report) {
            std::snprintf(line, sizeof line, "  %-28s lhs %.10f  rhs %.10f  rel_gap %.3e  %s\n", o.id.c_str(),
                          o.report->lhs, o.report->rhs, o.report->rel_gap, std::string(to_string(o.status)).c_str());
        } else {
            std::snprintf(line, sizeof line, "  %-28s %s\n", o.id.c_str(), std::string(to_string(o.status)).c_str());
        }
        out << line;
    }
    out << "exit code " << result.exit_code << "\n";
    return out.str();
}

} // namespace revtri
