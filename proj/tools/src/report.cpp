#include "report.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace traintrack::cli
{

void RunConfig::validate() const
{
    if (sample_count && *sample_count == 0) {
        throw std::invalid_argument("--samples must be at least 1");
    }
    for (const auto &[suite, tol] : tolerances) {
        if (!(tol > 0.0)) {
            throw std::invalid_argument("--tol-" + suite + " must be positive");
        }
    }
}

json to_json(cplx z)
{
    return json{{"re", z.real()}, {"im", z.imag()}};
}

void VerificationReport::finalize()
{
    max_residual = 0.0;
    bool all_cases = true;
    for (const auto &c : cases) {
        // NaN residuals count as failures and as an infinite maximum.
        max_residual = std::isnan(c.residual) ? INFINITY : std::max(max_residual, c.residual);
        all_cases = all_cases && c.passed;
    }
    passed = all_cases && max_residual <= tolerance;
}

void CombinedReport::finalize()
{
    max_residual = 0.0;
    passed = true;
    for (const auto &s : suites) {
        max_residual = std::max(max_residual, s.max_residual / s.tolerance);
        passed = passed && s.passed;
    }
}

namespace
{

json case_json(const CaseRecord &c)
{
    json j{{"index", c.index}, {"inputs", c.inputs}, {"outputs", c.outputs},
           {"residual", c.residual}, {"passed", c.passed}};
    if (!c.error.empty()) {
        j["error"] = c.error;
    }
    return j;
}

json suite_body(const VerificationReport &r)
{
    json cases = json::array();
    for (const auto &c : r.cases) {
        cases.push_back(case_json(c));
    }
    json j{{"suite", r.suite},
           {"config", {{"seed", r.seed}, {"samples", r.samples}, {"tolerance", r.tolerance}}},
           {"cases", cases},
           {"max_residual", r.max_residual},
           {"passed", r.passed}};
    if (!r.notes.empty()) {
        j["notes"] = r.notes;
    }
    return j;
}

json duration(const std::optional<double> &d)
{
    return d ? json(*d) : json(nullptr);
}

std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

using Row = std::vector<std::pair<std::string, std::string>>;

Row case_row(const std::string &suite, const CaseRecord &c)
{
    Row row{{"suite", suite},
            {"case", std::to_string(c.index)},
            {"residual", format_number(c.residual)},
            {"passed", c.passed ? "true" : "false"}};
    flatten(c.inputs, "", row);
    flatten(c.outputs, "", row);
    if (!c.error.empty()) {
        row.emplace_back("error", c.error);
    }
    return row;
}

std::string rows_csv(const std::vector<Row> &rows)
{
    // Column order: first appearance across rows.
    std::vector<std::string> columns{"suite", "case", "residual", "passed"};
    std::set<std::string> seen(columns.begin(), columns.end());
    for (const auto &row : rows) {
        for (const auto &[name, value] : row) {
            if (seen.insert(name).second) {
                columns.push_back(name);
            }
        }
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        os << (i ? "," : "") << csv_escape(columns[i]);
    }
    os << '\n';
    for (const auto &row : rows) {
        std::map<std::string, std::string> cells(row.begin(), row.end());
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const auto it = cells.find(columns[i]);
            os << (i ? "," : "") << (it == cells.end() ? "" : csv_escape(it->second));
        }
        os << '\n';
    }
    return os.str();
}

} // namespace

std::string format_number(double v)
{
    return json(v).dump();
}

json report_json(const VerificationReport &r)
{
    json j{{"schema_version", schema_version}};
    const json body = suite_body(r);
    for (const auto &[k, v] : body.items()) {
        j[k] = v;
    }
    j["duration_ms"] = duration(r.duration_ms);
    return j;
}

json report_json(const CombinedReport &r)
{
    json suites = json::array();
    json cases = json::array();
    for (const auto &s : r.suites) {
        json body = suite_body(s);
        body["duration_ms"] = duration(s.duration_ms);
        cases.push_back(body);
    }
    const std::uint64_t seed = r.suites.empty() ? 0 : r.suites.front().seed;
    json tolerances = json::object();
    for (const auto &s : r.suites) {
        tolerances[s.suite] = s.tolerance;
    }
    return json{{"schema_version", schema_version},
                {"suite", "all"},
                {"config", {{"seed", seed}, {"tolerances", tolerances}}},
                {"cases", cases},
                {"max_residual", r.max_residual},
                {"passed", r.passed},
                {"duration_ms", duration(r.duration_ms)}};
}

void flatten(const json &value, const std::string &prefix, std::vector<std::pair<std::string, std::string>> &out)
{
    const auto join = [&](const std::string &key) { return prefix.empty() ? key : prefix + "_" + key; };
    if (value.is_object()) {
        if (value.size() == 2 && value.contains("re") && value.contains("im")) {
            out.emplace_back(join("re"), value["re"].dump());
            out.emplace_back(join("im"), value["im"].dump());
            return;
        }
        for (const auto &[k, v] : value.items()) {
            flatten(v, join(k), out);
        }
    } else if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            flatten(value[i], join(std::to_string(i)), out);
        }
    } else if (value.is_string()) {
        out.emplace_back(prefix, value.get<std::string>());
    } else {
        out.emplace_back(prefix, value.dump());
    }
}

std::string report_csv(const VerificationReport &r)
{
    std::vector<Row> rows;
    for (const auto &c : r.cases) {
        rows.push_back(case_row(r.suite, c));
    }
    return rows_csv(rows);
}

std::string report_csv(const CombinedReport &r)
{
    std::vector<Row> rows;
    for (const auto &s : r.suites) {
        for (const auto &c : s.cases) {
            rows.push_back(case_row(s.suite, c));
        }
    }
    return rows_csv(rows);
}

void emit(const std::string &text, const std::string &path, std::ostream &fallback)
{
    if (path.empty()) {
        fallback << text;
        fallback.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << text;
}

} // namespace traintrack::cli
