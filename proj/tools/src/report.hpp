#ifndef TRAINTRACK_CLI_REPORT_HPP
#define TRAINTRACK_CLI_REPORT_HPP

#include <traintrack/special.hpp>

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace traintrack::cli
{

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

enum class OutputFormat
{
    json,
    csv
};

/// Everything that determines a verification run. The output path is kept
/// out of the serialized config so reports written to different files match.
struct RunConfig
{
    std::map<std::string, double> tolerances; // per suite, overrides the defaults
    std::optional<std::size_t> sample_count;  // overrides every suite's default
    std::uint64_t rng_seed = 7;
    std::string output_path;                  // empty: standard output
    OutputFormat output_format = OutputFormat::json;
    bool timing = false;                      // fill duration_ms

    /// Throws std::invalid_argument on a zero sample count or a non-positive tolerance.
    void validate() const;
};

json to_json(cplx z);

struct CaseRecord
{
    std::size_t index = 0;
    json inputs = json::object();
    json outputs = json::object();
    double residual = 0.0;
    bool passed = false;
    std::string error; // set when the case raised instead of producing outputs
};

struct VerificationReport
{
    std::string suite;
    double tolerance = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<CaseRecord> cases;
    double max_residual = 0.0;
    bool passed = false;
    std::optional<double> duration_ms;
    json notes = json::object(); // suite-level findings, e.g. measured multipliers

    /// Sets max_residual and passed from the cases: passed iff max_residual <= tolerance.
    void finalize();
};

/// The combined report of `verify all`: per-suite reports, and a max_residual
/// that is the largest max_residual / tolerance ratio (so the tolerance is 1).
struct CombinedReport
{
    std::vector<VerificationReport> suites;
    double max_residual = 0.0;
    bool passed = false;
    std::optional<double> duration_ms;

    void finalize();
};

json report_json(const VerificationReport &r);
json report_json(const CombinedReport &r);

/// Flattens a JSON object into columns: nested objects join keys with '_',
/// {re, im} pairs become <name>_re / <name>_im and arrays are indexed.
void flatten(const json &value, const std::string &prefix, std::vector<std::pair<std::string, std::string>> &out);

/// One header row, then one row per case (rows of all suites for a combined report).
std::string report_csv(const VerificationReport &r);
std::string report_csv(const CombinedReport &r);

/// Writes to the path, or to `fallback` when the path is empty.
void emit(const std::string &text, const std::string &path, std::ostream &fallback);

/// Serializes a double the way the JSON writer does.
std::string format_number(double v);

} // namespace traintrack::cli

#endif
