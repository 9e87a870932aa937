#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace approxop {

struct ReportRow {
    std::string experiment;
    std::int64_t n = 0;
    double beta = 0.0;
    double x = 0.0;
    double measured = 0.0;
    double reference = 0.0;
    std::optional<double> bound;
    double residual_mass = 0.0;
};

/// Tabular experiment output. Rows are kept sorted by (experiment, n, x, beta)
/// so identical inputs always serialize byte-identically.
struct ExperimentReport {
    int schema_version = 1;
    std::vector<ReportRow> rows;

    void sort_rows();
};

enum class ReportFormat { Csv, Json };

/// Parses "csv" / "json".
ReportFormat parse_report_format(const std::string& name);

/// %.17g rendering used everywhere a float reaches a report or config file.
std::string format_double(double v);

/// CSV with the fixed header
/// experiment,n,beta,x,measured,reference,bound,residual_mass
/// and floats printed with 17 significant digits (full round-trip precision).
/// An absent bound serializes as an empty field.
std::string to_csv(const ExperimentReport& report);

/// JSON object {"schema_version": ..., "rows": [...]} with fixed key order.
std::string to_json(const ExperimentReport& report);

class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Writes the serialized report to `path`; "-" or "" means stdout.
/// Throws IoError when the path is not writable.
void write_report(const ExperimentReport& report, ReportFormat format, const std::string& path);

}  // namespace approxop
