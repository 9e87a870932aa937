#include "approxop/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <tuple>

#include "json.hpp"

namespace approxop {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void ExperimentReport::sort_rows() {
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        return std::tie(a.experiment, a.n, a.x, a.beta) <
               std::tie(b.experiment, b.n, b.x, b.beta);
    });
}

ReportFormat parse_report_format(const std::string& name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    throw std::invalid_argument("unknown report format '" + name + "' (expected csv or json)");
}

std::string to_csv(const ExperimentReport& report) {
    std::string out = "experiment,n,beta,x,measured,reference,bound,residual_mass\n";
    for (const auto& r : report.rows) {
        out += r.experiment;
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += format_double(r.beta);
        out += ',';
        out += format_double(r.x);
        out += ',';
        out += format_double(r.measured);
        out += ',';
        out += format_double(r.reference);
        out += ',';
        if (r.bound) out += format_double(*r.bound);
        out += ',';
        out += format_double(r.residual_mass);
        out += '\n';
    }
    return out;
}

std::string to_json(const ExperimentReport& report) {
    nlohmann::ordered_json j;
    j["schema_version"] = report.schema_version;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        nlohmann::ordered_json row;
        row["experiment"] = r.experiment;
        row["n"] = r.n;
        row["beta"] = r.beta;
        row["x"] = r.x;
        row["measured"] = r.measured;
        row["reference"] = r.reference;
        if (r.bound)
            row["bound"] = *r.bound;
        else
            row["bound"] = nullptr;
        row["residual_mass"] = r.residual_mass;
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

void write_report(const ExperimentReport& report, ReportFormat format, const std::string& path) {
    const std::string body = format == ReportFormat::Csv ? to_csv(report) : to_json(report);
    if (path.empty() || path == "-") {
        std::cout << body;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << body;
    out.flush();
    if (!out) throw IoError("failed writing report to '" + path + "'");
}

}  // namespace approxop
