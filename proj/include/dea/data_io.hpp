#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dea/analysis.hpp"
#include "dea/dataset.hpp"

// Panel ingestion, the embedded bank panel, and report serialization.
//
// Panel CSV schema: header "id,name" followed by at least one "in:"-prefixed
// and one "out:"-prefixed column; every numeric cell must be a strictly
// positive finite real. Thousands separators (commas inside quoted cells)
// are accepted on input and never emitted.
//
// Report JSON schema:
//   {"dmus":[{"name","theta","u":[..],"v":[..],"t_star","u_scaled":[..],"class"}]}
// Arrays are in column order; numbers are decimal literals at full precision.

namespace dea::io {

Dataset parse_panel(std::string_view text);
std::string render_panel(const Dataset& d);

// The embedded 21-bank panel (2 inputs, 2 outputs, bank-type tags attached).
Dataset bank_fixture();
// Raw bytes of the embedded panel, exposed so tests can pin a checksum.
std::string_view bank_fixture_csv();

enum class ReportFormat { text, csv, json };

ReportFormat parse_report_format(std::string_view name); // "text" | "csv" | "json"

struct ReportRow {
    std::string id;
    std::string name;
    std::string tag;
    double theta = 0.0;
    std::vector<double> u;
    std::vector<double> v;
    double t_star = 0.0;
    std::vector<double> u_scaled;
    std::string cls;
    std::string error; // nonempty -> all other numeric fields are absent
};

struct Report {
    std::vector<std::string> input_labels;
    std::vector<std::string> output_labels;
    std::vector<ReportRow> rows;
};

Report make_report(const Dataset& d, const analysis::FullReport& full);

// Deterministic rendering. Text mode rounds scores to 3 decimals and prints
// weights in 3-significant-digit scientific notation; csv/json keep full
// precision (shortest round-trip decimal).
std::string render_report(const Report& r, ReportFormat format);

// Inverse of render_report for the machine formats (round-trip checks and
// downstream tooling).
Report parse_report_csv(std::string_view text);
Report parse_report_json(std::string_view text);

// "8.35e-5"-style 3-significant-digit scientific formatting; zero -> "0".
std::string format_sci3(double v);
// Shortest decimal that round-trips to the same double.
std::string format_full(double v);
// Fixed 3-decimal score formatting.
std::string format_score(double v);

} // namespace dea::io
