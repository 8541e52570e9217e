#ifndef CCMETRICS_REPORT_HPP
#define CCMETRICS_REPORT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ccmetrics/dataset.hpp"

namespace ccmetrics {

enum class OutputFormat { Text, Csv, Json };

// Throws UnknownFormat.
OutputFormat parse_output_format(std::string_view name);

// absent (monostate) renders as "-" in text and null in JSON
using MetricValue = std::variant<std::monostate, std::int64_t, double, std::string>;

struct MetricCell {
    std::string name;
    MetricValue value;
};

struct MetricRow {
    std::string unit;  // file or function name
    std::vector<MetricCell> cells;
};

std::string render_metric_rows(std::span<const MetricRow> rows,
                               OutputFormat format);

// Table-1 style: one column per dataset, rows # of Modules / LOC /
// Sum of Errors / Avg of Errors / Avg of HV / Avg of CC. Duplicate dataset
// names get disambiguating suffixes plus a trailing warning line.
std::string render_summary(std::span<const DatasetSummary> summaries);

std::string render_correlations(const CorrelationReport& report,
                                OutputFormat format);

// |r| >= 0.8 very strong, >= 0.6 strong, >= 0.4 moderate, >= 0.2 weak,
// else very weak.
std::string_view strength_label(double r);

// "y = 4.322x - 2.802", slope/intercept at 4 significant digits.
std::string equation_string(double slope, double intercept);

// Two-column CSV of the pair's values (quarantined rows were already
// excluded at load); a trailing `# trendline:` line carries the fitted
// slope/intercept. Returns data rows written.
std::size_t emit_scatter(std::span<const ModuleRecord> records, MetricField x,
                         MetricField y, const std::string& path);

std::string render_quarantine_csv(std::span<const QuarantineEntry> entries);

}  // namespace ccmetrics

#endif
