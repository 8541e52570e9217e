#ifndef CCMETRICS_DATASET_HPP
#define CCMETRICS_DATASET_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccmetrics/stats.hpp"

namespace ccmetrics {

// One row of a per-module defect dataset. Numeric fields are stored as
// doubles: column vocabularies drifted across dataset vintages and some
// ship real-valued counts.
struct ModuleRecord {
    std::string module_id;
    double loc = 0;
    double cyclomatic = 0;
    double halstead_volume = 0;
    double error_count = 0;
    std::map<std::string, std::string> extras;  // unmapped columns, retained
};

enum class MetricField { Loc, Cyclomatic, HalsteadVolume, ErrorCount };

const char* metric_field_name(MetricField field);
// Accepts canonical names and the short aliases cc, hv, errors.
std::optional<MetricField> parse_metric_field(std::string_view name);
double metric_value(const ModuleRecord& record, MetricField field);

// Source-column name per target field. module_id may be the special value
// "@row" for vintages that ship no identifier column.
struct ColumnMapping {
    std::string module_id;
    std::string loc;
    std::string cyclomatic;
    std::string halstead_volume;
    std::string error_count;

    // Built-in vintages: "mdp" (MODULE/LOC_TOTAL/...) and
    // "promise" (loc/v(g)/v/defects with synthesized row ids).
    static std::optional<ColumnMapping> preset(std::string_view name);
    // Plain-text `key = value` file with the five target names as keys.
    static ColumnMapping from_file(const std::string& path);
    // Resolves a preset name or, failing that, reads a mapping file.
    static ColumnMapping resolve(const std::string& preset_or_path);
};

struct QuarantineEntry {
    std::size_t row = 0;  // 1-based data-row index, header excluded
    std::string reason;
};

struct LoadResult {
    std::vector<ModuleRecord> records;
    std::vector<QuarantineEntry> quarantine;
};

// RFC-4180 CSV with a header row; header matching is case-insensitive and
// whitespace-trimmed. Unparseable rows are quarantined, never dropped
// silently. Throws FileNotFound, MissingColumn, EmptyDataset.
LoadResult load_csv(const std::string& path, const ColumnMapping& mapping);

// Same parse over in-memory text (the file loader wraps this).
LoadResult load_csv_text(std::string_view text, const ColumnMapping& mapping);

struct DatasetSummary {
    std::string name;
    std::size_t module_count = 0;
    double total_loc = 0;
    double total_errors = 0;
    double avg_errors = 0;
    double avg_halstead_volume = 0;
    double avg_cyclomatic = 0;
};

DatasetSummary summarize(std::string_view name,
                         std::span<const ModuleRecord> records);

struct MetricPair {
    MetricField x = MetricField::Cyclomatic;
    MetricField y = MetricField::Loc;
};

struct PairResult {
    MetricPair pair;
    bool ok = false;
    RegressionLine line;  // valid when ok
    std::string error;    // set when !ok
};

struct CorrelationReport {
    std::string dataset_name;
    std::size_t record_count = 0;
    std::vector<PairResult> pairs;
};

// The five relationships studied by default: (cc,loc), (hv,loc),
// (cc,errors), (hv,errors), (cc,hv).
std::vector<MetricPair> default_metric_pairs();

// Per-pair errors (for instance a constant column) are isolated in the
// result; other pairs still compute.
CorrelationReport correlate(std::string_view dataset_name,
                            std::span<const ModuleRecord> records,
                            std::span<const MetricPair> pairs);

}  // namespace ccmetrics

#endif
