#include "ccmetrics/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ccmetrics/errors.hpp"

namespace ccmetrics {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return s;
}

// RFC 4180: quoted fields may contain commas, newlines, and "" escapes.
std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool row_started = false;

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
        row_started = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                in_quotes = true;
                row_started = true;
                break;
            case ',':
                end_field();
                row_started = true;
                break;
            case '\r':
                break;
            case '\n':
                if (row_started || !field.empty() || !row.empty()) end_row();
                break;
            default:
                field += c;
                row_started = true;
                break;
        }
    }
    if (row_started || !field.empty() || !row.empty()) end_row();
    return rows;
}

// Numeric cell: plain number, or a defect flag (true/false, yes/no, y/n)
// ingested as 1/0 for vintages without error counts.
std::optional<double> parse_numeric(const std::string& raw) {
    std::string v = lower(trim(raw));
    if (v.empty()) return std::nullopt;
    if (v == "true" || v == "yes" || v == "y") return 1.0;
    if (v == "false" || v == "no" || v == "n") return 0.0;
    const char* begin = v.c_str();
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    if (end != begin + v.size()) return std::nullopt;
    if (!std::isfinite(value)) return std::nullopt;
    return value;
}

void require_mapped(const std::string& value, const char* target) {
    if (value.empty()) {
        throw MetricsError(ErrorKind::MissingColumn,
                           std::string("mapping does not assign a column for ") +
                               target);
    }
}

}  // namespace

const char* metric_field_name(MetricField field) {
    switch (field) {
        case MetricField::Loc: return "loc";
        case MetricField::Cyclomatic: return "cyclomatic";
        case MetricField::HalsteadVolume: return "halstead_volume";
        case MetricField::ErrorCount: return "error_count";
    }
    return "unknown";
}

std::optional<MetricField> parse_metric_field(std::string_view name) {
    std::string n = lower(trim(name));
    if (n == "loc") return MetricField::Loc;
    if (n == "cyclomatic" || n == "cc") return MetricField::Cyclomatic;
    if (n == "halstead_volume" || n == "hv") return MetricField::HalsteadVolume;
    if (n == "error_count" || n == "errors") return MetricField::ErrorCount;
    return std::nullopt;
}

double metric_value(const ModuleRecord& record, MetricField field) {
    switch (field) {
        case MetricField::Loc: return record.loc;
        case MetricField::Cyclomatic: return record.cyclomatic;
        case MetricField::HalsteadVolume: return record.halstead_volume;
        case MetricField::ErrorCount: return record.error_count;
    }
    return 0;
}

std::optional<ColumnMapping> ColumnMapping::preset(std::string_view name) {
    std::string n = lower(trim(name));
    if (n == "mdp") {
        return ColumnMapping{"MODULE", "LOC_TOTAL", "CYCLOMATIC_COMPLEXITY",
                             "HALSTEAD_VOLUME", "ERROR_COUNT"};
    }
    if (n == "promise") {
        return ColumnMapping{"@row", "loc", "v(g)", "v", "defects"};
    }
    return std::nullopt;
}

ColumnMapping ColumnMapping::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw MetricsError(ErrorKind::FileNotFound,
                           "mapping file not found: " + path);
    }
    ColumnMapping m;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos) continue;
        std::string key = lower(trim(t.substr(0, eq)));
        std::string value = trim(t.substr(eq + 1));
        if (key == "module_id") m.module_id = value;
        else if (key == "loc") m.loc = value;
        else if (key == "cyclomatic") m.cyclomatic = value;
        else if (key == "halstead_volume") m.halstead_volume = value;
        else if (key == "error_count") m.error_count = value;
    }
    return m;
}

ColumnMapping ColumnMapping::resolve(const std::string& preset_or_path) {
    if (auto p = preset(preset_or_path)) return *p;
    return from_file(preset_or_path);
}

LoadResult load_csv_text(std::string_view text, const ColumnMapping& mapping) {
    require_mapped(mapping.module_id, "module_id");
    require_mapped(mapping.loc, "loc");
    require_mapped(mapping.cyclomatic, "cyclomatic");
    require_mapped(mapping.halstead_volume, "halstead_volume");
    require_mapped(mapping.error_count, "error_count");

    std::vector<std::vector<std::string>> rows = parse_csv(text);
    if (rows.empty()) {
        throw MetricsError(ErrorKind::EmptyDataset, "CSV has no header row");
    }

    const std::vector<std::string>& header = rows.front();
    auto column_of = [&](const std::string& name) -> std::optional<std::size_t> {
        std::string want = lower(trim(name));
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (lower(trim(header[i])) == want) return i;
        }
        return std::nullopt;
    };

    std::optional<std::size_t> id_col;
    if (mapping.module_id != "@row") {
        id_col = column_of(mapping.module_id);
        if (!id_col) {
            throw MetricsError(ErrorKind::MissingColumn,
                               "missing column '" + mapping.module_id + "'");
        }
    }
    struct NumericColumn {
        const std::string* name;
        std::size_t index;
        double ModuleRecord::*field;
    };
    std::vector<NumericColumn> numeric;
    for (auto& [name, field] :
         {std::pair{&mapping.loc, &ModuleRecord::loc},
          std::pair{&mapping.cyclomatic, &ModuleRecord::cyclomatic},
          std::pair{&mapping.halstead_volume, &ModuleRecord::halstead_volume},
          std::pair{&mapping.error_count, &ModuleRecord::error_count}}) {
        auto col = column_of(*name);
        if (!col) {
            throw MetricsError(ErrorKind::MissingColumn,
                               "missing column '" + *name + "'");
        }
        numeric.push_back({name, *col, field});
    }

    LoadResult result;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const std::vector<std::string>& cells = rows[r];
        std::size_t data_row = r;  // 1-based, header excluded
        ModuleRecord record;
        std::string reason;

        for (const NumericColumn& col : numeric) {
            if (col.index >= cells.size()) {
                reason = "missing value for column '" + *col.name + "'";
                break;
            }
            std::optional<double> v = parse_numeric(cells[col.index]);
            if (!v) {
                reason = "cannot parse '" + trim(cells[col.index]) +
                         "' in column '" + *col.name + "' as a number";
                break;
            }
            if (*v < 0) {
                reason = "negative value in column '" + *col.name + "'";
                break;
            }
            record.*(col.field) = *v;
        }
        if (!reason.empty()) {
            result.quarantine.push_back({data_row, reason});
            continue;
        }

        if (id_col) {
            record.module_id =
                *id_col < cells.size() ? trim(cells[*id_col]) : "";
        } else {
            record.module_id = "row" + std::to_string(data_row);
        }
        for (std::size_t c = 0; c < header.size() && c < cells.size(); ++c) {
            bool mapped = (id_col && c == *id_col) ||
                          std::any_of(numeric.begin(), numeric.end(),
                                      [&](const NumericColumn& col) {
                                          return col.index == c;
                                      });
            if (!mapped) record.extras[trim(header[c])] = cells[c];
        }
        result.records.push_back(std::move(record));
    }

    if (result.records.empty()) {
        throw MetricsError(ErrorKind::EmptyDataset,
                           "no parseable data rows (" +
                               std::to_string(result.quarantine.size()) +
                               " quarantined)");
    }
    return result;
}

LoadResult load_csv(const std::string& path, const ColumnMapping& mapping) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MetricsError(ErrorKind::FileNotFound, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_csv_text(buffer.str(), mapping);
}

DatasetSummary summarize(std::string_view name,
                         std::span<const ModuleRecord> records) {
    if (records.empty()) {
        throw MetricsError(ErrorKind::EmptyDataset,
                           "cannot summarize an empty dataset");
    }
    DatasetSummary s;
    s.name = std::string(name);
    s.module_count = records.size();
    double total_hv = 0, total_cc = 0;
    for (const ModuleRecord& r : records) {
        s.total_loc += r.loc;
        s.total_errors += r.error_count;
        total_hv += r.halstead_volume;
        total_cc += r.cyclomatic;
    }
    double n = static_cast<double>(s.module_count);
    s.avg_errors = s.total_errors / n;
    s.avg_halstead_volume = total_hv / n;
    s.avg_cyclomatic = total_cc / n;
    return s;
}

std::vector<MetricPair> default_metric_pairs() {
    return {
        {MetricField::Cyclomatic, MetricField::Loc},
        {MetricField::HalsteadVolume, MetricField::Loc},
        {MetricField::Cyclomatic, MetricField::ErrorCount},
        {MetricField::HalsteadVolume, MetricField::ErrorCount},
        {MetricField::Cyclomatic, MetricField::HalsteadVolume},
    };
}

CorrelationReport correlate(std::string_view dataset_name,
                            std::span<const ModuleRecord> records,
                            std::span<const MetricPair> pairs) {
    CorrelationReport report;
    report.dataset_name = std::string(dataset_name);
    report.record_count = records.size();
    for (const MetricPair& pair : pairs) {
        PairResult res;
        res.pair = pair;
        SampleSeries xs{{}, metric_field_name(pair.x)};
        SampleSeries ys{{}, metric_field_name(pair.y)};
        xs.values.reserve(records.size());
        ys.values.reserve(records.size());
        for (const ModuleRecord& r : records) {
            xs.values.push_back(metric_value(r, pair.x));
            ys.values.push_back(metric_value(r, pair.y));
        }
        try {
            pearson(xs, ys);  // rejects a constant series on either side
            res.line = regress(xs, ys);
            res.ok = true;
        } catch (const MetricsError& e) {
            res.error = std::string(error_kind_name(e.kind())) + ": " + e.what();
        }
        report.pairs.push_back(std::move(res));
    }
    return report;
}

}  // namespace ccmetrics
