#include "ccmetrics/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "ccmetrics/errors.hpp"

namespace ccmetrics {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string fmt_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

// shortest text that still round-trips exactly
std::string fmt_exact(double v) { return fmt("%.17g", v); }

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// column-aligned table: first column left, the rest right
std::string align_table(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> widths;
    for (const auto& row : cells) {
        if (row.size() > widths.size()) widths.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::string& text = row[c];
            if (c == 0) {
                out << text << std::string(widths[c] - text.size(), ' ');
            } else {
                out << "  " << std::string(widths[c] - text.size(), ' ') << text;
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string text_value(const MetricValue& v) {
    if (std::holds_alternative<std::monostate>(v)) return "-";
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&v)) return fmt_fixed(*d, 2);
    return std::get<std::string>(v);
}

nlohmann::json json_value(const MetricValue& v) {
    if (std::holds_alternative<std::monostate>(v)) return nullptr;
    if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
    if (const auto* d = std::get_if<double>(&v)) return *d;
    return std::get<std::string>(v);
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw MetricsError(ErrorKind::UnknownFormat,
                       "unknown output format '" + std::string(name) +
                           "' (expected text, csv, or json)");
}

std::string render_metric_rows(std::span<const MetricRow> rows,
                               OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: {
            std::vector<std::vector<std::string>> cells;
            std::vector<std::string> header = {"unit"};
            if (!rows.empty()) {
                for (const MetricCell& c : rows.front().cells) {
                    header.push_back(c.name);
                }
            }
            cells.push_back(std::move(header));
            for (const MetricRow& row : rows) {
                std::vector<std::string> line = {row.unit};
                for (const MetricCell& c : row.cells) {
                    line.push_back(text_value(c.value));
                }
                cells.push_back(std::move(line));
            }
            return align_table(cells);
        }
        case OutputFormat::Csv: {
            std::ostringstream out;
            out << "unit";
            if (!rows.empty()) {
                for (const MetricCell& c : rows.front().cells) {
                    out << ',' << csv_quote(c.name);
                }
            }
            out << '\n';
            for (const MetricRow& row : rows) {
                out << csv_quote(row.unit);
                for (const MetricCell& c : row.cells) {
                    out << ',';
                    if (std::holds_alternative<std::monostate>(c.value)) {
                        // empty cell
                    } else if (const auto* i = std::get_if<std::int64_t>(&c.value)) {
                        out << *i;
                    } else if (const auto* d = std::get_if<double>(&c.value)) {
                        out << fmt("%.12g", *d);
                    } else {
                        out << csv_quote(std::get<std::string>(c.value));
                    }
                }
                out << '\n';
            }
            return out.str();
        }
        case OutputFormat::Json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const MetricRow& row : rows) {
                nlohmann::json obj;
                obj["unit"] = row.unit;
                for (const MetricCell& c : row.cells) {
                    obj[c.name] = json_value(c.value);
                }
                arr.push_back(std::move(obj));
            }
            return arr.dump(2) + "\n";
        }
    }
    return {};
}

std::string render_summary(std::span<const DatasetSummary> summaries) {
    std::vector<std::string> names;
    std::vector<std::string> warnings;
    std::map<std::string, int> seen;
    for (const DatasetSummary& s : summaries) {
        int& count = seen[s.name];
        ++count;
        if (count == 1) {
            names.push_back(s.name);
        } else {
            names.push_back(s.name + " (" + std::to_string(count) + ")");
            warnings.push_back("warning: duplicate dataset name '" + s.name +
                               "' renamed to '" + names.back() + "'");
        }
    }

    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header = {""};
    header.insert(header.end(), names.begin(), names.end());
    cells.push_back(std::move(header));

    auto row = [&](const std::string& label, auto value) {
        std::vector<std::string> line = {label};
        for (const DatasetSummary& s : summaries) line.push_back(value(s));
        cells.push_back(std::move(line));
    };
    row("# of Modules", [](const DatasetSummary& s) {
        return std::to_string(s.module_count);
    });
    row("LOC", [](const DatasetSummary& s) { return fmt_fixed(s.total_loc, 0); });
    row("Sum of Errors",
        [](const DatasetSummary& s) { return fmt_fixed(s.total_errors, 0); });
    row("Avg of Errors",
        [](const DatasetSummary& s) { return fmt_fixed(s.avg_errors, 3); });
    row("Avg of HV", [](const DatasetSummary& s) {
        return fmt_fixed(s.avg_halstead_volume, 2);
    });
    row("Avg of CC",
        [](const DatasetSummary& s) { return fmt_fixed(s.avg_cyclomatic, 2); });

    std::string out = align_table(cells);
    for (const std::string& w : warnings) out += w + '\n';
    return out;
}

std::string_view strength_label(double r) {
    double a = std::fabs(r);
    if (a >= 0.8) return "very strong";
    if (a >= 0.6) return "strong";
    if (a >= 0.4) return "moderate";
    if (a >= 0.2) return "weak";
    return "very weak";
}

std::string equation_string(double slope, double intercept) {
    std::string out = "y = " + fmt("%.4g", slope) + "x";
    if (std::signbit(intercept)) {
        out += " - " + fmt("%.4g", -intercept);
    } else {
        out += " + " + fmt("%.4g", intercept);
    }
    return out;
}

std::string render_correlations(const CorrelationReport& report,
                                OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: {
            std::ostringstream out;
            out << "dataset: " << report.dataset_name << " (modules: "
                << report.record_count << ")\n";
            std::vector<std::vector<std::string>> cells;
            cells.push_back({"x", "y", "n", "r", "r^2", "slope", "intercept",
                             "strength", "equation"});
            for (const PairResult& p : report.pairs) {
                std::vector<std::string> line = {metric_field_name(p.pair.x),
                                                 metric_field_name(p.pair.y)};
                if (p.ok) {
                    line.push_back(std::to_string(p.line.n));
                    line.push_back(fmt_fixed(p.line.r, 4));
                    line.push_back(fmt_fixed(p.line.r_squared, 4));
                    line.push_back(fmt("%.6g", p.line.slope));
                    line.push_back(fmt("%.6g", p.line.intercept));
                    line.push_back(std::string(strength_label(p.line.r)));
                    line.push_back(equation_string(p.line.slope, p.line.intercept));
                } else {
                    line.push_back("-");
                    line.push_back("error: " + p.error);
                }
                cells.push_back(std::move(line));
            }
            out << align_table(cells);
            return out.str();
        }
        case OutputFormat::Csv: {
            std::ostringstream out;
            out << "dataset,x,y,n,r,r_squared,slope,intercept,strength,"
                   "equation,error\n";
            for (const PairResult& p : report.pairs) {
                out << csv_quote(report.dataset_name) << ','
                    << metric_field_name(p.pair.x) << ','
                    << metric_field_name(p.pair.y) << ',';
                if (p.ok) {
                    out << p.line.n << ',' << fmt("%.12g", p.line.r) << ','
                        << fmt("%.12g", p.line.r_squared) << ','
                        << fmt("%.12g", p.line.slope) << ','
                        << fmt("%.12g", p.line.intercept) << ','
                        << strength_label(p.line.r) << ','
                        << csv_quote(equation_string(p.line.slope,
                                                     p.line.intercept))
                        << ',';
                } else {
                    out << ",,,,,," << csv_quote(p.error);
                }
                out << '\n';
            }
            return out.str();
        }
        case OutputFormat::Json: {
            nlohmann::json obj;
            obj["dataset"] = report.dataset_name;
            obj["modules"] = report.record_count;
            nlohmann::json pairs = nlohmann::json::array();
            for (const PairResult& p : report.pairs) {
                nlohmann::json e;
                e["x"] = metric_field_name(p.pair.x);
                e["y"] = metric_field_name(p.pair.y);
                if (p.ok) {
                    e["n"] = p.line.n;
                    e["r"] = p.line.r;
                    e["r_squared"] = p.line.r_squared;
                    e["slope"] = p.line.slope;
                    e["intercept"] = p.line.intercept;
                    e["strength"] = strength_label(p.line.r);
                    e["equation"] =
                        equation_string(p.line.slope, p.line.intercept);
                } else {
                    e["error"] = p.error;
                }
                pairs.push_back(std::move(e));
            }
            obj["pairs"] = std::move(pairs);
            return obj.dump(2) + "\n";
        }
    }
    return {};
}

std::size_t emit_scatter(std::span<const ModuleRecord> records, MetricField x,
                         MetricField y, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw MetricsError(ErrorKind::WriteFailure, "cannot write " + path);
    }
    out << metric_field_name(x) << ',' << metric_field_name(y) << '\n';
    SampleSeries xs{{}, metric_field_name(x)};
    SampleSeries ys{{}, metric_field_name(y)};
    for (const ModuleRecord& r : records) {
        double vx = metric_value(r, x);
        double vy = metric_value(r, y);
        out << fmt_exact(vx) << ',' << fmt_exact(vy) << '\n';
        xs.values.push_back(vx);
        ys.values.push_back(vy);
    }
    try {
        RegressionLine line = regress(xs, ys);
        out << "# trendline: slope=" << fmt_exact(line.slope)
            << " intercept=" << fmt_exact(line.intercept) << '\n';
    } catch (const MetricsError& e) {
        out << "# trendline: unavailable (" << e.what() << ")\n";
    }
    if (!out) {
        throw MetricsError(ErrorKind::WriteFailure, "write failed: " + path);
    }
    return records.size();
}

std::string render_quarantine_csv(std::span<const QuarantineEntry> entries) {
    std::ostringstream out;
    out << "row,reason\n";
    for (const QuarantineEntry& q : entries) {
        out << q.row << ',' << csv_quote(q.reason) << '\n';
    }
    return out.str();
}

}  // namespace ccmetrics
