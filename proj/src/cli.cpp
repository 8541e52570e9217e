#include "ccmetrics/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ccmetrics/cfg.hpp"
#include "ccmetrics/dataset.hpp"
#include "ccmetrics/errors.hpp"
#include "ccmetrics/halstead.hpp"
#include "ccmetrics/lexer.hpp"
#include "ccmetrics/loc.hpp"
#include "ccmetrics/report.hpp"
#include "ccmetrics/stats.hpp"

namespace fs = std::filesystem;

namespace ccmetrics::cli {

namespace {

struct MeasureOptions {
    std::vector<std::string> paths;
    std::string granularity = "function";
    std::string format = "text";
    std::string out_path;
    std::string dump_cfg_dir;
};

struct AnalyzeOptions {
    std::string dataset_path;
    std::string mapping = "mdp";
    std::string pairs;
    std::string format = "text";
    std::string scatter_dir;
    std::string out_path;
};

struct SummarizeOptions {
    std::vector<std::string> paths;
    std::string mapping = "mdp";
    std::string out_path;
};

std::optional<std::string> read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Directories recurse over *.c / *.h; explicit files pass through.
// Lexicographic order keeps output independent of filesystem enumeration.
std::vector<std::string> collect_files(const std::vector<std::string>& paths,
                                       std::ostream& err, bool& failed) {
    std::vector<std::string> files;
    for (const std::string& p : paths) {
        if (p == "-") {
            files.push_back(p);
            continue;
        }
        std::error_code ec;
        if (fs::is_directory(p, ec)) {
            std::vector<std::string> found;
            for (const auto& entry :
                 fs::recursive_directory_iterator(p, ec)) {
                if (!entry.is_regular_file()) continue;
                std::string ext = entry.path().extension().string();
                if (ext == ".c" || ext == ".h") {
                    found.push_back(entry.path().string());
                }
            }
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else if (fs::exists(p, ec)) {
            files.push_back(p);
        } else {
            err << "error: no such file or directory: " << p << "\n";
            failed = true;
        }
    }
    return files;
}

std::string slice_lines(const std::string& source, int first, int last) {
    if (first < 1) first = 1;
    std::size_t begin = 0;
    int line = 1;
    while (line < first) {
        std::size_t nl = source.find('\n', begin);
        if (nl == std::string::npos) return {};
        begin = nl + 1;
        ++line;
    }
    std::size_t end = begin;
    while (line <= last) {
        std::size_t nl = source.find('\n', end);
        if (nl == std::string::npos) {
            end = source.size();
            break;
        }
        end = nl + 1;
        ++line;
    }
    return source.substr(begin, end - begin);
}

void push_cell(MetricRow& row, std::string name, MetricValue value) {
    row.cells.push_back({std::move(name), std::move(value)});
}

void push_loc_cells(MetricRow& row, const LocReport& loc) {
    push_cell(row, "ploc", loc.ploc);
    push_cell(row, "sloc", loc.sloc);
    push_cell(row, "cloc", loc.cloc);
    push_cell(row, "scloc", loc.scloc);
    push_cell(row, "bloc", loc.bloc);
    push_cell(row, "lloc", loc.lloc);
    push_cell(row, "jones_executable",
              loc.jones_mode_counts.at(JonesMode::ExecutableOnly));
    push_cell(row, "jones_exec_data",
              loc.jones_mode_counts.at(JonesMode::ExecutableAndData));
    push_cell(row, "jones_exec_comments_data",
              loc.jones_mode_counts.at(JonesMode::ExecutableCommentsData));
    push_cell(row, "jones_exec_comments_data_jcl",
              loc.jones_mode_counts.at(JonesMode::ExecutableCommentsDataJcl));
    push_cell(row, "jones_physical",
              loc.jones_mode_counts.at(JonesMode::PhysicalInputLines));
    push_cell(row, "jones_logical",
              loc.jones_mode_counts.at(JonesMode::LogicalTerminated));
}

void push_halstead_cells(MetricRow& row, const HalsteadCounts& counts,
                         const std::optional<HalsteadMeasures>& m) {
    push_cell(row, "n1", counts.n1);
    push_cell(row, "n2", counts.n2);
    push_cell(row, "N1", counts.N1);
    push_cell(row, "N2", counts.N2);
    auto opt = [&](double HalsteadMeasures::*field) -> MetricValue {
        if (m) return (*m).*field;
        return std::monostate{};
    };
    push_cell(row, "vocabulary", opt(&HalsteadMeasures::vocabulary));
    push_cell(row, "length", opt(&HalsteadMeasures::length));
    push_cell(row, "volume", opt(&HalsteadMeasures::volume));
    push_cell(row, "difficulty", opt(&HalsteadMeasures::difficulty));
    push_cell(row, "level", opt(&HalsteadMeasures::level));
    push_cell(row, "intelligence", opt(&HalsteadMeasures::intelligence));
    push_cell(row, "effort", opt(&HalsteadMeasures::effort));
    push_cell(row, "time_s", opt(&HalsteadMeasures::time_seconds));
}

void push_cc_cells(MetricRow& row, std::optional<int> cc_graph,
                   std::optional<int> cc_decisions) {
    push_cell(row, "cc_graph",
              cc_graph ? MetricValue(static_cast<std::int64_t>(*cc_graph))
                       : MetricValue(std::monostate{}));
    push_cell(row, "cc_decisions",
              cc_decisions
                  ? MetricValue(static_cast<std::int64_t>(*cc_decisions))
                  : MetricValue(std::monostate{}));
    push_cell(row, "band",
              cc_graph ? MetricValue(std::string(complexity_band(*cc_graph)))
                       : MetricValue(std::monostate{}));
}

std::string sanitize_name(const std::string& name) {
    std::string out;
    for (char c : name) {
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' ||
                c == '-' || c == '_')
                   ? c
                   : '_';
    }
    return out;
}

void print_diagnostics(std::ostream& err, const std::string& path,
                       const std::vector<Diagnostic>& diags) {
    for (const Diagnostic& d : diags) {
        err << path << ':' << d.line;
        if (d.column > 0) err << ':' << d.column;
        err << ": " << d.message << "\n";
    }
}

int write_report(const std::string& rendered, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
    if (out_path.empty()) {
        out << rendered;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        err << "error: cannot write " << out_path << "\n";
        return 1;
    }
    f << rendered;
    return f ? 0 : 1;
}

int cmd_measure(const MeasureOptions& opts, std::ostream& out,
                std::ostream& err) {
    bool failed = false;
    std::vector<std::string> files = collect_files(opts.paths, err, failed);
    if (files.empty() && !failed) {
        err << "error: no input files\n";
        return 1;
    }

    std::vector<MetricRow> rows;
    for (const std::string& path : files) {
        std::optional<std::string> source = read_input(path);
        if (!source) {
            err << "error: cannot read " << path << "\n";
            failed = true;
            continue;
        }
        LexResult lex = tokenize(*source);
        print_diagnostics(err, path, lex.diagnostics);
        FunctionParse parsed = parse_functions(lex.tokens);
        print_diagnostics(err, path, parsed.diagnostics);

        auto unit_halstead = [&](const FunctionUnit& u)
            -> std::pair<HalsteadCounts, std::optional<HalsteadMeasures>> {
            std::span<const Token> span(lex.tokens);
            HalsteadCounts counts = classify(span.subspan(
                u.body_token_begin, u.body_token_end - u.body_token_begin));
            std::optional<HalsteadMeasures> m;
            try {
                m = measures(counts);
            } catch (const MetricsError&) {
                err << path << ": " << (u.anonymous ? path : u.name)
                    << ": EmptyProgram: no operators or operands\n";
            }
            return {std::move(counts), m};
        };

        auto maybe_dump = [&](const FunctionUnit& u,
                              const ControlFlowGraph& cfg) {
            if (opts.dump_cfg_dir.empty()) return;
            fs::create_directories(opts.dump_cfg_dir);
            std::string name = sanitize_name(
                fs::path(path).filename().string() + "_" +
                (u.anonymous ? "toplevel" : u.name)) + ".cfg";
            std::ofstream f(fs::path(opts.dump_cfg_dir) / name);
            f << dump_cfg(cfg);
        };

        if (opts.granularity == "function") {
            for (const FunctionUnit& u : parsed.units) {
                MetricRow row;
                row.unit = u.anonymous ? path : path + ":" + u.name;
                LocReport loc =
                    count_loc(slice_lines(*source, u.start_line, u.end_line));
                push_loc_cells(row, loc);
                auto [counts, m] = unit_halstead(u);
                push_halstead_cells(row, counts, m);
                ControlFlowGraph cfg = build_cfg(u);
                print_diagnostics(err, path, cfg.diagnostics);
                maybe_dump(u, cfg);
                push_cc_cells(row, cyclomatic_edges_nodes(cfg),
                              cyclomatic_decisions(u));
                rows.push_back(std::move(row));
            }
        } else {
            MetricRow row;
            row.unit = path;
            push_loc_cells(row, count_loc(*source));
            // file-level Halstead: one classification over the whole token
            // stream (count-level aggregation, not averaged measures)
            HalsteadCounts counts = classify(lex.tokens);
            std::optional<HalsteadMeasures> m;
            try {
                m = measures(counts);
            } catch (const MetricsError&) {
                err << path << ": EmptyProgram: no operators or operands\n";
            }
            push_halstead_cells(row, counts, m);
            if (parsed.units.empty()) {
                push_cc_cells(row, std::nullopt, std::nullopt);
            } else {
                int total_graph = 0, total_dec = 0;
                for (const FunctionUnit& u : parsed.units) {
                    ControlFlowGraph cfg = build_cfg(u);
                    print_diagnostics(err, path, cfg.diagnostics);
                    maybe_dump(u, cfg);
                    total_graph += cyclomatic_edges_nodes(cfg);
                    total_dec += cyclomatic_decisions(u);
                }
                push_cc_cells(row, total_graph, total_dec);
            }
            rows.push_back(std::move(row));
        }
    }

    std::string rendered =
        render_metric_rows(rows, parse_output_format(opts.format));
    if (write_report(rendered, opts.out_path, out, err) != 0) return 1;
    return failed ? 1 : 0;
}

std::vector<MetricPair> parse_pairs_arg(const std::string& arg) {
    if (arg.empty()) return default_metric_pairs();
    std::vector<MetricPair> pairs;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t colon = item.find(':');
        if (colon == std::string::npos) {
            throw CLI::ValidationError("--pairs",
                                       "expected x:y in '" + item + "'");
        }
        auto x = parse_metric_field(item.substr(0, colon));
        auto y = parse_metric_field(item.substr(colon + 1));
        if (!x || !y) {
            throw CLI::ValidationError(
                "--pairs", "unknown metric field in '" + item +
                               "' (use loc, cc, hv, errors)");
        }
        pairs.push_back({*x, *y});
    }
    if (pairs.empty()) {
        throw CLI::ValidationError("--pairs", "no pairs given");
    }
    return pairs;
}

std::string dataset_name_for(const std::string& path) {
    std::string stem = fs::path(path).stem().string();
    return stem.empty() ? path : stem;
}

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out,
                std::ostream& err) {
    std::vector<MetricPair> pairs = parse_pairs_arg(opts.pairs);
    try {
        ColumnMapping mapping = ColumnMapping::resolve(opts.mapping);
        LoadResult loaded = load_csv(opts.dataset_path, mapping);
        if (!loaded.quarantine.empty()) {
            err << "quarantined rows for " << opts.dataset_path << ":\n"
                << render_quarantine_csv(loaded.quarantine);
        }
        std::string name = dataset_name_for(opts.dataset_path);
        CorrelationReport report = correlate(name, loaded.records, pairs);

        OutputFormat format = parse_output_format(opts.format);
        std::string rendered;
        if (format == OutputFormat::Text) {
            DatasetSummary summary = summarize(name, loaded.records);
            rendered = render_summary({&summary, 1});
            rendered += "\n";
        }
        rendered += render_correlations(report, format);

        if (!opts.scatter_dir.empty()) {
            fs::create_directories(opts.scatter_dir);
            for (const MetricPair& pair : pairs) {
                std::string file =
                    name + "_" + metric_field_name(pair.x) + "_" +
                    metric_field_name(pair.y) + ".csv";
                std::size_t written = emit_scatter(
                    loaded.records, pair.x, pair.y,
                    (fs::path(opts.scatter_dir) / sanitize_name(file)).string());
                err << "scatter: wrote " << written << " rows to "
                    << (fs::path(opts.scatter_dir) / sanitize_name(file)).string()
                    << "\n";
            }
        }
        return write_report(rendered, opts.out_path, out, err);
    } catch (const MetricsError& e) {
        err << "error: " << error_kind_name(e.kind()) << ": " << e.what()
            << "\n";
        return 1;
    }
}

int cmd_summarize(const SummarizeOptions& opts, std::ostream& out,
                  std::ostream& err) {
    std::vector<DatasetSummary> summaries;
    bool failed = false;
    for (const std::string& path : opts.paths) {
        try {
            ColumnMapping mapping = ColumnMapping::resolve(opts.mapping);
            LoadResult loaded = load_csv(path, mapping);
            if (!loaded.quarantine.empty()) {
                err << "quarantined rows for " << path << ":\n"
                    << render_quarantine_csv(loaded.quarantine);
            }
            summaries.push_back(
                summarize(dataset_name_for(path), loaded.records));
        } catch (const MetricsError& e) {
            err << "error: " << path << ": " << error_kind_name(e.kind())
                << ": " << e.what() << "\n";
            failed = true;
        }
    }
    if (summaries.empty()) {
        err << "error: no dataset could be summarized\n";
        return 1;
    }
    if (write_report(render_summary(summaries), opts.out_path, out, err) != 0) {
        return 1;
    }
    return failed ? 1 : 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"source complexity metrics and defect-dataset correlation"};
    app.require_subcommand(1);

    MeasureOptions measure;
    CLI::App* m = app.add_subcommand(
        "measure", "compute LOC, Halstead, and cyclomatic metrics");
    m->add_option("paths", measure.paths,
                  "source files, directories, or - for stdin")
        ->required();
    m->add_option("--granularity", measure.granularity,
                  "per-unit granularity")
        ->check(CLI::IsMember({"function", "file"}))
        ->capture_default_str();
    m->add_option("--format", measure.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    m->add_option("--out", measure.out_path, "write the report to a file");
    m->add_option("--dump-cfg", measure.dump_cfg_dir,
                  "write per-function CFG edge lists into this directory");

    AnalyzeOptions analyze;
    CLI::App* a = app.add_subcommand(
        "analyze", "correlate metric columns of a per-module defect CSV");
    a->add_option("dataset", analyze.dataset_path, "CSV file")->required();
    a->add_option("--mapping", analyze.mapping,
                  "column mapping preset (mdp, promise) or key=value file")
        ->capture_default_str();
    a->add_option("--pairs", analyze.pairs,
                  "comma-separated x:y pairs (loc, cc, hv, errors); "
                  "default: cc:loc,hv:loc,cc:errors,hv:errors,cc:hv");
    a->add_option("--format", analyze.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    a->add_option("--scatter-dir", analyze.scatter_dir,
                  "emit per-pair scatter CSVs into this directory");
    a->add_option("--out", analyze.out_path, "write the report to a file");

    SummarizeOptions summ;
    CLI::App* s = app.add_subcommand(
        "summarize", "per-dataset summary table over one or more CSVs");
    s->add_option("datasets", summ.paths, "CSV files")->required();
    s->add_option("--mapping", summ.mapping,
                  "column mapping preset (mdp, promise) or key=value file")
        ->capture_default_str();
    s->add_option("--out", summ.out_path, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (m->parsed()) return cmd_measure(measure, out, err);
        if (a->parsed()) return cmd_analyze(analyze, out, err);
        if (s->parsed()) return cmd_summarize(summ, out, err);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const MetricsError& e) {
        err << "error: " << error_kind_name(e.kind()) << ": " << e.what()
            << "\n";
        return 1;
    }
    return 2;
}

}  // namespace ccmetrics::cli
