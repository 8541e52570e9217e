#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccmetrics/errors.hpp"
#include "ccmetrics/report.hpp"
#include "helpers.hpp"

using namespace ccmetrics;

namespace {

DatasetSummary cm1_style_summary() {
    DatasetSummary s;
    s.name = "CM1";
    s.module_count = 505;
    s.total_loc = 16903;
    s.total_errors = 70;
    s.avg_errors = 0.13861386;
    s.avg_halstead_volume = 862.3712;
    s.avg_cyclomatic = 5.1823;
    return s;
}

CorrelationReport sample_report() {
    CorrelationReport report;
    report.dataset_name = "CM1";
    report.record_count = 505;
    PairResult p;
    p.pair = {MetricField::Cyclomatic, MetricField::Loc};
    p.ok = true;
    p.line = {4.3221987, -2.8024711, 0.85013, 0.85013 * 0.85013, 505};
    report.pairs.push_back(p);
    PairResult bad;
    bad.pair = {MetricField::Cyclomatic, MetricField::ErrorCount};
    bad.ok = false;
    bad.error = "ZeroVariance: series 'error_count' is constant";
    report.pairs.push_back(bad);
    return report;
}

}  // namespace

TEST_CASE("strength labels reproduce the case-study adjectives") {
    CHECK(strength_label(0.85) == "very strong");
    CHECK(strength_label(0.87) == "very strong");
    CHECK(strength_label(0.66) == "strong");
    CHECK(strength_label(0.059) == "very weak");
    CHECK(strength_label(0.033) == "very weak");
}

TEST_CASE("strength label boundaries and sign handling") {
    CHECK(strength_label(0.8) == "very strong");
    CHECK(strength_label(0.799999) == "strong");
    CHECK(strength_label(0.6) == "strong");
    CHECK(strength_label(0.599999) == "moderate");
    CHECK(strength_label(0.4) == "moderate");
    CHECK(strength_label(0.399999) == "weak");
    CHECK(strength_label(0.2) == "weak");
    CHECK(strength_label(0.199999) == "very weak");
    CHECK(strength_label(0.0) == "very weak");
    CHECK(strength_label(-0.9) == "very strong");
    CHECK(strength_label(1.0) == "very strong");
}

TEST_CASE("equation strings fold the intercept sign at 4 significant digits") {
    CHECK(equation_string(4.3221987, -2.8024711) == "y = 4.322x - 2.802");
    CHECK(equation_string(0.0300021, 1.67244) == "y = 0.03x + 1.672");
    CHECK(equation_string(0.0030004, -0.0040002) == "y = 0.003x - 0.004");
    CHECK(equation_string(3.00003e-05, 0.00150002) == "y = 3e-05x + 0.0015");
    CHECK(equation_string(114.4031, -98.78711) == "y = 114.4x - 98.79");
    CHECK(equation_string(2.0, 0.0) == "y = 2x + 0");
}

TEST_CASE("summary table mirrors the published layout") {
    DatasetSummary s = cm1_style_summary();
    std::string table = render_summary({&s, 1});
    CHECK(table.find("# of Modules") != std::string::npos);
    CHECK(table.find("LOC") != std::string::npos);
    CHECK(table.find("Sum of Errors") != std::string::npos);
    CHECK(table.find("Avg of Errors") != std::string::npos);
    CHECK(table.find("Avg of HV") != std::string::npos);
    CHECK(table.find("Avg of CC") != std::string::npos);
    CHECK(table.find("505") != std::string::npos);
    CHECK(table.find("16903") != std::string::npos);
    CHECK(table.find("70") != std::string::npos);
    CHECK(table.find("0.139") != std::string::npos);  // 3 decimals
    CHECK(table.find("862.37") != std::string::npos); // 2 decimals
    CHECK(table.find("5.18") != std::string::npos);   // 2 decimals
    // six labeled rows plus the header line
    CHECK(std::count(table.begin(), table.end(), '\n') == 7);
}

TEST_CASE("duplicate dataset names get suffixes and a warning") {
    DatasetSummary a = cm1_style_summary();
    DatasetSummary b = cm1_style_summary();
    std::vector<DatasetSummary> both = {a, b};
    std::string table = render_summary(both);
    CHECK(table.find("CM1 (2)") != std::string::npos);
    CHECK(table.find("warning") != std::string::npos);
}

TEST_CASE("correlation rendering") {
    CorrelationReport report = sample_report();
    SUBCASE("text includes labels, equations, and errors") {
        std::string text = render_correlations(report, OutputFormat::Text);
        CHECK(text.find("CM1") != std::string::npos);
        CHECK(text.find("very strong") != std::string::npos);
        CHECK(text.find("y = 4.322x - 2.802") != std::string::npos);
        CHECK(text.find("ZeroVariance") != std::string::npos);
    }
    SUBCASE("csv and json carry the same numbers to 12 significant digits") {
        std::string csv = render_correlations(report, OutputFormat::Csv);
        std::string json_text = render_correlations(report, OutputFormat::Json);
        nlohmann::json parsed = nlohmann::json::parse(json_text);

        std::istringstream lines(csv);
        std::string header, row;
        std::getline(lines, header);
        std::getline(lines, row);
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream rowstream(row);
        while (std::getline(rowstream, cell, ',')) cells.push_back(cell);
        REQUIRE(cells.size() >= 8);
        double csv_r = std::strtod(cells[4].c_str(), nullptr);
        double csv_slope = std::strtod(cells[6].c_str(), nullptr);
        double json_r = parsed["pairs"][0]["r"].get<double>();
        double json_slope = parsed["pairs"][0]["slope"].get<double>();
        CHECK(std::fabs(csv_r - json_r) <= 1e-12 * std::fabs(json_r));
        CHECK(std::fabs(csv_slope - json_slope) <= 1e-12 * std::fabs(json_slope));
        CHECK(parsed["pairs"][1].contains("error"));
    }
    SUBCASE("rendering is deterministic") {
        CHECK(render_correlations(report, OutputFormat::Text) ==
              render_correlations(report, OutputFormat::Text));
        CHECK(render_correlations(report, OutputFormat::Json) ==
              render_correlations(report, OutputFormat::Json));
    }
}

TEST_CASE("unknown format is rejected") {
    try {
        parse_output_format("yaml");
        FAIL("expected UnknownFormat");
    } catch (const MetricsError& e) {
        CHECK(e.kind() == ErrorKind::UnknownFormat);
    }
}

TEST_CASE("scatter emission") {
    testutil::TempDir tmp;
    SUBCASE("synthetic records round-trip exactly") {
        std::vector<ModuleRecord> recs(3);
        recs[0].cyclomatic = 1.25;
        recs[0].loc = 0.1;  // not exactly representable; must round-trip
        recs[1].cyclomatic = 2.5;
        recs[1].loc = 10.3;
        recs[2].cyclomatic = 19.0;
        recs[2].loc = 1e-7;
        std::string path = (tmp.path / "scatter.csv").string();
        std::size_t written = emit_scatter(recs, MetricField::Cyclomatic,
                                           MetricField::Loc, path);
        CHECK(written == 3);
        std::istringstream in(testutil::read_file(path));
        std::string line;
        std::getline(in, line);
        CHECK(line == "cyclomatic,loc");
        for (const ModuleRecord& r : recs) {
            REQUIRE(std::getline(in, line));
            std::size_t comma = line.find(',');
            double x = std::strtod(line.substr(0, comma).c_str(), nullptr);
            double y = std::strtod(line.substr(comma + 1).c_str(), nullptr);
            CHECK(x == r.cyclomatic);
            CHECK(y == r.loc);
        }
        REQUIRE(std::getline(in, line));
        CHECK(line.find("# trendline: slope=") != std::string::npos);
    }
    SUBCASE("empty record list writes only the header") {
        std::string path = (tmp.path / "empty.csv").string();
        std::size_t written =
            emit_scatter({}, MetricField::Cyclomatic, MetricField::Loc, path);
        CHECK(written == 0);
        std::string content = testutil::read_file(path);
        CHECK(content.find("cyclomatic,loc\n") == 0);
        CHECK(content.find("# trendline: unavailable") != std::string::npos);
    }
    SUBCASE("unwritable destination fails with the path in the message") {
        std::vector<ModuleRecord> recs(2);
        try {
            emit_scatter(recs, MetricField::Loc, MetricField::Cyclomatic,
                         "/nonexistent-dir/out.csv");
            FAIL("expected WriteFailure");
        } catch (const MetricsError& e) {
            CHECK(e.kind() == ErrorKind::WriteFailure);
            CHECK(std::string(e.what()).find("/nonexistent-dir/out.csv") !=
                  std::string::npos);
        }
    }
}

TEST_CASE("metric rows render in all three formats") {
    std::vector<MetricRow> rows(2);
    rows[0].unit = "a.c:f";
    rows[0].cells = {{"ploc", std::int64_t{12}},
                     {"volume", 76.147},
                     {"band", std::string("simple")},
                     {"level", std::monostate{}}};
    rows[1].unit = "a.c:g";
    rows[1].cells = {{"ploc", std::int64_t{3}},
                     {"volume", 8.0},
                     {"band", std::string("simple")},
                     {"level", 0.5}};

    std::string text = render_metric_rows(rows, OutputFormat::Text);
    CHECK(text.find("a.c:f") != std::string::npos);
    CHECK(text.find("76.15") != std::string::npos);  // 2-decimal display
    CHECK(text.find("-") != std::string::npos);      // absent value

    std::string csv = render_metric_rows(rows, OutputFormat::Csv);
    CHECK(csv.find("unit,ploc,volume,band,level") == 0);
    CHECK(csv.find("a.c:g,3,8,simple,0.5") != std::string::npos);

    nlohmann::json parsed =
        nlohmann::json::parse(render_metric_rows(rows, OutputFormat::Json));
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["ploc"] == 12);
    CHECK(parsed[0]["level"].is_null());
    CHECK(parsed[1]["band"] == "simple");
}

TEST_CASE("quarantine report renders as row,reason csv") {
    std::vector<QuarantineEntry> entries = {{3, "cannot parse 'abc'"},
                                            {7, "negative value, bad"}};
    std::string csv = render_quarantine_csv(entries);
    CHECK(csv.find("row,reason\n") == 0);
    CHECK(csv.find("3,cannot parse 'abc'\n") != std::string::npos);
    CHECK(csv.find("7,\"negative value, bad\"\n") != std::string::npos);
}
