#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "panelopt/analysis.hpp"
#include "panelopt/bench_sweep.hpp"
#include "panelopt/csv_export.hpp"
#include "panelopt/svg.hpp"

using namespace panelopt;

namespace {

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("analysis tables") {
    const auto af = naca4("2412", 40);
    const FlowCondition flow{};
    const auto a = analyze(af, flow, 1e6);

    std::ostringstream cp, bl, summary;
    write_cp_csv(cp, af, a);
    write_boundary_layer_csv(bl, a.viscous.upper_edge, a.viscous.upper);
    write_summary_csv(summary, af, flow, 1e6, a);
    CHECK(first_line(cp.str()) == kCpCsvHeader);
    CHECK(line_count(cp.str()) == 41);
    CHECK(first_line(bl.str()) == kBoundaryLayerCsvHeader);
    CHECK(line_count(bl.str()) == a.viscous.upper_edge.s.size() + 1);
    CHECK(first_line(summary.str()) == kSummaryCsvHeader);
    CHECK(line_count(summary.str()) == 2);
    CHECK(summary.str().find("NACA 2412,0,1000000,40,") != std::string::npos);
}

TEST_CASE("bench csv") {
    BenchRow row;
    row.mode = "pipelined";
    row.slices = 5;
    row.split = 1.0;
    row.wall = 1.5;
    row.assembly = 1.0;
    row.solve = 0.75;
    row.overhead = 0.5;
    row.speedup = 2.0;
    std::ostringstream out;
    write_bench_csv(out, {row});
    CHECK(out.str() == std::string(kBenchCsvHeader) + "\npipelined,5,1.00,1.500000,1.000000,0.750000,0.500000,2.0000\n");
    CHECK(format_bench_table({row}).find("pipelined") != std::string::npos);
}

TEST_CASE("svg") {
    const auto svg = airfoil_svg(naca4("0012", 20));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(airfoil_svg(naca4("0012", 20), false).find("<circle") == std::string::npos);
}
