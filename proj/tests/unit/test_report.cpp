#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "flcn/pipeline.hpp"
#include "flcn/report.hpp"
#include "flcn/synthetic.hpp"

using namespace flcn;
namespace fs = std::filesystem;

namespace {

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("numbers round-trip in shortest form") {
    CHECK(report::format_number(0.5) == "0.5");
    CHECK(report::format_number(3.0) == "3");
    CHECK(report::format_number(0.1) == "0.1");
    CHECK(std::stod(report::format_number(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("assignment and totals tables") {
    const auto a = make_assignment({0, 1, 0}, Matrix(3, 1, {0, 5, 0.1}));
    std::ostringstream out;
    report::write_assignment(out, a);
    CHECK(out.str() == "point_index,cluster_id\n0,0\n1,1\n2,0\n");

    RunTrace t;
    t.totals_per_iteration = {2.5, 0.25};
    std::ostringstream tot;
    report::write_totals(tot, t);
    CHECK(tot.str() == "iteration,total\n1,2.5\n2,0.25\n");
}

TEST_CASE("positions table has one row per agent per iteration") {
    const Matrix x = uniform_points(10, 2, 1);
    const RunResult r = iterate(x, {.k = 3, .epsilon = 1e-300, .max_iters = 3, .trace = true});
    REQUIRE(r.trace.iterations == 3);
    std::ostringstream out;
    report::write_positions(out, r.trace);
    CHECK(count_lines(out.str()) == 31);
    CHECK(out.str().rfind("iteration,point_index,x0,x1\n", 0) == 0);
}

TEST_CASE("emit_trace") {
    const fs::path dir = fs::temp_directory_path() / "flcn_report_test";
    fs::remove_all(dir);
    fs::create_directories(dir);

    RunTrace untraced;
    CHECK_THROWS_AS(report::emit_trace(untraced, dir), std::logic_error);

    const RunResult r = iterate(uniform_points(20, 2, 3), {.k = 4, .trace = true});
    report::emit_trace(r.trace, dir);
    std::ifstream in(dir / "totals.csv");
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(count_lines(buf.str()) == r.trace.iterations + 1);
    CHECK(fs::exists(dir / "positions.csv"));
    if (r.trace.converged)
        CHECK(r.trace.iterations < 100);

    CHECK_THROWS_AS(report::emit_trace(r.trace, dir / "missing" / "deeper"), std::runtime_error);
    fs::remove_all(dir);
}

TEST_CASE("metrics record") {
    const Dataset d = make_blobs(Matrix(2, 2, {0, 0, 10, 0}), 20, 0.3, 4);
    RunConfig c;
    c.k = 5;
    c.normalize = false;
    c.target_clusters = 2;
    const ClusterOutcome o = cluster_dataset(d, c);
    const auto j = report::metrics_record(d, o);
    CHECK(j["dataset"]["points"] == 40);
    CHECK(j["config"]["k"] == 5);
    CHECK(j["config"]["r"] == 2);
    CHECK(j.contains("evaluation"));
    CHECK(j["evaluation"]["accuracy"].get<double>() == doctest::Approx(1.0));
    CHECK(j["clusters_final"] == 2);
    CHECK(j["epsilon_applied"].get<double>() > 0.0);

    Dataset unlabelled = d;
    unlabelled.labels.reset();
    unlabelled.class_names.clear();
    const auto ju = report::metrics_record(unlabelled, cluster_dataset(unlabelled, c));
    CHECK_FALSE(ju.contains("evaluation"));
}

TEST_CASE("network statistics keys") {
    NetworkStats s;
    s.degree_histogram = {{2, 3}};
    s.average_path_length = 1.0;
    const auto j = report::to_json(s);
    CHECK(j["apl"] == 1.0);
    CHECK(j["degree_hist"]["2"] == 3);
    CHECK(j.contains("cc"));
    CHECK(j.contains("disconnected"));
}
