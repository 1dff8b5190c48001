// Command-line front end: cluster a dataset, sweep parameters, print
// network diagnostics, run the k-means baseline.
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flcn/dataset.hpp"
#include "flcn/dynamics.hpp"
#include "flcn/evaluation.hpp"
#include "flcn/kernels.hpp"
#include "flcn/network.hpp"
#include "flcn/parallel.hpp"
#include "flcn/pipeline.hpp"
#include "flcn/report.hpp"

namespace fs = std::filesystem;
using namespace flcn;

namespace {

constexpr int kExitConverged = 0;
constexpr int kExitError = 1;
constexpr int kExitMaxIters = 2;

struct DataArgs {
    std::string path;
    std::string label_col;
    std::string missing_token = "?";
    char delimiter = ',';
};

struct RunArgs {
    std::string variant = "flcn2";
    std::size_t k = 10;
    std::optional<std::size_t> r;
    double eta = 0.1;
    double theta = 0.1;
    std::optional<double> epsilon;
    double epsilon_ratio = 0.1;
    std::size_t max_iters = 100;
    std::uint64_t seed = 0;
    bool no_normalize = false;
    std::optional<std::size_t> target;
    std::optional<double> delta;
    bool trace = false;
    std::size_t threads = 1;
};

void add_data_options(CLI::App& app, DataArgs& a) {
    app.add_option("--data", a.path, "Delimited text file, one point per row")->required();
    app.add_option("--label-col", a.label_col,
                   "Class label column: 'last', a zero-based index, or a header name");
    app.add_option("--missing-token", a.missing_token, "Cell text marking a missing value")
        ->capture_default_str();
    app.add_option("--delimiter", a.delimiter, "Field separator")->capture_default_str();
}

void add_run_options(CLI::App& app, RunArgs& a, bool with_k) {
    app.add_option("--variant", a.variant, "flcn1 or flcn2")->capture_default_str();
    if (with_k)
        app.add_option("--k", a.k, "Nearest neighbours per agent")->capture_default_str();
    app.add_option("--r", a.r, "Long-range links per agent (default max(1, k/2))");
    app.add_option("--eta", a.eta, "Candidate set fraction for flcn2, in (0, 0.5]")
        ->capture_default_str();
    app.add_option("--theta", a.theta, "Separating threshold")->capture_default_str();
    app.add_option("--epsilon", a.epsilon, "Absolute convergence threshold on summed step length");
    app.add_option("--epsilon-ratio", a.epsilon_ratio,
                   "Without --epsilon, stop once the summed step length falls below this "
                   "fraction of the first iteration's")
        ->capture_default_str();
    app.add_option("--max-iters", a.max_iters, "Iteration limit")->capture_default_str();
    app.add_option("--seed", a.seed, "Seed for imputation")->capture_default_str();
    app.add_flag("--no-normalize", a.no_normalize, "Use features as given instead of min-max scaling");
    app.add_option("--target-clusters", a.target, "Merge clusters down to this count");
    app.add_option("--delta", a.delta, "Linkage threshold for reading out clusters (default 2*theta)");
    app.add_option("--threads", a.threads, "Worker threads per run")->capture_default_str();
}

Dataset load(const DataArgs& a) {
    CsvOptions opt;
    opt.missing_token = a.missing_token;
    opt.delimiter = a.delimiter;
    if (!a.label_col.empty())
        opt.label_column = parse_column_selector(a.label_col);
    return load_csv(a.path, opt);
}

RunConfig to_config(const RunArgs& a) {
    RunConfig c;
    c.variant = parse_variant(a.variant);
    c.k = a.k;
    c.r = a.r;
    c.eta = a.eta;
    c.theta = a.theta;
    c.epsilon = a.epsilon;
    c.epsilon_ratio = a.epsilon_ratio;
    c.max_iters = a.max_iters;
    c.seed = a.seed;
    c.normalize = !a.no_normalize;
    c.target_clusters = a.target;
    c.delta = a.delta;
    c.trace = a.trace;
    c.threads = a.threads;
    return c;
}

fs::path ensure_dir(const std::string& dir) {
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec || !fs::is_directory(p))
        throw std::runtime_error("cannot create output directory " + dir);
    return p;
}

void write_text(const fs::path& path, const std::string& text) {
    auto out = report::open_output(path);
    out << text;
    if (!out)
        throw std::runtime_error("failed writing " + path.string());
}

// "5:30" (inclusive), "5:30:5", or "5,8,13".
std::vector<std::size_t> parse_int_range(const std::string& text) {
    std::vector<std::size_t> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::size_t> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ':'))
            parts.push_back(std::stoul(item));
        if (parts.size() < 2 || parts.size() > 3 || (parts.size() == 3 && parts[2] == 0))
            throw std::invalid_argument("bad range '" + text + "'");
        const std::size_t step = parts.size() == 3 ? parts[2] : 1;
        for (std::size_t v = parts[0]; v <= parts[1]; v += step)
            out.push_back(v);
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                out.push_back(std::stoul(item));
    }
    if (out.empty())
        throw std::invalid_argument("empty range '" + text + "'");
    return out;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(std::stod(item));
    if (out.empty())
        throw std::invalid_argument("empty list '" + text + "'");
    return out;
}

int cmd_cluster(const DataArgs& data, const RunArgs& run, const std::string& out_dir) {
    const Dataset raw = load(data);
    const ClusterOutcome o = cluster_dataset(raw, to_config(run));
    const fs::path dir = ensure_dir(out_dir);

    {
        auto out = report::open_output(dir / "assignment.csv");
        report::write_assignment(out, o.final);
    }
    write_text(dir / "metrics.json", report::metrics_record(raw, o).dump(2) + "\n");
    if (run.trace)
        report::emit_trace(o.run.trace, dir);

    std::cout << raw.name << ": " << o.run.trace.iterations << " iterations, "
              << (o.run.trace.converged ? "converged" : "iteration limit reached") << ", "
              << o.found.cluster_count << " clusters found, " << o.final.cluster_count << " kept";
    if (o.report)
        std::cout << ", accuracy " << report::format_number(o.report->accuracy);
    std::cout << '\n';
    return o.run.trace.converged ? kExitConverged : kExitMaxIters;
}

int cmd_sweep(const DataArgs& data, const RunArgs& run, const std::string& k_range,
              const std::string& eta_list, const std::string& out_path, std::size_t jobs) {
    const auto ks = parse_int_range(k_range);
    const auto etas = eta_list.empty() ? std::vector<double>{run.eta} : parse_real_list(eta_list);
    const Dataset raw = load(data);

    struct Row {
        std::size_t k;
        double eta;
        std::string status = "ok";
        std::optional<ClusterOutcome> outcome;
    };
    std::vector<Row> rows;
    for (const double eta : etas)
        for (const std::size_t k : ks)
            rows.push_back({k, eta, "ok", std::nullopt});

    detail::parallel_for(rows.size(), jobs, [&](std::size_t idx) {
        Row& row = rows[idx];
        RunArgs a = run;
        a.k = row.k;
        a.eta = row.eta;
        try {
            row.outcome = cluster_dataset(raw, to_config(a));
        } catch (const std::exception& e) {
            row.status = std::string("failed: ") + e.what();
            for (char& ch : row.status)
                if (ch == ',' || ch == '\n')
                    ch = ';';
        }
    });

    std::ostringstream table;
    table << "variant,k,eta,accuracy,iterations,converged,clusters_found,clusters_final,status\n";
    for (const Row& row : rows) {
        table << run.variant << ',' << row.k << ',' << report::format_number(row.eta) << ',';
        if (row.outcome) {
            const auto& o = *row.outcome;
            table << (o.report ? report::format_number(o.report->accuracy) : "") << ','
                  << o.run.trace.iterations << ',' << (o.run.trace.converged ? 1 : 0) << ','
                  << o.found.cluster_count << ',' << o.final.cluster_count << ',';
        } else {
            table << ",,,,,";
        }
        table << row.status << '\n';
    }
    if (out_path.empty() || out_path == "-")
        std::cout << table.str();
    else
        write_text(out_path, table.str());
    return kExitConverged;
}

int cmd_stats(const DataArgs& data, const RunArgs& run, const std::string& out_path) {
    const Dataset raw = load(data);
    const RunConfig c = resolve(to_config(run), raw.size());
    const Dataset d = prepare(raw, c);
    Simulation sim(d.points, c);
    const ComplexNetwork net = sim.build_network();
    report::ordered_json j;
    j["knn"] = report::to_json(network_statistics(net.base));
    j["with_long_range"] = report::to_json(network_statistics(net));
    j["config"] = report::to_json(c);
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty() || out_path == "-")
        std::cout << text;
    else
        write_text(out_path, text);
    return kExitConverged;
}

int cmd_baseline(const DataArgs& data, std::size_t clusters, std::uint64_t seed,
                 std::size_t restarts, bool normalize) {
    const Dataset raw = load(data);
    RunConfig c;
    c.seed = seed;
    c.normalize = normalize;
    const Dataset d = prepare(raw, c);
    const ClusterAssignment a = kmeans_baseline(d, clusters, seed, restarts);
    report::ordered_json j;
    j["dataset"] = d.name;
    j["clusters"] = a.cluster_count;
    if (d.labels)
        j["evaluation"] = report::to_json(score(a, *d.labels));
    std::cout << j.dump(2) << '\n';
    return kExitConverged;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flocking-on-complex-network clustering"};
    app.require_subcommand(1);
    std::string kernel = "auto";
    app.add_option("--kernel", kernel, "Arithmetic backend: auto, scalar or avx2")
        ->capture_default_str();

    DataArgs cdata, sdata, tdata, bdata;
    RunArgs crun, srun, trun;
    std::string out_dir = "out";
    auto* cluster = app.add_subcommand("cluster", "Cluster one dataset");
    add_data_options(*cluster, cdata);
    add_run_options(*cluster, crun, true);
    cluster->add_flag("--trace", crun.trace, "Record per-iteration totals and positions");
    cluster->add_option("--out-dir", out_dir, "Directory for output files")->capture_default_str();

    std::string k_range = "5:30", eta_list, sweep_out;
    std::size_t jobs = 1;
    auto* sweep = app.add_subcommand("sweep", "Run a grid over k and eta");
    add_data_options(*sweep, sdata);
    add_run_options(*sweep, srun, false);
    sweep->add_option("--k-range", k_range, "k values: a:b, a:b:step, or a comma list")
        ->capture_default_str();
    sweep->add_option("--eta-values", eta_list, "Comma-separated eta values");
    sweep->add_option("--out", sweep_out, "Sweep table path (stdout when omitted)");
    sweep->add_option("--jobs", jobs, "Rows evaluated concurrently")->capture_default_str();

    std::string stats_out;
    auto* stats = app.add_subcommand("stats", "Network statistics at the starting positions");
    add_data_options(*stats, tdata);
    add_run_options(*stats, trun, true);
    stats->add_option("--out", stats_out, "Record path (stdout when omitted)");

    std::size_t clusters = 2, restarts = 20;
    std::uint64_t bseed = 0;
    bool bno_norm = false;
    auto* baseline = app.add_subcommand("baseline", "k-means reference clustering");
    add_data_options(*baseline, bdata);
    baseline->add_option("--clusters", clusters, "Number of clusters")->required();
    baseline->add_option("--restarts", restarts, "Random restarts")->capture_default_str();
    baseline->add_option("--seed", bseed, "Seed")->capture_default_str();
    baseline->add_flag("--no-normalize", bno_norm, "Use features as given");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    }

    try {
        kernels::set_active(kernels::by_name(kernel));
        if (*cluster)
            return cmd_cluster(cdata, crun, out_dir);
        if (*sweep)
            return cmd_sweep(sdata, srun, k_range, eta_list, sweep_out, jobs);
        if (*stats)
            return cmd_stats(tdata, trun, stats_out);
        if (*baseline)
            return cmd_baseline(bdata, clusters, bseed, restarts, !bno_norm);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
