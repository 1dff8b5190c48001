#include "flcn/report.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace flcn::report {

std::string format_number(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc())
        throw std::runtime_error("format_number: conversion failed");
    return std::string(buf.data(), ptr);
}

ordered_json to_json(const RunConfig& c) {
    ordered_json j;
    j["variant"] = to_string(c.variant);
    j["k"] = c.k;
    j["r"] = c.r ? ordered_json(*c.r) : ordered_json(nullptr);
    j["eta"] = c.eta;
    j["theta"] = c.theta;
    j["epsilon"] = c.epsilon ? ordered_json(*c.epsilon) : ordered_json(nullptr);
    j["epsilon_ratio"] = c.epsilon_ratio;
    j["max_iters"] = c.max_iters;
    j["seed"] = c.seed;
    j["normalize"] = c.normalize;
    j["target_clusters"] = c.target_clusters ? ordered_json(*c.target_clusters) : ordered_json(nullptr);
    j["delta"] = c.delta ? ordered_json(*c.delta) : ordered_json(nullptr);
    j["trace"] = c.trace;
    return j;
}

ordered_json to_json(const NetworkStats& s) {
    ordered_json hist = ordered_json::object();
    for (const auto& [degree, count] : s.degree_histogram)
        hist[std::to_string(degree)] = count;
    ordered_json j;
    j["apl"] = s.average_path_length;
    j["cc"] = s.clustering_coefficient;
    j["degree_hist"] = std::move(hist);
    j["disconnected"] = s.disconnected;
    return j;
}

ordered_json to_json(const AccuracyReport& r) {
    ordered_json mapping = ordered_json::array();
    for (const auto& m : r.mapping)
        mapping.push_back(m ? ordered_json(*m) : ordered_json(nullptr));
    ordered_json j;
    j["accuracy"] = r.accuracy;
    j["correct"] = r.correct;
    j["mapping"] = std::move(mapping);
    j["confusion"] = r.confusion;
    return j;
}

ordered_json metrics_record(const Dataset& dataset, const ClusterOutcome& o) {
    ordered_json j;
    j["dataset"] = {{"name", dataset.name},
                    {"points", dataset.size()},
                    {"features", dataset.dims()},
                    {"classes", dataset.labels ? ordered_json(dataset.class_count()) : ordered_json(nullptr)},
                    {"imputed_cells", dataset.missing.size()}};
    j["config"] = to_json(o.config);
    j["iterations"] = o.run.trace.iterations;
    j["converged"] = o.run.trace.converged;
    j["epsilon_applied"] = o.run.trace.epsilon;
    j["final_total"] = o.run.trace.totals_per_iteration.empty()
                           ? 0.0
                           : o.run.trace.totals_per_iteration.back();
    j["clusters_found"] = o.found.cluster_count;
    j["clusters_final"] = o.final.cluster_count;
    j["merged"] = o.merged;
    if (o.report) {
        ordered_json rep = to_json(*o.report);
        ordered_json names = ordered_json::array();
        for (const auto& n : o.prepared.class_names)
            names.push_back(n);
        rep["class_names"] = std::move(names);
        j["evaluation"] = std::move(rep);
    }
    return j;
}

void write_assignment(std::ostream& out, const ClusterAssignment& a) {
    out << "point_index,cluster_id\n";
    for (std::size_t i = 0; i < a.label_of.size(); ++i)
        out << i << ',' << a.label_of[i] << '\n';
}

void write_totals(std::ostream& out, const RunTrace& trace) {
    out << "iteration,total\n";
    for (std::size_t t = 0; t < trace.totals_per_iteration.size(); ++t)
        out << (t + 1) << ',' << format_number(trace.totals_per_iteration[t]) << '\n';
}

void write_positions(std::ostream& out, const RunTrace& trace) {
    const std::size_t dims = trace.snapshots.empty() ? 0 : trace.snapshots.front().cols();
    out << "iteration,point_index";
    for (std::size_t f = 0; f < dims; ++f)
        out << ",x" << f;
    out << '\n';
    for (std::size_t t = 0; t < trace.snapshots.size(); ++t) {
        const Matrix& snap = trace.snapshots[t];
        for (std::size_t i = 0; i < snap.rows(); ++i) {
            out << (t + 1) << ',' << i;
            for (const double v : snap.row(i))
                out << ',' << format_number(v);
            out << '\n';
        }
    }
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    return out;
}

void emit_trace(const RunTrace& trace, const std::filesystem::path& dir) {
    if (!trace.tracing_enabled)
        throw std::logic_error("no trace recorded: rerun with tracing enabled (--trace)");
    {
        auto out = open_output(dir / "totals.csv");
        write_totals(out, trace);
        if (!out)
            throw std::runtime_error("failed writing " + (dir / "totals.csv").string());
    }
    if (!trace.snapshots.empty()) {
        auto out = open_output(dir / "positions.csv");
        write_positions(out, trace);
        if (!out)
            throw std::runtime_error("failed writing " + (dir / "positions.csv").string());
    }
}

}  // namespace flcn::report
