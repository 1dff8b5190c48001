#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "flcn/clustering.hpp"
#include "flcn/dynamics.hpp"
#include "flcn/evaluation.hpp"
#include "flcn/network.hpp"
#include "flcn/pipeline.hpp"

// Text serialisation of results. Tables are comma separated with a header
// row; records are JSON objects. Numbers use the shortest round-trip form so
// that identical runs give identical bytes.
namespace flcn::report {

using nlohmann::ordered_json;

std::string format_number(double v);

ordered_json to_json(const RunConfig& config);
ordered_json to_json(const NetworkStats& stats);   // keys: apl, cc, degree_hist, disconnected
ordered_json to_json(const AccuracyReport& report); // keys: accuracy, correct, mapping, confusion
ordered_json metrics_record(const Dataset& dataset, const ClusterOutcome& outcome);

// point_index,cluster_id
void write_assignment(std::ostream& out, const ClusterAssignment& a);

// iteration,total (iterations numbered from 1)
void write_totals(std::ostream& out, const RunTrace& trace);

// iteration,point_index,x0,x1,... one row per agent per recorded iteration
void write_positions(std::ostream& out, const RunTrace& trace);

// Writes totals.csv and, when snapshots exist, positions.csv into `dir`.
// Throws std::logic_error when the run was not traced and
// std::runtime_error when a file cannot be written.
void emit_trace(const RunTrace& trace, const std::filesystem::path& dir);

// Opens `path` for writing or throws std::runtime_error.
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace flcn::report
