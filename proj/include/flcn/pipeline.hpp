#pragma once

#include <optional>

#include "flcn/clustering.hpp"
#include "flcn/dataset.hpp"
#include "flcn/dynamics.hpp"
#include "flcn/evaluation.hpp"

namespace flcn {

struct ClusterOutcome {
    RunConfig config;          // fully resolved
    Dataset prepared;          // after imputation and optional scaling
    RunResult run;
    ClusterAssignment found;   // read out of the final positions
    ClusterAssignment final;   // after merging, or `found` when no merge applies
    bool merged = false;
    std::optional<AccuracyReport> report;  // when the dataset has labels
};

// Imputes missing cells (seeded by config.seed), rescales when
// config.normalize is set, and returns the dataset the dynamics start from.
Dataset prepare(const Dataset& raw, const RunConfig& config);

// prepare -> iterate -> extract -> merge (when target_clusters is set and
// fewer clusters are wanted) -> score (when labels exist).
ClusterOutcome cluster_dataset(const Dataset& raw, const RunConfig& config);

}  // namespace flcn
