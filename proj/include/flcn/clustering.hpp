#pragma once

#include <cstddef>
#include <vector>

#include "flcn/matrix.hpp"

namespace flcn {

// Partition of point indices. Cluster ids are contiguous and numbered in
// order of each cluster's lowest point index.
struct ClusterAssignment {
    std::vector<std::size_t> label_of;
    std::size_t cluster_count = 0;
    Matrix centroids;  // cluster_count x m, mean of member positions

    std::vector<std::size_t> sizes() const;
};

// Builds an assignment from arbitrary labels: relabels contiguously and
// computes centroids over `positions`.
ClusterAssignment make_assignment(const std::vector<std::size_t>& labels, const Matrix& positions);

// Single-linkage components: i and j share a cluster when a chain of points
// with consecutive gaps <= delta joins them.
ClusterAssignment extract_clusters(const Matrix& positions, double delta);

// Repeatedly folds the smallest cluster (ties: lower id) into the cluster
// with the nearest centroid (ties: lower id) until `target` clusters remain.
// Returns the input unchanged when it already has `target` clusters; throws
// std::invalid_argument when target is 0 or exceeds the current count.
ClusterAssignment merge_to_target(const ClusterAssignment& a, const Matrix& positions,
                                  std::size_t target);

}  // namespace flcn
