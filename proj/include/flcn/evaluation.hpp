#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "flcn/clustering.hpp"
#include "flcn/dataset.hpp"

namespace flcn {

struct AccuracyReport {
    std::vector<std::vector<std::size_t>> confusion;  // [cluster][class]
    std::vector<std::optional<std::size_t>> mapping;  // cluster -> class, injective
    std::size_t correct = 0;
    double accuracy = 0.0;
};

// Maximum-weight one-to-one assignment on a rows x cols weight matrix
// (padded to square internally). Returns, per row, the matched column or
// nullopt when the row is matched to padding.
std::vector<std::optional<std::size_t>> max_weight_matching(
    const std::vector<std::vector<double>>& weights);

// Fraction of points whose cluster maps to their true class under the best
// one-to-one cluster-to-class mapping. Throws std::invalid_argument on empty
// or mismatched input.
AccuracyReport score(const std::vector<std::size_t>& predicted, const std::vector<std::size_t>& truth);
AccuracyReport score(const ClusterAssignment& predicted, const std::vector<std::size_t>& truth);

struct KMeansResult {
    ClusterAssignment assignment;
    double within_ss = 0.0;
    std::size_t iterations = 0;  // of the winning restart
};

// Lloyd iterations from distinct random points, best of `restarts` by
// within-cluster sum of squares. Empty clusters are reseeded at the point
// farthest from its centroid.
KMeansResult kmeans(const Matrix& points, std::size_t k_clusters, std::uint64_t seed,
                    std::size_t restarts = 20, std::size_t max_iters = 300);

ClusterAssignment kmeans_baseline(const Dataset& d, std::size_t k_clusters, std::uint64_t seed,
                                  std::size_t restarts = 20);

}  // namespace flcn
