#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "flcn/matrix.hpp"

namespace flcn {

using NodeId = std::size_t;
using DegreeVector = std::vector<std::size_t>;

struct Neighbor {
    NodeId id;
    double distance;
};

// Directed knn graph. neighbors[i] holds min(k, N-1) nodes sorted by
// ascending distance, ties by lower id.
struct KnnGraph {
    std::size_t k = 0;
    std::vector<std::vector<Neighbor>> neighbors;

    std::size_t size() const { return neighbors.size(); }
    bool contains(NodeId i, NodeId j) const;
};

// knn graph plus the long-range links chosen for each node.
struct ComplexNetwork {
    KnnGraph base;
    std::vector<std::vector<NodeId>> long_range;     // psi_i
    std::vector<std::vector<NodeId>> all_neighbors;  // knn first, then long-range
    DegreeVector degrees;                            // at the current iteration
    std::optional<DegreeVector> degrees_t0;          // frozen, candidate-set variant only

    std::size_t size() const { return base.size(); }
};

struct NetworkStats {
    std::map<std::size_t, std::size_t> degree_histogram;  // undirected degree -> count
    double average_path_length = 0.0;
    double clustering_coefficient = 0.0;
    bool disconnected = false;
};

// A candidate node with its connecting probability.
struct ConnectionProbability {
    NodeId id;
    double probability;
};

// Exact knn by full scan. Throws std::invalid_argument when N < 2 or k < 1.
KnnGraph build_knn_graph(const Matrix& positions, std::size_t k);

// Degree of j = out-degree + in-degree in the knn graph.
DegreeVector compute_degrees(const KnnGraph& g);

// Connecting probabilities Deg_j * exp(-d(i, j)) normalized over `candidates`.
// Evaluated in the log domain so that far candidates do not underflow the
// normalizer. `candidates` must not contain i.
std::vector<ConnectionProbability> connecting_probabilities(NodeId i, const Matrix& positions,
                                                            std::span<const NodeId> candidates,
                                                            const DegreeVector& degrees);

// Long-range set drawn from every node outside the knn set of i: the r
// highest connecting probabilities, ties by lower id. Clamped to the number
// of available candidates.
std::vector<NodeId> flcn1_long_range(NodeId i, const Matrix& positions, const KnnGraph& g,
                                     const DegreeVector& degrees, std::size_t r);

// Size of the candidate set for a fraction eta: round(eta * N) clamped to
// [max(r, 1), N - 1].
std::size_t candidate_set_size(double eta, std::size_t n, std::size_t r);

// The g nodes with the largest initial degrees, ties by lower id, returned
// in rank order. Throws std::invalid_argument when g < 1 or g > N.
std::vector<NodeId> flcn2_candidate_set(const DegreeVector& degrees_t0, std::size_t g);
std::vector<NodeId> flcn2_candidate_set(const DegreeVector& degrees_t0, double eta,
                                        std::size_t r);

// Long-range set restricted to V minus (knn of i plus i), ranked by
// probabilities computed with the frozen initial degrees.
std::vector<NodeId> flcn2_long_range(NodeId i, const Matrix& positions, const KnnGraph& g,
                                     std::span<const NodeId> candidates,
                                     const DegreeVector& degrees_t0, std::size_t r);

// Top-r of a probability list, ties by lower id.
std::vector<NodeId> top_r(std::vector<ConnectionProbability> probs, std::size_t r);

// Assembles a network from a knn graph and per-node long-range sets.
ComplexNetwork make_network(KnnGraph g, std::vector<std::vector<NodeId>> long_range,
                            std::optional<DegreeVector> degrees_t0 = std::nullopt);

// Small-world statistics of the undirected projection of all edges.
NetworkStats network_statistics(const ComplexNetwork& net);
NetworkStats network_statistics(const KnnGraph& g);

// Same statistics for an arbitrary undirected adjacency list (symmetric,
// no self loops). Duplicates are ignored.
NetworkStats network_statistics(std::vector<std::vector<NodeId>> adjacency);

// Undirected projection: edge {i, j} when either direction exists.
std::vector<std::vector<NodeId>> undirected_projection(const ComplexNetwork& net);

}  // namespace flcn
