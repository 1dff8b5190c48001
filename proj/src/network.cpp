#include "flcn/network.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "flcn/distance.hpp"

namespace flcn {

bool KnnGraph::contains(NodeId i, NodeId j) const {
    const auto& nb = neighbors[i];
    return std::any_of(nb.begin(), nb.end(), [j](const Neighbor& n) { return n.id == j; });
}

KnnGraph build_knn_graph(const Matrix& positions, std::size_t k) {
    const std::size_t n = positions.rows();
    if (n < 2)
        throw std::invalid_argument("build_knn_graph: need at least two points");
    if (k < 1)
        throw std::invalid_argument("build_knn_graph: k must be positive");

    const std::size_t kk = std::min(k, n - 1);
    KnnGraph g;
    g.k = k;
    g.neighbors.resize(n);

    const auto columns = positions.transposed();
    std::vector<double> row(n);
    std::vector<Neighbor> cand;
    cand.reserve(n - 1);
    const auto closer = [](const Neighbor& a, const Neighbor& b) {
        return a.distance < b.distance || (a.distance == b.distance && a.id < b.id);
    };
    for (NodeId i = 0; i < n; ++i) {
        distances_from(positions, columns, i, row);
        cand.clear();
        for (NodeId j = 0; j < n; ++j)
            if (j != i)
                cand.push_back({j, row[j]});
        std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(kk), cand.end(),
                          closer);
        g.neighbors[i].assign(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(kk));
    }
    return g;
}

DegreeVector compute_degrees(const KnnGraph& g) {
    DegreeVector deg(g.size(), 0);
    for (NodeId i = 0; i < g.size(); ++i) {
        deg[i] += g.neighbors[i].size();
        for (const auto& nb : g.neighbors[i])
            ++deg[nb.id];
    }
    return deg;
}

std::vector<ConnectionProbability> connecting_probabilities(NodeId i, const Matrix& positions,
                                                            std::span<const NodeId> candidates,
                                                            const DegreeVector& degrees) {
    std::vector<ConnectionProbability> out;
    out.reserve(candidates.size());
    double best = -std::numeric_limits<double>::infinity();
    for (const NodeId j : candidates) {
        const double d = euclidean(positions.row(i), positions.row(j));
        const double logw = std::log(static_cast<double>(degrees[j])) - d;
        out.push_back({j, logw});
        best = std::max(best, logw);
    }
    if (out.empty())
        return out;
    double total = 0.0;
    for (auto& c : out) {
        c.probability = std::exp(c.probability - best);
        total += c.probability;
    }
    for (auto& c : out)
        c.probability /= total;
    return out;
}

std::vector<NodeId> top_r(std::vector<ConnectionProbability> probs, std::size_t r) {
    const std::size_t take = std::min(r, probs.size());
    std::partial_sort(probs.begin(), probs.begin() + static_cast<std::ptrdiff_t>(take), probs.end(),
                      [](const ConnectionProbability& a, const ConnectionProbability& b) {
                          return a.probability > b.probability ||
                                 (a.probability == b.probability && a.id < b.id);
                      });
    std::vector<NodeId> ids(take);
    for (std::size_t t = 0; t < take; ++t)
        ids[t] = probs[t].id;
    return ids;
}

namespace {

// Marks i and its knn set.
std::vector<char> excluded_mask(NodeId i, const KnnGraph& g) {
    std::vector<char> mask(g.size(), 0);
    mask[i] = 1;
    for (const auto& nb : g.neighbors[i])
        mask[nb.id] = 1;
    return mask;
}

}  // namespace

std::vector<NodeId> flcn1_long_range(NodeId i, const Matrix& positions, const KnnGraph& g,
                                     const DegreeVector& degrees, std::size_t r) {
    if (r == 0)
        return {};
    const auto mask = excluded_mask(i, g);
    std::vector<NodeId> candidates;
    candidates.reserve(g.size());
    for (NodeId j = 0; j < g.size(); ++j)
        if (!mask[j])
            candidates.push_back(j);
    return top_r(connecting_probabilities(i, positions, candidates, degrees), r);
}

std::size_t candidate_set_size(double eta, std::size_t n, std::size_t r) {
    if (n < 2)
        throw std::invalid_argument("candidate_set_size: need at least two points");
    const auto g = static_cast<std::size_t>(std::llround(eta * static_cast<double>(n)));
    const std::size_t lo = std::max<std::size_t>(r, 1);
    return std::clamp(g, std::min(lo, n - 1), n - 1);
}

std::vector<NodeId> flcn2_candidate_set(const DegreeVector& degrees_t0, std::size_t g) {
    if (g < 1)
        throw std::invalid_argument("flcn2_candidate_set: candidate set size must be at least 1");
    if (g > degrees_t0.size())
        throw std::invalid_argument("flcn2_candidate_set: candidate set larger than the network");
    std::vector<NodeId> order(degrees_t0.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return degrees_t0[a] > degrees_t0[b];
    });
    order.resize(g);
    return order;
}

std::vector<NodeId> flcn2_candidate_set(const DegreeVector& degrees_t0, double eta, std::size_t r) {
    if (!(eta > 0.0))
        throw std::invalid_argument("flcn2_candidate_set: eta must be positive");
    return flcn2_candidate_set(degrees_t0, candidate_set_size(eta, degrees_t0.size(), r));
}

std::vector<NodeId> flcn2_long_range(NodeId i, const Matrix& positions, const KnnGraph& g,
                                     std::span<const NodeId> candidates,
                                     const DegreeVector& degrees_t0, std::size_t r) {
    if (r == 0)
        return {};
    const auto mask = excluded_mask(i, g);
    std::vector<NodeId> eligible;
    eligible.reserve(candidates.size());
    for (const NodeId j : candidates)
        if (!mask[j])
            eligible.push_back(j);
    return top_r(connecting_probabilities(i, positions, eligible, degrees_t0), r);
}

ComplexNetwork make_network(KnnGraph g, std::vector<std::vector<NodeId>> long_range,
                            std::optional<DegreeVector> degrees_t0) {
    if (long_range.size() != g.size())
        throw std::invalid_argument("make_network: long-range sets do not match graph size");
    ComplexNetwork net;
    net.degrees = compute_degrees(g);
    net.all_neighbors.resize(g.size());
    for (NodeId i = 0; i < g.size(); ++i) {
        auto& all = net.all_neighbors[i];
        all.reserve(g.neighbors[i].size() + long_range[i].size());
        for (const auto& nb : g.neighbors[i])
            all.push_back(nb.id);
        all.insert(all.end(), long_range[i].begin(), long_range[i].end());
    }
    net.base = std::move(g);
    net.long_range = std::move(long_range);
    net.degrees_t0 = std::move(degrees_t0);
    return net;
}

std::vector<std::vector<NodeId>> undirected_projection(const ComplexNetwork& net) {
    std::vector<std::vector<NodeId>> adj(net.size());
    for (NodeId i = 0; i < net.size(); ++i)
        for (const NodeId j : net.all_neighbors[i]) {
            if (j == i)
                continue;
            adj[i].push_back(j);
            adj[j].push_back(i);
        }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return adj;
}

NetworkStats network_statistics(std::vector<std::vector<NodeId>> adjacency) {
    for (auto& a : adjacency) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    const std::size_t n = adjacency.size();
    NetworkStats stats;
    for (const auto& a : adjacency)
        ++stats.degree_histogram[a.size()];
    if (n == 0)
        return stats;

    // Average shortest path length over reachable ordered pairs (BFS per source).
    std::vector<std::size_t> dist(n);
    std::deque<NodeId> queue;
    double path_sum = 0.0;
    std::size_t reachable_pairs = 0;
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[s] = 0;
        queue.assign(1, s);
        std::size_t seen = 1;
        while (!queue.empty()) {
            const NodeId u = queue.front();
            queue.pop_front();
            for (const NodeId v : adjacency[u]) {
                if (dist[v] != unseen)
                    continue;
                dist[v] = dist[u] + 1;
                path_sum += static_cast<double>(dist[v]);
                ++reachable_pairs;
                ++seen;
                queue.push_back(v);
            }
        }
        if (seen < n)
            stats.disconnected = true;
    }
    stats.average_path_length =
        reachable_pairs ? path_sum / static_cast<double>(reachable_pairs) : 0.0;

    // C_i = 2 E_i / (k_i (k_i - 1)); nodes with fewer than two neighbours score 0.
    double c_sum = 0.0;
    for (NodeId i = 0; i < n; ++i) {
        const auto& nb = adjacency[i];
        const std::size_t ki = nb.size();
        if (ki < 2)
            continue;
        std::size_t links = 0;
        for (std::size_t a = 0; a < ki; ++a)
            for (std::size_t b = a + 1; b < ki; ++b) {
                const auto& adj_a = adjacency[nb[a]];
                if (std::binary_search(adj_a.begin(), adj_a.end(), nb[b]))
                    ++links;
            }
        c_sum += 2.0 * static_cast<double>(links) / static_cast<double>(ki * (ki - 1));
    }
    stats.clustering_coefficient = c_sum / static_cast<double>(n);
    return stats;
}

NetworkStats network_statistics(const ComplexNetwork& net) {
    return network_statistics(undirected_projection(net));
}

NetworkStats network_statistics(const KnnGraph& g) {
    return network_statistics(make_network(g, std::vector<std::vector<NodeId>>(g.size())));
}

}  // namespace flcn
