#include "flcn/clustering.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "flcn/distance.hpp"

namespace flcn {
namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        // Keep the lower index as root.
        if (b < a)
            std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<std::size_t> ClusterAssignment::sizes() const {
    std::vector<std::size_t> out(cluster_count, 0);
    for (const auto c : label_of)
        ++out[c];
    return out;
}

ClusterAssignment make_assignment(const std::vector<std::size_t>& labels, const Matrix& positions) {
    if (labels.size() != positions.rows())
        throw std::invalid_argument("make_assignment: label count does not match point count");
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> remap;
    ClusterAssignment a;
    a.label_of.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] >= remap.size())
            remap.resize(labels[i] + 1, unset);
        if (remap[labels[i]] == unset)
            remap[labels[i]] = a.cluster_count++;
        a.label_of[i] = remap[labels[i]];
    }
    a.centroids = Matrix(a.cluster_count, positions.cols());
    const auto sizes = a.sizes();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto c = a.centroids.row(a.label_of[i]);
        const auto p = positions.row(i);
        for (std::size_t f = 0; f < c.size(); ++f)
            c[f] += p[f];
    }
    for (std::size_t c = 0; c < a.cluster_count; ++c)
        for (auto& v : a.centroids.row(c))
            v /= static_cast<double>(sizes[c]);
    return a;
}

ClusterAssignment extract_clusters(const Matrix& positions, double delta) {
    if (!(delta > 0.0))
        throw std::invalid_argument("extract_clusters: delta must be positive");
    const std::size_t n = positions.rows();
    DisjointSets sets(n);
    const auto dist = pairwise_distances(positions);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (dist(i, j) <= delta)
                sets.unite(i, j);
    std::vector<std::size_t> roots(n);
    for (std::size_t i = 0; i < n; ++i)
        roots[i] = sets.find(i);
    return make_assignment(roots, positions);
}

ClusterAssignment merge_to_target(const ClusterAssignment& a, const Matrix& positions,
                                  std::size_t target) {
    if (target < 1)
        throw std::invalid_argument("merge_to_target: target must be at least 1");
    if (target > a.cluster_count)
        throw std::invalid_argument("merge_to_target: cannot split " +
                                    std::to_string(a.cluster_count) + " clusters into " +
                                    std::to_string(target));
    ClusterAssignment cur = a;
    while (cur.cluster_count > target) {
        const auto sizes = cur.sizes();
        std::size_t smallest = 0;
        for (std::size_t c = 1; c < sizes.size(); ++c)
            if (sizes[c] < sizes[smallest])
                smallest = c;
        std::size_t nearest = smallest;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < cur.cluster_count; ++c) {
            if (c == smallest)
                continue;
            const double d = euclidean(cur.centroids.row(smallest), cur.centroids.row(c));
            if (d < best) {
                best = d;
                nearest = c;
            }
        }
        auto labels = cur.label_of;
        for (auto& l : labels)
            if (l == smallest)
                l = nearest;
        cur = make_assignment(labels, positions);
    }
    return cur;
}

}  // namespace flcn
