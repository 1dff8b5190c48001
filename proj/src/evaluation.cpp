#include "flcn/evaluation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace flcn {

std::vector<std::optional<std::size_t>> max_weight_matching(
    const std::vector<std::vector<double>>& weights) {
    const std::size_t rows = weights.size();
    std::size_t cols = 0;
    for (const auto& w : weights)
        cols = std::max(cols, w.size());
    const std::size_t n = std::max(rows, cols);
    if (n == 0)
        return {};

    double top = 0.0;
    for (const auto& w : weights)
        for (const double v : w)
            top = std::max(top, v);
    // Minimisation form; padding cells cost `top` (weight zero).
    auto cost = [&](std::size_t r, std::size_t c) {
        const double w = (r < rows && c < weights[r].size()) ? weights[r][c] : 0.0;
        return top - w;
    };

    // Shortest augmenting path Hungarian algorithm, 1-based potentials.
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> match_col(n + 1, 0), way(n + 1, 0);
    for (std::size_t r = 1; r <= n; ++r) {
        match_col[0] = r;
        std::size_t c0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[c0] = 1;
            const std::size_t r0 = match_col[c0];
            double delta = inf;
            std::size_t c1 = 0;
            for (std::size_t c = 1; c <= n; ++c) {
                if (used[c])
                    continue;
                const double cur = cost(r0 - 1, c - 1) - u[r0] - v[c];
                if (cur < minv[c]) {
                    minv[c] = cur;
                    way[c] = c0;
                }
                if (minv[c] < delta) {
                    delta = minv[c];
                    c1 = c;
                }
            }
            for (std::size_t c = 0; c <= n; ++c) {
                if (used[c]) {
                    u[match_col[c]] += delta;
                    v[c] -= delta;
                } else {
                    minv[c] -= delta;
                }
            }
            c0 = c1;
        } while (match_col[c0] != 0);
        do {
            const std::size_t c1 = way[c0];
            match_col[c0] = match_col[c1];
            c0 = c1;
        } while (c0 != 0);
    }

    std::vector<std::optional<std::size_t>> out(rows);
    for (std::size_t c = 1; c <= n; ++c) {
        const std::size_t r = match_col[c] - 1;
        if (r < rows && c - 1 < cols)
            out[r] = c - 1;
    }
    return out;
}

AccuracyReport score(const std::vector<std::size_t>& predicted, const std::vector<std::size_t>& truth) {
    if (predicted.empty() || truth.empty())
        throw std::invalid_argument("score: empty input");
    if (predicted.size() != truth.size())
        throw std::invalid_argument("score: prediction and truth differ in length");
    const std::size_t clusters = *std::max_element(predicted.begin(), predicted.end()) + 1;
    const std::size_t classes = *std::max_element(truth.begin(), truth.end()) + 1;

    AccuracyReport rep;
    rep.confusion.assign(clusters, std::vector<std::size_t>(classes, 0));
    for (std::size_t i = 0; i < predicted.size(); ++i)
        ++rep.confusion[predicted[i]][truth[i]];

    std::vector<std::vector<double>> weights(clusters, std::vector<double>(classes));
    for (std::size_t c = 0; c < clusters; ++c)
        for (std::size_t t = 0; t < classes; ++t)
            weights[c][t] = static_cast<double>(rep.confusion[c][t]);
    rep.mapping = max_weight_matching(weights);
    for (std::size_t c = 0; c < clusters; ++c)
        if (rep.mapping[c])
            rep.correct += rep.confusion[c][*rep.mapping[c]];
    rep.accuracy = static_cast<double>(rep.correct) / static_cast<double>(predicted.size());
    return rep;
}

AccuracyReport score(const ClusterAssignment& predicted, const std::vector<std::size_t>& truth) {
    return score(predicted.label_of, truth);
}

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t f = 0; f < a.size(); ++f) {
        const double diff = b[f] - a[f];
        acc += diff * diff;
    }
    return acc;
}

struct LloydRun {
    std::vector<std::size_t> labels;
    double within_ss = 0.0;
    std::size_t iterations = 0;
};

LloydRun lloyd(const Matrix& points, std::size_t k, std::mt19937_64& rng, std::size_t max_iters) {
    const std::size_t n = points.rows();
    const std::size_t m = points.cols();

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::shuffle(idx.begin(), idx.end(), rng);
    Matrix centroids(k, m);
    for (std::size_t c = 0; c < k; ++c)
        std::copy_n(points.row(idx[c]).begin(), m, centroids.row(c).begin());

    LloydRun run;
    run.labels.assign(n, 0);
    std::vector<double> dist(n, 0.0);
    for (std::size_t it = 0; it < max_iters; ++it) {
        bool changed = it == 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < k; ++c) {
                const double d = squared_distance(points.row(i), centroids.row(c));
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            changed |= run.labels[i] != best;
            run.labels[i] = best;
            dist[i] = best_d;
        }
        run.iterations = it + 1;
        if (!changed)
            break;

        Matrix sums(k, m);
        std::vector<std::size_t> counts(k, 0);
        for (std::size_t i = 0; i < n; ++i) {
            ++counts[run.labels[i]];
            auto s = sums.row(run.labels[i]);
            const auto p = points.row(i);
            for (std::size_t f = 0; f < m; ++f)
                s[f] += p[f];
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] == 0) {
                // Reseed at the point currently farthest from its centroid.
                const auto far = static_cast<std::size_t>(
                    std::max_element(dist.begin(), dist.end()) - dist.begin());
                std::copy_n(points.row(far).begin(), m, centroids.row(c).begin());
                dist[far] = 0.0;
                continue;
            }
            for (std::size_t f = 0; f < m; ++f)
                centroids(c, f) = sums(c, f) / static_cast<double>(counts[c]);
        }
    }
    run.within_ss = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        run.within_ss += squared_distance(points.row(i), centroids.row(run.labels[i]));
    return run;
}

}  // namespace

KMeansResult kmeans(const Matrix& points, std::size_t k_clusters, std::uint64_t seed,
                    std::size_t restarts, std::size_t max_iters) {
    if (k_clusters < 1 || k_clusters > points.rows())
        throw std::invalid_argument("kmeans: need 1 <= k_clusters <= N");
    restarts = std::max<std::size_t>(1, restarts);
    std::optional<LloydRun> best;
    for (std::size_t r = 0; r < restarts; ++r) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(r)};
        std::mt19937_64 rng(seq);
        LloydRun run = lloyd(points, k_clusters, rng, max_iters);
        if (!best || run.within_ss < best->within_ss)
            best = std::move(run);
    }
    KMeansResult out;
    out.assignment = make_assignment(best->labels, points);
    out.within_ss = best->within_ss;
    out.iterations = best->iterations;
    return out;
}

ClusterAssignment kmeans_baseline(const Dataset& d, std::size_t k_clusters, std::uint64_t seed,
                                  std::size_t restarts) {
    if (d.has_missing())
        throw std::invalid_argument("kmeans_baseline: dataset has missing cells; impute first");
    return kmeans(d.points, k_clusters, seed, restarts).assignment;
}

}  // namespace flcn
