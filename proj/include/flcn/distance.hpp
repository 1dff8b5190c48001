#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "flcn/matrix.hpp"

namespace flcn {

// Any function of two equally sized vectors returning a non-negative value
// that shrinks as the vectors become more alike.
using DistanceFunction = std::function<double(std::span<const double>, std::span<const double>)>;

// 2-norm. Accumulates squares in feature order so that it agrees bit for bit
// with the vectorized kernels.
double euclidean(std::span<const double> a, std::span<const double> b);

// Symmetric N x N matrix of distances with a zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }

private:
    std::size_t n_ = 0;
    std::vector<double> entries_;
};

// Euclidean distances through the active kernel backend.
DistanceMatrix pairwise_distances(const Matrix& positions);

// Generic route for a user-supplied metric.
DistanceMatrix pairwise_distances(const Matrix& positions, const DistanceFunction& metric);

// Distances from point i to every point, written into `out` (size N).
// `columns` is positions.transposed().
void distances_from(const Matrix& positions, std::span<const double> columns, std::size_t i,
                    std::span<double> out);

}  // namespace flcn
