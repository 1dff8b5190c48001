#include "flcn/distance.hpp"

#include <cmath>

#include "flcn/kernels.hpp"

namespace flcn {

double euclidean(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t f = 0; f < a.size(); ++f) {
        const double diff = b[f] - a[f];
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

void distances_from(const Matrix& positions, std::span<const double> columns, std::size_t i,
                    std::span<double> out) {
    const auto& k = kernels::active();
    k.squared_distances(positions.row(i).data(), columns.data(), positions.rows(),
                        positions.cols(), out.data());
    for (double& v : out)
        v = std::sqrt(v);
    out[i] = 0.0;
}

DistanceMatrix pairwise_distances(const Matrix& positions) {
    const std::size_t n = positions.rows();
    DistanceMatrix d(n);
    const auto columns = positions.transposed();
    std::vector<double> row(n);
    for (std::size_t i = 0; i < n; ++i) {
        distances_from(positions, columns, i, row);
        for (std::size_t j = 0; j < n; ++j)
            d(i, j) = row[j];
    }
    return d;
}

DistanceMatrix pairwise_distances(const Matrix& positions, const DistanceFunction& metric) {
    const std::size_t n = positions.rows();
    DistanceMatrix d(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = metric(positions.row(i), positions.row(j));
            d(i, j) = v;
            d(j, i) = v;
        }
    return d;
}

}  // namespace flcn
