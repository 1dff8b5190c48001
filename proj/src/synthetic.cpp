#include "flcn/synthetic.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "flcn/distance.hpp"

namespace flcn {

Dataset make_blobs(const Matrix& centers, std::size_t per_blob, double stddev, std::uint64_t seed) {
    const std::size_t blobs = centers.rows();
    const std::size_t m = centers.cols();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, stddev);

    Dataset d;
    d.name = "blobs";
    d.points = Matrix(blobs * per_blob, m);
    std::vector<std::size_t> labels(blobs * per_blob);
    for (std::size_t b = 0; b < blobs; ++b) {
        d.class_names.push_back("blob" + std::to_string(b));
        for (std::size_t p = 0; p < per_blob; ++p) {
            const std::size_t i = b * per_blob + p;
            labels[i] = b;
            for (std::size_t f = 0; f < m; ++f)
                d.points(i, f) = centers(b, f) + noise(rng);
        }
    }
    for (std::size_t f = 0; f < m; ++f)
        d.feature_names.push_back("x" + std::to_string(f));
    d.labels = std::move(labels);
    d.feature_ranges = observed_ranges(d.points);
    return d;
}

Matrix random_centers(std::size_t count, std::size_t dims, double extent, double min_separation,
                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, extent);
    Matrix centers(count, dims);
    std::size_t placed = 0;
    for (std::size_t attempt = 0; placed < count; ++attempt) {
        if (attempt > 100000)
            throw std::runtime_error("random_centers: could not place centers with that separation");
        for (std::size_t f = 0; f < dims; ++f)
            centers(placed, f) = coord(rng);
        bool ok = true;
        for (std::size_t c = 0; c < placed && ok; ++c)
            ok = euclidean(centers.row(c), centers.row(placed)) >= min_separation;
        if (ok)
            ++placed;
    }
    return centers;
}

Matrix uniform_points(std::size_t n, std::size_t dims, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    Matrix out(n, dims);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t f = 0; f < dims; ++f)
            out(i, f) = coord(rng);
    return out;
}

}  // namespace flcn
