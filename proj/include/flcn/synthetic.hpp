#pragma once

#include <cstddef>
#include <cstdint>

#include "flcn/dataset.hpp"

namespace flcn {

// Isotropic Gaussian blobs, `per_blob` points around each row of `centers`,
// labelled by blob. Points are emitted blob by blob.
Dataset make_blobs(const Matrix& centers, std::size_t per_blob, double stddev, std::uint64_t seed);

// `count` centers drawn uniformly from [0, extent]^dims, rejecting any draw
// closer than `min_separation` to an earlier center.
Matrix random_centers(std::size_t count, std::size_t dims, double extent, double min_separation,
                      std::uint64_t seed);

// Unlabelled points uniform on [0, 1]^dims.
Matrix uniform_points(std::size_t n, std::size_t dims, std::uint64_t seed);

}  // namespace flcn
