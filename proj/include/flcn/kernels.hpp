#pragma once

#include <cstddef>
#include <string_view>

// Arithmetic inner loops shared by the distance and field computations.
//
// Every backend performs, lane by lane, exactly the same sequence of IEEE
// operations as the scalar reference (no FMA contraction, no reassociation),
// so all backends produce bit-identical results. Tests enforce this.
namespace flcn::kernels {

enum class Backend { Scalar, Avx2 };

struct KernelTable {
    Backend backend;
    std::string_view name;

    // out[j] = sum_f (columns[f * n + j] - point[f])^2 for j in [0, n).
    // `columns` is a feature-major (dims x n) block.
    void (*squared_distances)(const double* point, const double* columns, std::size_t n,
                              std::size_t dims, double* out);

    // acc[f] += scale * (target[f] - origin[f]) for f in [0, dims).
    void (*accumulate_scaled_difference)(const double* origin, const double* target,
                                         double scale, std::size_t dims, double* acc);
};

const KernelTable& scalar();

// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2();

// Best backend available on this CPU.
const KernelTable& best();

// Active table used by the library. Defaults to best(); overridable for
// testing and benchmarking.
const KernelTable& active();
void set_active(const KernelTable& table);

// Parses "auto", "scalar" or "avx2". Throws std::invalid_argument for unknown
// names and std::runtime_error when the requested backend is unavailable.
const KernelTable& by_name(std::string_view name);

}  // namespace flcn::kernels
