// Compiled with -mavx2 (see src/CMakeLists.txt). Only reached after a runtime
// CPU check in dispatch.cpp.
#include "flcn/kernels.hpp"

#include <immintrin.h>

namespace flcn::kernels::detail {
namespace {

// Vectorized across points: each lane accumulates one j over the features in
// the same order as the scalar loop.
void squared_distances_avx2(const double* point, const double* columns, std::size_t n,
                            std::size_t dims, double* out) {
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t f = 0; f < dims; ++f) {
            const __m256d p = _mm256_set1_pd(point[f]);
            const __m256d c = _mm256_loadu_pd(columns + f * n + j);
            const __m256d diff = _mm256_sub_pd(c, p);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
        }
        _mm256_storeu_pd(out + j, acc);
    }
    for (; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t f = 0; f < dims; ++f) {
            const double diff = columns[f * n + j] - point[f];
            acc += diff * diff;
        }
        out[j] = acc;
    }
}

// Vectorized across features.
void accumulate_scaled_difference_avx2(const double* origin, const double* target,
                                       double scale, std::size_t dims, double* acc) {
    const __m256d s = _mm256_set1_pd(scale);
    std::size_t f = 0;
    for (; f + 4 <= dims; f += 4) {
        const __m256d diff =
            _mm256_sub_pd(_mm256_loadu_pd(target + f), _mm256_loadu_pd(origin + f));
        const __m256d sum = _mm256_add_pd(_mm256_loadu_pd(acc + f), _mm256_mul_pd(s, diff));
        _mm256_storeu_pd(acc + f, sum);
    }
    for (; f < dims; ++f)
        acc[f] += scale * (target[f] - origin[f]);
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable table{Backend::Avx2, "avx2", &squared_distances_avx2,
                                   &accumulate_scaled_difference_avx2};
    return table;
}

}  // namespace flcn::kernels::detail
