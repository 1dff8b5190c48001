#include "flcn/kernels.hpp"

namespace flcn::kernels {
namespace {

void squared_distances_scalar(const double* point, const double* columns, std::size_t n,
                              std::size_t dims, double* out) {
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t f = 0; f < dims; ++f) {
            const double diff = columns[f * n + j] - point[f];
            acc += diff * diff;
        }
        out[j] = acc;
    }
}

void accumulate_scaled_difference_scalar(const double* origin, const double* target,
                                         double scale, std::size_t dims, double* acc) {
    for (std::size_t f = 0; f < dims; ++f)
        acc[f] += scale * (target[f] - origin[f]);
}

}  // namespace

const KernelTable& scalar() {
    static const KernelTable table{Backend::Scalar, "scalar", &squared_distances_scalar,
                                   &accumulate_scaled_difference_scalar};
    return table;
}

}  // namespace flcn::kernels
