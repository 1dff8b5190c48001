#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "flcn/distance.hpp"
#include "flcn/dynamics.hpp"
#include "flcn/kernels.hpp"
#include "flcn/synthetic.hpp"

using namespace flcn;
namespace kn = flcn::kernels;

namespace {

std::vector<double> noise(std::size_t n, std::uint64_t seed, double scale) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<double> v(n);
    for (auto& x : v)
        x = u(rng);
    return v;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::bit_cast<std::uint64_t>(a[i]) != std::bit_cast<std::uint64_t>(b[i]))
            return false;
    return true;
}

struct Restore {
    const kn::KernelTable& saved = kn::active();
    ~Restore() { kn::set_active(saved); }
};

}  // namespace

TEST_CASE("backend lookup") {
    CHECK(kn::by_name("scalar").backend == kn::Backend::Scalar);
    CHECK(&kn::by_name("auto") == &kn::best());
    CHECK_THROWS_AS(kn::by_name("sse9"), std::invalid_argument);
    if (!kn::avx2())
        CHECK_THROWS_AS(kn::by_name("avx2"), std::runtime_error);
}

TEST_CASE("squared distances agree bit for bit") {
    const auto* simd = kn::avx2();
    if (!simd) {
        MESSAGE("AVX2 backend unavailable, nothing to compare");
        return;
    }
    // odd sizes exercise the tail lanes
    for (std::size_t n : {1, 3, 4, 5, 17, 64, 131})
        for (std::size_t dims : {1, 2, 7, 34}) {
            const auto cols = noise(n * dims, n * 31 + dims, 50.0);
            const auto point = noise(dims, dims, 50.0);
            std::vector<double> a(n), b(n);
            kn::scalar().squared_distances(point.data(), cols.data(), n, dims, a.data());
            simd->squared_distances(point.data(), cols.data(), n, dims, b.data());
            CHECK(same_bits(a, b));
        }
}

TEST_CASE("scaled difference agrees bit for bit") {
    const auto* simd = kn::avx2();
    if (!simd)
        return;
    for (std::size_t dims : {1, 3, 4, 9, 32, 33}) {
        const auto o = noise(dims, 1, 3.0), t = noise(dims, 2, 3.0);
        auto a = noise(dims, 3, 1.0), b = a;
        kn::scalar().accumulate_scaled_difference(o.data(), t.data(), 0.37, dims, a.data());
        simd->accumulate_scaled_difference(o.data(), t.data(), 0.37, dims, b.data());
        CHECK(same_bits(a, b));
    }
}

TEST_CASE("whole runs agree across backends") {
    const auto* simd = kn::avx2();
    if (!simd)
        return;
    Restore restore;
    const Matrix x = uniform_points(90, 5, 13);
    kn::set_active(kn::scalar());
    const auto ds = pairwise_distances(x);
    const auto rs = iterate(x, {.k = 6, .max_iters = 15});
    kn::set_active(*simd);
    const auto dv = pairwise_distances(x);
    const auto rv = iterate(x, {.k = 6, .max_iters = 15});
    for (std::size_t i = 0; i < 90; ++i)
        for (std::size_t j = 0; j < 90; ++j)
            REQUIRE(std::bit_cast<std::uint64_t>(ds(i, j)) == std::bit_cast<std::uint64_t>(dv(i, j)));
    CHECK(rs.state.current() == rv.state.current());
    CHECK(rs.trace.totals_per_iteration == rv.trace.totals_per_iteration);
}
