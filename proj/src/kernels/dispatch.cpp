#include "flcn/kernels.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace flcn::kernels {

#if defined(FLCN_HAVE_AVX2)
namespace detail {
const KernelTable& avx2_table();
}
#endif

namespace {

bool cpu_has_avx2() {
#if defined(FLCN_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<const KernelTable*>& active_slot() {
    static std::atomic<const KernelTable*> slot{&best()};
    return slot;
}

}  // namespace

const KernelTable* avx2() {
#if defined(FLCN_HAVE_AVX2)
    static const bool supported = cpu_has_avx2();
    return supported ? &detail::avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& best() {
    if (const KernelTable* t = avx2())
        return *t;
    return scalar();
}

const KernelTable& active() { return *active_slot().load(std::memory_order_acquire); }

void set_active(const KernelTable& table) {
    active_slot().store(&table, std::memory_order_release);
}

const KernelTable& by_name(std::string_view name) {
    if (name == "auto")
        return best();
    if (name == "scalar")
        return scalar();
    if (name == "avx2") {
        if (const KernelTable* t = avx2())
            return *t;
        throw std::runtime_error("avx2 kernels are not available on this machine");
    }
    throw std::invalid_argument("unknown kernel backend: " + std::string(name));
}

}  // namespace flcn::kernels
