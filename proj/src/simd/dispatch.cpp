#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qfrob/simd/kernels.hpp"

namespace qfrob::simd {

namespace {

constexpr KernelTable kScalar{scalar::sum, scalar::dot, scalar::dot3};
#if defined(QFROB_HAVE_AVX2)
constexpr KernelTable kAvx2{avx2::sum, avx2::dot, avx2::dot3};
#endif

Isa initial_isa() {
    if (const char* env = std::getenv("QFROB_SIMD")) {
        const std::string v(env);
        if (v == "scalar") return Isa::scalar;
        if (v == "avx2" && isa_available(Isa::avx2)) return Isa::avx2;
    }
    return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

}  // namespace

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(QFROB_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

const KernelTable& table_for(Isa isa) {
    if (!isa_available(isa)) throw std::invalid_argument("SIMD variant not available: " + std::string(isa_name(isa)));
#if defined(QFROB_HAVE_AVX2)
    if (isa == Isa::avx2) return kAvx2;
#endif
    return kScalar;
}

const KernelTable& kernels() {
#if defined(QFROB_HAVE_AVX2)
    if (current().load(std::memory_order_relaxed) == Isa::avx2) return kAvx2;
#endif
    return kScalar;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void select_isa(Isa isa) {
    table_for(isa);
    current().store(isa, std::memory_order_relaxed);
}

}  // namespace qfrob::simd
