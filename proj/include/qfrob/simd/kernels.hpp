#pragma once

#include <cstddef>
#include <string_view>

namespace qfrob::simd {

enum class Isa { scalar, avx2 };

struct KernelTable {
    double (*sum)(const double* a, std::size_t n);
    double (*dot)(const double* a, const double* b, std::size_t n);
    /// Σ a_i b_i c_i
    double (*dot3)(const double* a, const double* b, const double* c, std::size_t n);
};

namespace scalar {
double sum(const double* a, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double dot3(const double* a, const double* b, const double* c, std::size_t n);
}  // namespace scalar

#if defined(QFROB_HAVE_AVX2)
namespace avx2 {
double sum(const double* a, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double dot3(const double* a, const double* b, const double* c, std::size_t n);
}  // namespace avx2
#endif

/// True if the library was built with the variant and the CPU runs it.
bool isa_available(Isa isa);
std::string_view isa_name(Isa isa);

/// The table in use. Chosen on first call: QFROB_SIMD=scalar|avx2 if set and
/// available, otherwise the best available variant.
const KernelTable& kernels();
Isa active_isa();
/// Throws std::invalid_argument if the variant is unavailable.
void select_isa(Isa isa);
const KernelTable& table_for(Isa isa);

inline double sum(const double* a, std::size_t n) { return kernels().sum(a, n); }
inline double dot(const double* a, const double* b, std::size_t n) { return kernels().dot(a, b, n); }
inline double dot3(const double* a, const double* b, const double* c, std::size_t n) {
    return kernels().dot3(a, b, c, n);
}

}  // namespace qfrob::simd
