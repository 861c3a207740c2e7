// Data-parallel inner loops used by the hot paths (inner products, norm
// reductions, phase-weighted sums, screen intensity maps).
//
// Each kernel has a scalar reference implementation and, on x86-64 with
// AVX2+FMA, a vectorized variant. The active variant is chosen once at
// runtime from CPU capabilities; the scalar path is the semantic reference
// and the SIMD paths are equivalence-tested against it. Set QLABEL_SIMD to
// "scalar" or "avx2" in the environment to force a backend.

#pragma once

#include "qlabel/types.hpp"

#include <cstddef>

namespace qlabel::kernels {

enum class Backend { scalar, avx2 };

// Dispatched entry points.
cx dot_conj(const cx* a, const cx* b, std::size_t n);   // sum_i conj(a_i) * b_i
double norm_sq(const cx* a, std::size_t n);             // sum_i |a_i|^2
cx dot_u(const cx* a, const cx* b, std::size_t n);      // sum_i a_i * b_i, unconjugated
void interference_intensity(const cx* a, const cx* b, double* out, std::size_t n); // |a_i + b_i|^2
void mixture_intensity(const cx* a, const cx* b, double* out, std::size_t n);      // |a_i|^2 + |b_i|^2

Backend active_backend();
const char* backend_name();
// Returns false (and leaves the dispatch unchanged) if the requested
// backend is not available on this machine.
bool select_backend(Backend backend);
bool backend_available(Backend backend);

namespace scalar {
cx dot_conj(const cx* a, const cx* b, std::size_t n);
double norm_sq(const cx* a, std::size_t n);
cx dot_u(const cx* a, const cx* b, std::size_t n);
void interference_intensity(const cx* a, const cx* b, double* out, std::size_t n);
void mixture_intensity(const cx* a, const cx* b, double* out, std::size_t n);
} // namespace scalar

#ifdef QLABEL_HAVE_AVX2
namespace avx2 {
cx dot_conj(const cx* a, const cx* b, std::size_t n);
double norm_sq(const cx* a, std::size_t n);
cx dot_u(const cx* a, const cx* b, std::size_t n);
void interference_intensity(const cx* a, const cx* b, double* out, std::size_t n);
void mixture_intensity(const cx* a, const cx* b, double* out, std::size_t n);
} // namespace avx2
#endif

} // namespace qlabel::kernels
