// AVX2+FMA variants of the inner-loop kernels. This translation unit is
// compiled with -mavx2 -mfma and must only be entered after the runtime
// CPU check in kernels.cpp.

#include "qlabel/kernels.hpp"

#ifdef QLABEL_HAVE_AVX2

#include <immintrin.h>

namespace qlabel::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// Interleaved complex data: a 256-bit lane holds [re0, im0, re1, im1].
const __m256d kSignOdd = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);

} // namespace

cx dot_conj(const cx* a, const cx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);              // ar*br, ai*bi
        __m256d vbs = _mm256_permute_pd(vb, 0x5);              // im/re swapped
        __m256d prod = _mm256_mul_pd(va, vbs);                 // ar*bi, ai*br
        acc_im = _mm256_add_pd(acc_im, _mm256_xor_pd(prod, kSignOdd));
    }
    double re = hsum(acc_re);
    double im = hsum(acc_im);
    for (; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double norm_sq(const cx* a, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        acc = _mm256_fmadd_pd(va, va, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i)
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}

cx dot_u(const cx* a, const cx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        __m256d prod = _mm256_mul_pd(va, vb);                  // ar*br, ai*bi
        acc_re = _mm256_add_pd(acc_re, _mm256_xor_pd(prod, kSignOdd));
        __m256d vbs = _mm256_permute_pd(vb, 0x5);
        acc_im = _mm256_fmadd_pd(va, vbs, acc_im);             // ar*bi, ai*br
    }
    double re = hsum(acc_re);
    double im = hsum(acc_im);
    for (; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br - ai * bi;
        im += ar * bi + ai * br;
    }
    return {re, im};
}

void interference_intensity(const cx* a, const cx* b, double* out, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d s = _mm256_add_pd(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i));
        __m256d sq = _mm256_mul_pd(s, s);
        __m256d sum = _mm256_add_pd(sq, _mm256_permute_pd(sq, 0x5));
        out[i] = _mm_cvtsd_f64(_mm256_castpd256_pd128(sum));
        out[i + 1] = _mm_cvtsd_f64(_mm256_extractf128_pd(sum, 1));
    }
    for (; i < n; ++i) {
        const double sr = a[i].real() + b[i].real();
        const double si = a[i].imag() + b[i].imag();
        out[i] = sr * sr + si * si;
    }
}

void mixture_intensity(const cx* a, const cx* b, double* out, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        __m256d sq = _mm256_fmadd_pd(vb, vb, _mm256_mul_pd(va, va));
        __m256d sum = _mm256_add_pd(sq, _mm256_permute_pd(sq, 0x5));
        out[i] = _mm_cvtsd_f64(_mm256_castpd256_pd128(sum));
        out[i + 1] = _mm_cvtsd_f64(_mm256_extractf128_pd(sum, 1));
    }
    for (; i < n; ++i)
        out[i] = a[i].real() * a[i].real() + a[i].imag() * a[i].imag() +
                 b[i].real() * b[i].real() + b[i].imag() * b[i].imag();
}

} // namespace qlabel::kernels::avx2

#endif // QLABEL_HAVE_AVX2
