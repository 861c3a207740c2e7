#include "qlabel/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <mutex>

namespace qlabel::kernels {

namespace scalar {

cx dot_conj(const cx* a, const cx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double norm_sq(const cx* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}

cx dot_u(const cx* a, const cx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br - ai * bi;
        im += ar * bi + ai * br;
    }
    return {re, im};
}

void interference_intensity(const cx* a, const cx* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double sr = a[i].real() + b[i].real();
        const double si = a[i].imag() + b[i].imag();
        out[i] = sr * sr + si * si;
    }
}

void mixture_intensity(const cx* a, const cx* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a[i].real() * a[i].real() + a[i].imag() * a[i].imag() +
                 b[i].real() * b[i].real() + b[i].imag() * b[i].imag();
}

} // namespace scalar

namespace {

struct DispatchTable {
    cx (*dot_conj)(const cx*, const cx*, std::size_t);
    double (*norm_sq)(const cx*, std::size_t);
    cx (*dot_u)(const cx*, const cx*, std::size_t);
    void (*interference_intensity)(const cx*, const cx*, double*, std::size_t);
    void (*mixture_intensity)(const cx*, const cx*, double*, std::size_t);
    Backend backend;
};

constexpr DispatchTable kScalarTable = {
    &scalar::dot_conj,
    &scalar::norm_sq,
    &scalar::dot_u,
    &scalar::interference_intensity,
    &scalar::mixture_intensity,
    Backend::scalar,
};

#ifdef QLABEL_HAVE_AVX2
constexpr DispatchTable kAvx2Table = {
    &avx2::dot_conj,
    &avx2::norm_sq,
    &avx2::dot_u,
    &avx2::interference_intensity,
    &avx2::mixture_intensity,
    Backend::avx2,
};

bool cpu_has_avx2() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

DispatchTable g_table = kScalarTable;
std::once_flag g_init_once;

void init_dispatch() {
#ifdef QLABEL_HAVE_AVX2
    bool want_avx2 = cpu_has_avx2();
    if (const char* env = std::getenv("QLABEL_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) want_avx2 = false;
        // "avx2" keeps the CPU-capability decision; forcing it onto a CPU
        // without the instructions would fault.
    }
    if (want_avx2) g_table = kAvx2Table;
#endif
}

const DispatchTable& table() {
    std::call_once(g_init_once, init_dispatch);
    return g_table;
}

} // namespace

cx dot_conj(const cx* a, const cx* b, std::size_t n) { return table().dot_conj(a, b, n); }
double norm_sq(const cx* a, std::size_t n) { return table().norm_sq(a, n); }
cx dot_u(const cx* a, const cx* b, std::size_t n) { return table().dot_u(a, b, n); }
void interference_intensity(const cx* a, const cx* b, double* out, std::size_t n) {
    table().interference_intensity(a, b, out, n);
}
void mixture_intensity(const cx* a, const cx* b, double* out, std::size_t n) {
    table().mixture_intensity(a, b, out, n);
}

Backend active_backend() { return table().backend; }

const char* backend_name() {
    switch (active_backend()) {
        case Backend::avx2: return "avx2";
        case Backend::scalar: break;
    }
    return "scalar";
}

bool backend_available(Backend backend) {
    if (backend == Backend::scalar) return true;
#ifdef QLABEL_HAVE_AVX2
    if (backend == Backend::avx2) return cpu_has_avx2();
#endif
    return false;
}

bool select_backend(Backend backend) {
    std::call_once(g_init_once, init_dispatch);
    if (!backend_available(backend)) return false;
    switch (backend) {
        case Backend::scalar: g_table = kScalarTable; break;
        case Backend::avx2:
#ifdef QLABEL_HAVE_AVX2
            g_table = kAvx2Table;
            break;
#else
            return false;
#endif
    }
    return true;
}

} // namespace qlabel::kernels
