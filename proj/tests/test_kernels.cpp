#include "qlabel/kernels.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <vector>

using namespace qlabel;
using test_helpers::random_unit_disc;

namespace {

std::vector<cx> random_vec(std::size_t n, Xoshiro256StarStar& rng) {
    std::vector<cx> v(n);
    for (auto& x : v) x = random_unit_disc(rng);
    return v;
}

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar dot_conj matches a direct std::complex evaluation") {
    Xoshiro256StarStar rng(11);
    auto a = random_vec(37, rng);
    auto b = random_vec(37, rng);
    cx expect{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) expect += std::conj(a[i]) * b[i];
    const cx got = kernels::scalar::dot_conj(a.data(), b.data(), a.size());
    CHECK(std::abs(got - expect) < 1e-13);
}

TEST_CASE("scalar kernels: edge sizes") {
    Xoshiro256StarStar rng(12);
    auto a = random_vec(1, rng);
    auto b = random_vec(1, rng);
    CHECK(kernels::scalar::dot_conj(a.data(), b.data(), 0) == cx{0.0, 0.0});
    CHECK(kernels::scalar::norm_sq(a.data(), 0) == 0.0);
    const cx d = kernels::scalar::dot_conj(a.data(), b.data(), 1);
    CHECK(std::abs(d - std::conj(a[0]) * b[0]) < 1e-15);
}

#ifdef QLABEL_HAVE_AVX2
TEST_CASE("avx2 variants agree with scalar reference") {
    if (!kernels::backend_available(kernels::Backend::avx2)) {
        MESSAGE("AVX2 not available on this CPU; skipping");
        return;
    }
    Xoshiro256StarStar rng(13);
    // Odd and even lengths to exercise the vector tails.
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{7}, std::size_t{64},
                          std::size_t{129}, std::size_t{1000}}) {
        auto a = random_vec(n, rng);
        auto b = random_vec(n, rng);

        // Reductions are reassociated by the vector variants, so compare
        // with a tolerance relative to the accumulated magnitude.
        const double scale = 1.0 + kernels::scalar::norm_sq(a.data(), n);
        const cx d_s = kernels::scalar::dot_conj(a.data(), b.data(), n);
        const cx d_v = kernels::avx2::dot_conj(a.data(), b.data(), n);
        CHECK(std::abs(d_s - d_v) < 1e-13 * scale);

        CHECK(std::abs(kernels::scalar::norm_sq(a.data(), n) -
                       kernels::avx2::norm_sq(a.data(), n)) < 1e-13 * scale);
        CHECK(std::abs(kernels::scalar::dot_u(a.data(), b.data(), n) -
                       kernels::avx2::dot_u(a.data(), b.data(), n)) < 1e-13 * scale);

        std::vector<double> out_s(n), out_v(n);
        kernels::scalar::interference_intensity(a.data(), b.data(), out_s.data(), n);
        kernels::avx2::interference_intensity(a.data(), b.data(), out_v.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(out_s[i] - out_v[i]) < 1e-13);

        kernels::scalar::mixture_intensity(a.data(), b.data(), out_s.data(), n);
        kernels::avx2::mixture_intensity(a.data(), b.data(), out_v.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(out_s[i] - out_v[i]) < 1e-13);
    }
}
#endif

TEST_CASE("backend selection round trip") {
    const auto original = kernels::active_backend();
    REQUIRE(kernels::select_backend(kernels::Backend::scalar));
    CHECK(kernels::active_backend() == kernels::Backend::scalar);
    if (kernels::backend_available(kernels::Backend::avx2)) {
        REQUIRE(kernels::select_backend(kernels::Backend::avx2));
        CHECK(kernels::active_backend() == kernels::Backend::avx2);
    }
    kernels::select_backend(original);
}

} // TEST_SUITE
