#include "qlabel/hilbert.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qlabel;
using test_helpers::make_rng;
using test_helpers::random_hermitian;
using test_helpers::random_observable;
using test_helpers::random_state;

namespace {

// Oracle: rebuild sum_k lambda_k v_k v_k^dag and compare entrywise.
double reconstruction_residual(const ComplexMatrix& h, const EigenSystem& es) {
    const std::size_t n = h.rows();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cx acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k)
                acc += es.eigenvalues[k] * es.eigenvectors(i, k) * std::conj(es.eigenvectors(j, k));
            worst = std::max(worst, std::abs(acc - h(i, j)));
        }
    }
    return worst;
}

} // namespace

TEST_SUITE("hilbert") {

TEST_CASE("identity matrix is rejected as degenerate") {
    ComplexMatrix eye(2, 2);
    eye(0, 0) = eye(1, 1) = cx{1.0, 0.0};
    CHECK_THROWS_AS(eigendecompose(eye), DegenerateSpectrum);
}

TEST_CASE("pauli-x eigensystem with the leading-positive phase convention") {
    ComplexMatrix x(2, 2);
    x(0, 1) = x(1, 0) = cx{1.0, 0.0};
    const EigenSystem es = eigendecompose(x);
    const double r = 1.0 / std::numbers::sqrt2;
    CHECK(es.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(es.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(es.eigenvectors(0, 0) - cx{r, 0.0}) < 1e-12);
    CHECK(std::abs(es.eigenvectors(1, 0) - cx{-r, 0.0}) < 1e-12);
    CHECK(std::abs(es.eigenvectors(0, 1) - cx{r, 0.0}) < 1e-12);
    CHECK(std::abs(es.eigenvectors(1, 1) - cx{r, 0.0}) < 1e-12);
}

TEST_CASE("non-hermitian input raises with the observed asymmetry") {
    ComplexMatrix m(2, 2);
    m(0, 1) = cx{1.0, 0.0};
    m(1, 0) = cx{0.5, 0.0};
    try {
        eigendecompose(m);
        FAIL("expected NonHermitian");
    } catch (const NonHermitian& e) {
        CHECK(e.max_asymmetry == doctest::Approx(0.5));
    }
}

TEST_CASE("random 4x4 reconstruction residual below 1e-8") {
    auto rng = make_rng(101);
    const ComplexMatrix h = random_hermitian(4, rng);
    const EigenSystem es = eigendecompose(h);
    CHECK(reconstruction_residual(h, es) < 1e-8);
}

TEST_CASE("reconstruction residual across 100 random hermitians up to dim 16") {
    auto rng = make_rng(102);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(rng.uniform() * 15.0);
        const ComplexMatrix h = random_hermitian(dim, rng);
        EigenSystem es;
        try {
            es = eigendecompose(h);
        } catch (const DegenerateSpectrum&) {
            continue;
        }
        CHECK(reconstruction_residual(h, es) < 1e-8);
        for (std::size_t k = 0; k + 1 < dim; ++k)
            CHECK(es.eigenvalues[k] < es.eigenvalues[k + 1]);
    }
}

TEST_CASE("eigendecomposition is bitwise deterministic") {
    auto rng = make_rng(103);
    const ComplexMatrix h = random_hermitian(8, rng);
    const EigenSystem a = eigendecompose(h);
    const EigenSystem b = eigendecompose(h);
    REQUIRE(a.eigenvalues.size() == b.eigenvalues.size());
    for (std::size_t k = 0; k < a.eigenvalues.size(); ++k)
        CHECK(a.eigenvalues[k] == b.eigenvalues[k]);
    CHECK(a.eigenvectors == b.eigenvectors);
}

TEST_CASE("amplitudes of an eigenstate form an indicator vector") {
    auto rng = make_rng(104);
    const Observable obs = random_observable(4, rng);
    const QuantumState s(obs.eigenvector(0));
    const auto z = amplitudes(s, obs);
    CHECK(std::abs(z[0] - cx{1.0, 0.0}) < 1e-10);
    for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(z[k]) < 1e-10);
}

TEST_CASE("|0> against the hadamard basis") {
    const QuantumState zero = QuantumState::basis_state(2, 0);
    const auto z = amplitudes(zero, hadamard_basis());
    const double r = 1.0 / std::numbers::sqrt2;
    CHECK(std::abs(z[0] - cx{r, 0.0}) < 1e-12);
    CHECK(std::abs(z[1] - cx{r, 0.0}) < 1e-12);
    const auto p = born_probabilities(zero, hadamard_basis());
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("born probabilities equal squared amplitude moduli and sum to one") {
    auto rng = make_rng(105);
    for (std::size_t dim : {2, 3, 4, 8}) {
        for (int trial = 0; trial < 50; ++trial) {
            const Observable obs = random_observable(dim, rng);
            const QuantumState s = random_state(dim, rng);
            const auto z = amplitudes(s, obs);
            const auto p = born_probabilities(s, obs);
            double norm = 0.0, total = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                CHECK(p[k] >= 0.0);
                CHECK(std::abs(p[k] - std::norm(z[k])) < 1e-12);
                norm += std::norm(z[k]);
                total += p[k];
            }
            CHECK(std::abs(norm - 1.0) < 1e-10);
            CHECK(std::abs(total - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("projection: idempotence and repeatability") {
    auto rng = make_rng(106);
    const Observable obs = random_observable(3, rng);
    const QuantumState eig(obs.eigenvector(1));
    const QuantumState again = project(eig, obs, 1);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(std::abs(again.amplitudes()[i] - eig.amplitudes()[i]) < 1e-12);

    // measure -> project -> re-measure gives the projected outcome surely
    const QuantumState s = random_state(3, rng);
    const QuantumState collapsed = project(s, obs, 2);
    const auto p = born_probabilities(collapsed, obs);
    CHECK(p[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("projection onto hadamard outcome of |0>") {
    const QuantumState zero = QuantumState::basis_state(2, 0);
    const QuantumState plus = project(zero, hadamard_basis(), 0);
    const double r = 1.0 / std::numbers::sqrt2;
    CHECK(std::abs(plus.amplitudes()[0] - cx{r, 0.0}) < 1e-12);
    CHECK(std::abs(plus.amplitudes()[1] - cx{r, 0.0}) < 1e-12);
}

TEST_CASE("projection onto a zero-probability outcome throws") {
    const QuantumState zero = QuantumState::basis_state(2, 0);
    CHECK_THROWS_AS(project(zero, computational_basis(2), 1), ZeroProbabilityOutcome);
}

TEST_CASE("state constructor rejects non-normalized input unless asked") {
    std::vector<cx> v{cx{1.0, 0.0}, cx{1.0, 0.0}};
    CHECK_THROWS_AS(QuantumState{v}, NotNormalized);
    const QuantumState s(v, true);
    CHECK(std::abs(s.amplitudes()[0].real() - 1.0 / std::numbers::sqrt2) < 1e-12);
}

TEST_CASE("dimension mismatches are reported") {
    const QuantumState s = QuantumState::basis_state(3, 0);
    CHECK_THROWS_AS(amplitudes(s, hadamard_basis()), DimensionMismatch);
}

TEST_CASE("fourier basis is orthonormal and matches hadamard at dim 2") {
    const Observable f2 = fourier_basis(2);
    const Observable h = hadamard_basis();
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(std::abs(f2.eigenvector(k)[i] - h.eigenvector(k)[i]) < 1e-12);
    const Observable f5 = fourier_basis(5); // from_eigensystem validates orthonormality
    CHECK(f5.dim() == 5);
}

} // TEST_SUITE
