#include "qlabel/hilbert.hpp"

#include "qlabel/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace qlabel {

namespace {

void check_unit_norm(const std::vector<cx>& amps, double tol, const char* who) {
    const double n2 = kernels::norm_sq(amps.data(), amps.size());
    if (std::abs(n2 - 1.0) > tol)
        throw NotNormalized(std::string(who) + ": state norm^2 = " + std::to_string(n2),
                            std::sqrt(n2));
}

double max_asymmetry(const ComplexMatrix& h) {
    double worst = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = i; j < h.cols(); ++j)
            worst = std::max(worst, std::abs(h(i, j) - std::conj(h(j, i))));
    return worst;
}

double offdiag_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

} // namespace

QuantumState::QuantumState(std::vector<cx> amplitudes, bool normalize)
    : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2)
        throw DimensionMismatch("QuantumState: dim must be >= 2");
    if (normalize) {
        const double n = std::sqrt(kernels::norm_sq(amps_.data(), amps_.size()));
        if (n < 1e-300)
            throw NotNormalized("QuantumState: cannot normalize the zero vector", 0.0);
        for (auto& a : amps_) a /= n;
    } else {
        check_unit_norm(amps_, kNormTolerance, "QuantumState");
    }
}

QuantumState QuantumState::basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim)
        throw DimensionMismatch("basis_state: index out of range");
    std::vector<cx> a(dim, cx{0.0, 0.0});
    a[index] = cx{1.0, 0.0};
    return QuantumState(std::move(a));
}

EigenSystem eigendecompose(const ComplexMatrix& hermitian) {
    const std::size_t n = hermitian.rows();
    if (n == 0 || hermitian.cols() != n)
        throw DimensionMismatch("eigendecompose: matrix must be square");
    if (n > kMaxEigenDim)
        throw DimensionMismatch("eigendecompose: dim > 64 not supported");

    const double asym = max_asymmetry(hermitian);
    if (asym > kHermiticityTolerance)
        throw NonHermitian("eigendecompose: matrix is not Hermitian, max asymmetry = " +
                               std::to_string(asym),
                           asym);

    // Work on the exactly-Hermitian average so rounding in the input cannot
    // leak into the iteration.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (hermitian(i, j) + std::conj(hermitian(j, i)));

    ComplexMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = cx{1.0, 0.0};

    constexpr double kOffTolerance = 1e-12;
    constexpr int kMaxSweeps = 100;

    int sweep = 0;
    while (offdiag_frobenius(a) > kOffTolerance) {
        if (++sweep > kMaxSweeps)
            throw Error("eigendecompose: Jacobi iteration failed to converge");
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;

                const cx phase = apq / mag; // e^{i alpha}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (app - aqq) / (2.0 * mag);
                const double sgn = theta >= 0.0 ? 1.0 : -1.0;
                const double t = sgn / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // Unitary plane rotation R: R(p,p)=c, R(p,q)=-s*phase,
                // R(q,p)=s*conj(phase), R(q,q)=c. Apply A <- R^dag A R
                // and accumulate V <- V R.
                const cx sp = s * phase;
                const cx spc = s * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) { // columns: A <- A R
                    const cx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + spc * akq;
                    a(k, q) = -sp * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) { // rows: A <- R^dag A
                    const cx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + sp * aqk;
                    a(q, k) = -spc * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + spc * vkq;
                    v(k, q) = -sp * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    EigenSystem out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }

    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double gap = out.eigenvalues[k + 1] - out.eigenvalues[k];
        if (gap < kDegeneracyGap)
            throw DegenerateSpectrum(
                "eigendecompose: eigenvalues " + std::to_string(out.eigenvalues[k]) + " and " +
                    std::to_string(out.eigenvalues[k + 1]) + " are degenerate",
                gap);
    }

    // Phase convention: first component with modulus > 1e-12 made real
    // positive, so repeated decompositions of the same matrix agree bitwise.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const double m = std::abs(out.eigenvectors(i, k));
            if (m > 1e-12) {
                const cx rot = std::conj(out.eigenvectors(i, k)) / m;
                for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) *= rot;
                break;
            }
        }
    }
    return out;
}

Observable Observable::from_matrix(const ComplexMatrix& hermitian) {
    EigenSystem es = eigendecompose(hermitian);
    Observable obs;
    obs.eigenvalues_ = std::move(es.eigenvalues);
    const std::size_t n = obs.eigenvalues_.size();
    obs.vectors_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        obs.vectors_[k].resize(n);
        for (std::size_t i = 0; i < n; ++i) obs.vectors_[k][i] = es.eigenvectors(i, k);
    }
    obs.matrix_ = hermitian;
    return obs;
}

Observable Observable::from_eigensystem(std::vector<double> eigenvalues,
                                        ComplexMatrix eigenvectors) {
    const std::size_t n = eigenvalues.size();
    if (n < 2 || eigenvectors.rows() != n || eigenvectors.cols() != n)
        throw DimensionMismatch("from_eigensystem: inconsistent sizes");
    if (n > 4096)
        throw DimensionMismatch("from_eigensystem: dim too large");
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double gap = eigenvalues[k + 1] - eigenvalues[k];
        if (gap <= 0.0)
            throw DegenerateSpectrum("from_eigensystem: eigenvalues must be strictly increasing",
                                     gap);
    }

    Observable obs;
    obs.vectors_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        obs.vectors_[k].resize(n);
        for (std::size_t i = 0; i < n; ++i) obs.vectors_[k][i] = eigenvectors(i, k);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = k; j < n; ++j) {
            const cx g = kernels::dot_conj(obs.vectors_[k].data(), obs.vectors_[j].data(), n);
            const double target = (k == j) ? 1.0 : 0.0;
            if (std::abs(g - target) > kNormTolerance * 10)
                throw NotNormalized("from_eigensystem: eigenbasis is not orthonormal",
                                    std::abs(g));
        }
    }

    obs.matrix_ = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                obs.matrix_(i, j) +=
                    eigenvalues[k] * obs.vectors_[k][i] * std::conj(obs.vectors_[k][j]);

    obs.eigenvalues_ = std::move(eigenvalues);
    return obs;
}

cx Observable::amplitude_on(std::size_t k, const cx* phi) const {
    return kernels::dot_conj(vectors_[k].data(), phi, dim());
}

cx Observable::overlap(std::size_t k, const Observable& other, std::size_t j) const {
    if (dim() != other.dim())
        throw DimensionMismatch("overlap: observables have different dims");
    return kernels::dot_conj(vectors_[k].data(), other.vectors_[j].data(), dim());
}

std::vector<cx> amplitudes(const QuantumState& state, const Observable& basis) {
    if (state.dim() != basis.dim())
        throw DimensionMismatch("amplitudes: state dim " + std::to_string(state.dim()) +
                                " vs basis dim " + std::to_string(basis.dim()));
    std::vector<cx> z(state.dim());
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = basis.amplitude_on(k, state.data());
    return z;
}

std::vector<double> born_probabilities(const QuantumState& state, const Observable& basis) {
    std::vector<cx> z = amplitudes(state, basis);
    std::vector<double> p(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) p[k] = std::norm(z[k]);
    return p;
}

QuantumState project(const QuantumState& state, const Observable& basis,
                     std::size_t outcome_index) {
    if (state.dim() != basis.dim())
        throw DimensionMismatch("project: state dim vs basis dim");
    if (outcome_index >= basis.dim())
        throw DimensionMismatch("project: outcome index out of range");
    const cx z = basis.amplitude_on(outcome_index, state.data());
    if (std::norm(z) <= 1e-12)
        throw ZeroProbabilityOutcome("project: outcome " + std::to_string(outcome_index) +
                                     " has probability " + std::to_string(std::norm(z)));
    return QuantumState(basis.eigenvector(outcome_index));
}

Observable computational_basis(std::size_t dim) {
    ComplexMatrix v(dim, dim);
    std::vector<double> ev(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        v(k, k) = cx{1.0, 0.0};
        ev[k] = static_cast<double>(k);
    }
    return Observable::from_eigensystem(std::move(ev), std::move(v));
}

Observable hadamard_basis() {
    const double r = 1.0 / std::numbers::sqrt2;
    ComplexMatrix v(2, 2);
    v(0, 0) = r;
    v(1, 0) = r;
    v(0, 1) = r;
    v(1, 1) = -r;
    return Observable::from_eigensystem({0.0, 1.0}, std::move(v));
}

Observable fourier_basis(std::size_t dim) {
    ComplexMatrix v(dim, dim);
    std::vector<double> ev(dim);
    const double r = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t m = 0; m < dim; ++m) {
        ev[m] = static_cast<double>(m);
        for (std::size_t k = 0; k < dim; ++k) {
            const double phase =
                2.0 * std::numbers::pi * static_cast<double>(k * m % dim) / static_cast<double>(dim);
            v(k, m) = cx{r * std::cos(phase), r * std::sin(phase)};
        }
    }
    return Observable::from_eigensystem(std::move(ev), std::move(v));
}

} // namespace qlabel
