// Finite-dimensional complex Hilbert-space engine: unit state vectors,
// Hermitian observables with non-degenerate spectra, eigendecomposition,
// Born probabilities and projective measurement.

#pragma once

#include "qlabel/errors.hpp"
#include "qlabel/types.hpp"

#include <cstddef>
#include <vector>

namespace qlabel {

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kHermiticityTolerance = 1e-10;
inline constexpr double kDegeneracyGap = 1e-8;
inline constexpr std::size_t kMaxEigenDim = 64;

class QuantumState {
public:
    // Rejects non-normalized input unless `normalize` is set; silent
    // renormalization tends to hide config mistakes.
    explicit QuantumState(std::vector<cx> amplitudes, bool normalize = false);

    static QuantumState basis_state(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amps_.size(); }
    const std::vector<cx>& amplitudes() const { return amps_; }
    const cx* data() const { return amps_.data(); }

private:
    std::vector<cx> amps_;
};

struct EigenSystem {
    std::vector<double> eigenvalues; // ascending
    ComplexMatrix eigenvectors;      // column k is the k-th eigenvector
};

// Cyclic Jacobi diagonalization for Hermitian matrices. Deterministic:
// fixed sweep order, convergence when the off-diagonal Frobenius norm
// drops below 1e-12, and a fixed phase convention (first component of
// each eigenvector with modulus > 1e-12 is made real positive).
//
// Throws NonHermitian (reporting the largest asymmetry) and
// DegenerateSpectrum when two eigenvalues are closer than 1e-8.
EigenSystem eigendecompose(const ComplexMatrix& hermitian);

class Observable {
public:
    // Eigendecomposes a Hermitian matrix (dim <= 64).
    static Observable from_matrix(const ComplexMatrix& hermitian);
    // Builds directly from an ascending, pairwise-distinct spectrum and an
    // orthonormal basis (column k of `eigenvectors` belongs to
    // eigenvalues[k]). Used for analytically known bases and grids.
    static Observable from_eigensystem(std::vector<double> eigenvalues,
                                       ComplexMatrix eigenvectors);

    std::size_t dim() const { return eigenvalues_.size(); }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    const ComplexMatrix& matrix() const { return matrix_; }

    // Eigenvector k as a contiguous vector.
    const std::vector<cx>& eigenvector(std::size_t k) const { return vectors_[k]; }

    // <v_k|phi> for a raw amplitude vector phi of matching length.
    cx amplitude_on(std::size_t k, const cx* phi) const;

    // <v_k | w_j> against another observable's eigenvector.
    cx overlap(std::size_t k, const Observable& other, std::size_t j) const;

private:
    Observable() = default;
    std::vector<double> eigenvalues_;
    std::vector<std::vector<cx>> vectors_;
    ComplexMatrix matrix_;
};

// z_k = <v_k|S>; output has unit norm.
std::vector<cx> amplitudes(const QuantumState& state, const Observable& basis);

// Born rule p_k = |<v_k|S>|^2; nonnegative, sums to one.
std::vector<double> born_probabilities(const QuantumState& state, const Observable& basis);

// Post-measurement state for the given outcome; throws
// ZeroProbabilityOutcome when the Born probability is below 1e-12.
QuantumState project(const QuantumState& state, const Observable& basis,
                     std::size_t outcome_index);

// Named standard bases. Eigenvalues are assigned 0..dim-1 in listed order,
// so exported tables keep the conventional outcome ordering.
Observable computational_basis(std::size_t dim);
Observable hadamard_basis(); // dim 2: (|0>+|1>)/sqrt2, (|0>-|1>)/sqrt2
Observable fourier_basis(std::size_t dim);

} // namespace qlabel
