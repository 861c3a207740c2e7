// Joint-value label spaces over several observables, the real
// quasi-probability weight table W(a_i, b_j), and the joint complex
// amplitude table Z fitted by constrained phase retrieval.

#pragma once

#include "qlabel/hilbert.hpp"
#include "qlabel/types.hpp"

#include <cstdint>
#include <vector>

namespace qlabel {

inline constexpr double kZeroOverlapThreshold = 1e-12;

// Set of index tuples (one index per observable) whose member eigenvectors
// all have pairwise overlaps above the threshold. Tuples projecting onto a
// state amplitude of zero stay in the set but are flagged zero-weight.
struct LabelSpace {
    std::vector<Observable> observables;
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<bool> zero_weight;
    double zero_overlap_threshold = kZeroOverlapThreshold;
};

LabelSpace consistent_set(const QuantumState& state, const std::vector<Observable>& observables,
                          double zero_overlap_threshold = kZeroOverlapThreshold);

// W(a_i, b_j) = (z^A_i* z^B_j <a_i|b_j> + z^B_j* z^A_i <b_j|a_i>) / 2.
// Real by construction; rows marginalize to |z^A_i|^2, columns to |z^B_j|^2.
// Entries may be negative.
struct WeightTable {
    RealMatrix values;
    Observable basis_a;
    Observable basis_b;
    double max_imag_residue = 0.0; // largest |Im| of the defining expression
};

WeightTable weight_table(const QuantumState& state, const Observable& basis_a,
                         const Observable& basis_b);

struct SolverParams {
    int max_iterations = 5000;
    double tolerance = 1e-8;
    int restarts = 8;
    std::uint64_t seed = 0;
};

// Joint amplitude table Z_ij = moduli_ij * exp(i phases_ij).
//
// Tables produced by z_table() have moduli fixed to |<a_i|b_j>|/sqrt(N), so
// row and column squared-modulus sums equal 1/N and the conditional rule
// |Z_ij|^2 / sum_j' |Z_ij'|^2 = |<b_j|a_i>|^2 holds by construction; the
// solver only fits the phases. phase_space_label_state() fills the same
// container with its explicit construction instead.
struct ZTable {
    RealMatrix moduli;
    RealMatrix phases;
    std::vector<double> gauge_a; // arg(sum_j Z_ij) - arg(z^A_i)
    std::vector<double> gauge_b; // arg(sum_i Z_ij) - arg(z^B_j)
    double residual = 0.0;
    bool converged = false;
    int best_restart = 0;
    int iterations = 0;

    cx z(std::size_t i, std::size_t j) const;
    std::size_t dim() const { return moduli.rows(); }
};

// Fits the N^2 phases by projected gradient descent with random restarts so
// that |sum_j Z_ij| tracks |z^A_i| and |sum_i Z_ij| tracks |z^B_j| (the
// marginal amplitude constraints up to per-row/column gauge phases, which
// are recorded). residual is reported even when above tolerance; converged
// is false in that case, never an exception.
ZTable z_table(const QuantumState& state, const Observable& basis_a, const Observable& basis_b,
               const SolverParams& params = {});

} // namespace qlabel
