// Analytic single/sequential measurement distributions and seeded Monte
// Carlo sampling of measurement protocols.

#pragma once

#include "qlabel/hilbert.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qlabel {

struct MeasurementRecord {
    std::vector<std::size_t> outcome_dims; // one entry per protocol step
    std::uint64_t seed = 0;
    std::uint64_t n_samples = 0;
    std::map<std::vector<std::size_t>, std::uint64_t> counts;

    std::uint64_t total_counts() const;
};

// Probability of each outcome for a direct measurement; the Born rule.
std::vector<double> direct_distribution(const QuantumState& state, const Observable& a);

// Same distribution evaluated through the interference form
// P(a_i) = |sum_j z^B_j <a_i|b_j>|^2 over an arbitrary expansion basis;
// asserts agreement with the Born rule within 1e-12.
std::vector<double> direct_distribution_expanded(const QuantumState& state, const Observable& a,
                                                 const Observable& expansion_basis);

// Measure-b-first-then-a marginal P'(a_i) = sum_j |z^B_j <a_i|b_j>|^2:
// a classical sum over projected intermediates instead of interference.
std::vector<double> sequential_distribution(const QuantumState& state, const Observable& b_first,
                                            const Observable& a_second);

// Samples the protocol step by step (projecting between steps) with the
// chunked-stream RNG contract; deterministic for a fixed seed.
MeasurementRecord sample_protocol(const QuantumState& state,
                                  const std::vector<Observable>& protocol,
                                  std::uint64_t n_samples, std::uint64_t seed);

struct OrderReport {
    RealMatrix a_first;  // P(a_i) |<b_j|a_i>|^2
    RealMatrix b_first;  // P(b_j) |<a_i|b_j>|^2, same (i, j) layout
    double tv_distance = 0.0;
    bool order_sensitive = false;
};

// Both measurement-order joint tables and their total-variation distance;
// they differ unless the two marginal distributions are uniform.
OrderReport order_comparison(const QuantumState& state, const Observable& a, const Observable& b);

// Shared helper: draws an index from a discrete distribution using one
// uniform variate (linear CDF walk; the final bin absorbs rounding).
std::size_t sample_index(const std::vector<double>& probabilities, double u);

} // namespace qlabel
