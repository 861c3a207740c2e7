// Label-correlated two-system ensembles: a shared coefficient vector over a
// correlation basis with the eigenvalue anti-pairing b^b_j = -b^a_j, the
// three joint-distribution semantics, and the ambiguity/divergence report.

#pragma once

#include "qlabel/hilbert.hpp"
#include "qlabel/label_tables.hpp"
#include "qlabel/measurement.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qlabel {

struct CorrelatedPairEnsemble {
    std::vector<cx> zb;      // shared coefficients, unit norm
    Observable basis_a;      // eigenvectors |b^a_j>, ascending eigenvalues
    Observable basis_b;      // ascending eigenvalues on the companion side
    // pairing[j] is the basis_b index carrying eigenvalue -basis_a.eigenvalues[j]
    std::vector<std::size_t> pairing;

    std::size_t dim() const { return zb.size(); }
    // The a-side individual state sum_j zb_j |b^a_j>.
    QuantumState system_a_state() const;
    // Joint B-B table over (j, paired outcome): |zb_j|^2 on matched pairs.
    RealMatrix joint_bb_table() const;
};

// Builds basis_b from basis_a by negating eigenvalues (vectors reused, order
// re-sorted ascending) and records the index pairing.
CorrelatedPairEnsemble make_pair(std::vector<cx> zb, const Observable& basis_a);

enum class Semantics { orthodox_b_first, orthodox_a_first, label_theory };

std::string to_string(Semantics semantics);

struct JointDistribution {
    Semantics semantics;
    // rows: A outcomes ascending; columns: shared coefficient index j (the
    // b-side outcome carrying eigenvalue -basis_a.eigenvalues[j]).
    RealMatrix table;
};

// Distribution of an A measurement on system a when the companion is never
// measured: the interference form on the pure state sum_j zb_j |b^a_j>,
// identical in both rule systems.
std::vector<double> unmeasured_companion_distribution(const CorrelatedPairEnsemble& pair,
                                                      const Observable& a_on_a);

// orthodox_b_first: entry(i,j) = |zb_j|^2 |<a_i|b_j>|^2 (projection chain
// with B measured first). label_theory: entry(i,j) = P(a_i) |<b_j|a_i>|^2
// with P from unmeasured_companion_distribution (no projection of the
// a-system by the companion measurement). orthodox_a_first evaluates the
// same formula as label_theory and their equality is asserted.
//
// When `conditional_from_z` is set the label-theory conditional is read off
// a fitted Z table as |Z_ij|^2 / sum_j' |Z_ij'|^2 instead of |<b_j|a_i>|^2;
// the two agree by construction and the difference is reported.
struct ConditionalSourceReport {
    bool used_z_table = false;
    double max_difference = 0.0; // between the two conditional forms
};

JointDistribution joint_distribution(const CorrelatedPairEnsemble& pair, const Observable& a_on_a,
                                     Semantics semantics, bool conditional_from_z = false,
                                     ConditionalSourceReport* source_report = nullptr);

struct AmbiguityReport {
    RealMatrix b_first;
    RealMatrix a_first;
    RealMatrix label;
    double tv_distance = 0.0;                // between the two orthodox orders
    std::vector<double> marginal_deviation;  // sum_i label(i,j) - |zb_j|^2
    bool ambiguous = false;
    bool divergent_from_orthodox = false;
};

AmbiguityReport ambiguity_report(const CorrelatedPairEnsemble& pair, const Observable& a_on_a);

// Samples (a outcome, b outcome) pairs from the chosen semantics' analytic
// joint table; chunked-seed deterministic.
MeasurementRecord sample_pair(const CorrelatedPairEnsemble& pair, const Observable& a_on_a,
                              Semantics semantics, std::uint64_t n_samples, std::uint64_t seed);

} // namespace qlabel
