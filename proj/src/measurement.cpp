#include "qlabel/measurement.hpp"

#include "qlabel/rng.hpp"

#include <cmath>
#include <string>

namespace qlabel {

std::uint64_t MeasurementRecord::total_counts() const {
    std::uint64_t total = 0;
    for (const auto& [outcome, count] : counts) total += count;
    return total;
}

std::vector<double> direct_distribution(const QuantumState& state, const Observable& a) {
    return born_probabilities(state, a);
}

std::vector<double> direct_distribution_expanded(const QuantumState& state, const Observable& a,
                                                 const Observable& expansion_basis) {
    const std::size_t dim = state.dim();
    if (a.dim() != dim || expansion_basis.dim() != dim)
        throw DimensionMismatch("direct_distribution_expanded: dim mismatch");

    const std::vector<cx> zb = amplitudes(state, expansion_basis);
    const std::vector<double> born = born_probabilities(state, a);
    std::vector<double> p(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        cx acc{0.0, 0.0};
        for (std::size_t j = 0; j < dim; ++j)
            acc += zb[j] * a.overlap(i, expansion_basis, j);
        p[i] = std::norm(acc);
        if (std::abs(p[i] - born[i]) > 1e-12)
            throw Error("direct_distribution_expanded: interference form deviates from the "
                        "Born rule by " +
                        std::to_string(std::abs(p[i] - born[i])));
    }
    return p;
}

std::vector<double> sequential_distribution(const QuantumState& state, const Observable& b_first,
                                            const Observable& a_second) {
    const std::size_t dim = state.dim();
    if (b_first.dim() != dim || a_second.dim() != dim)
        throw DimensionMismatch("sequential_distribution: dim mismatch");

    const std::vector<double> pb = born_probabilities(state, b_first);
    std::vector<double> p(dim, 0.0);
    for (std::size_t j = 0; j < dim; ++j) {
        if (pb[j] == 0.0) continue;
        for (std::size_t i = 0; i < dim; ++i)
            p[i] += pb[j] * std::norm(a_second.overlap(i, b_first, j));
    }
    return p;
}

std::size_t sample_index(const std::vector<double>& probabilities, double u) {
    double cdf = 0.0;
    for (std::size_t k = 0; k + 1 < probabilities.size(); ++k) {
        cdf += probabilities[k];
        if (u < cdf) return k;
    }
    return probabilities.size() - 1;
}

MeasurementRecord sample_protocol(const QuantumState& state,
                                  const std::vector<Observable>& protocol,
                                  std::uint64_t n_samples, std::uint64_t seed) {
    if (protocol.empty())
        throw DimensionMismatch("sample_protocol: empty protocol");
    if (n_samples == 0)
        throw DimensionMismatch("sample_protocol: n_samples must be >= 1");
    for (const auto& obs : protocol)
        if (obs.dim() != state.dim())
            throw DimensionMismatch("sample_protocol: protocol dim mismatch");

    // The analytic chain is a tree over outcome prefixes; protocols are
    // short and dims small, so per-sample we walk the distributions
    // directly, projecting between steps.
    MeasurementRecord record;
    record.seed = seed;
    record.n_samples = n_samples;
    for (const auto& obs : protocol) record.outcome_dims.push_back(obs.dim());

    // Cache per-prefix distributions keyed by the outcome prefix; avoids
    // re-deriving projected states sample after sample.
    std::map<std::vector<std::size_t>, std::vector<double>> dist_cache;

    const std::uint64_t chunks = (n_samples + kSampleChunkSize - 1) / kSampleChunkSize;
    for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) {
        Xoshiro256StarStar rng(derive_stream_seed(seed, chunk));
        const std::uint64_t begin = chunk * kSampleChunkSize;
        const std::uint64_t end = std::min(begin + kSampleChunkSize, n_samples);
        for (std::uint64_t s = begin; s < end; ++s) {
            std::vector<std::size_t> outcome;
            outcome.reserve(protocol.size());
            for (std::size_t step = 0; step < protocol.size(); ++step) {
                auto it = dist_cache.find(outcome);
                if (it == dist_cache.end()) {
                    QuantumState current = state;
                    for (std::size_t t = 0; t < outcome.size(); ++t)
                        current = project(current, protocol[t], outcome[t]);
                    it = dist_cache
                             .emplace(outcome, born_probabilities(current, protocol[step]))
                             .first;
                }
                outcome.push_back(sample_index(it->second, rng.uniform()));
            }
            ++record.counts[outcome];
        }
    }
    return record;
}

OrderReport order_comparison(const QuantumState& state, const Observable& a, const Observable& b) {
    const std::size_t dim = state.dim();
    if (a.dim() != dim || b.dim() != dim)
        throw DimensionMismatch("order_comparison: dim mismatch");

    const std::vector<double> pa = born_probabilities(state, a);
    const std::vector<double> pb = born_probabilities(state, b);

    OrderReport report;
    report.a_first = RealMatrix(dim, dim);
    report.b_first = RealMatrix(dim, dim);
    double l1 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const double overlap_sq = std::norm(a.overlap(i, b, j));
            report.a_first(i, j) = pa[i] * overlap_sq;
            report.b_first(i, j) = pb[j] * overlap_sq;
            l1 += std::abs(report.a_first(i, j) - report.b_first(i, j));
        }
    }
    report.tv_distance = 0.5 * l1;
    report.order_sensitive = report.tv_distance > 1e-10;
    return report;
}

} // namespace qlabel
