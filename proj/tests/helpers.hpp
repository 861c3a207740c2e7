// Shared generators and comparison helpers for the unit suites.

#pragma once

#include "qlabel/hilbert.hpp"
#include "qlabel/rng.hpp"
#include "qlabel/types.hpp"

#include <cmath>
#include <vector>

namespace test_helpers {

using qlabel::cx;
using qlabel::ComplexMatrix;

inline qlabel::Xoshiro256StarStar make_rng(std::uint64_t seed) {
    return qlabel::Xoshiro256StarStar(seed);
}

inline cx random_unit_disc(qlabel::Xoshiro256StarStar& rng) {
    return {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
}

inline std::vector<cx> random_state_vector(std::size_t dim, qlabel::Xoshiro256StarStar& rng) {
    std::vector<cx> v(dim);
    double n2 = 0.0;
    for (auto& a : v) {
        a = random_unit_disc(rng);
        n2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : v) a *= inv;
    return v;
}

inline qlabel::QuantumState random_state(std::size_t dim, qlabel::Xoshiro256StarStar& rng) {
    return qlabel::QuantumState(random_state_vector(dim, rng), true);
}

inline ComplexMatrix random_hermitian(std::size_t dim, qlabel::Xoshiro256StarStar& rng) {
    ComplexMatrix h(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        h(i, i) = cx{2.0 * rng.uniform() - 1.0, 0.0};
        for (std::size_t j = i + 1; j < dim; ++j) {
            const cx v = random_unit_disc(rng);
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

// Random Hermitian observable; regenerates on the (measure-zero) chance of
// a near-degenerate spectrum.
inline qlabel::Observable random_observable(std::size_t dim, qlabel::Xoshiro256StarStar& rng) {
    for (;;) {
        try {
            return qlabel::Observable::from_matrix(random_hermitian(dim, rng));
        } catch (const qlabel::DegenerateSpectrum&) {
        }
    }
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

} // namespace test_helpers
