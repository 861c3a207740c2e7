#include "qlabel/label_tables.hpp"

#include "qlabel/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qlabel {

LabelSpace consistent_set(const QuantumState& state, const std::vector<Observable>& observables,
                          double zero_overlap_threshold) {
    if (observables.size() < 2)
        throw DimensionMismatch("consistent_set: need at least two observables");
    const std::size_t dim = state.dim();
    for (const auto& obs : observables)
        if (obs.dim() != dim)
            throw DimensionMismatch("consistent_set: observable dim mismatch");

    const std::size_t n_obs = observables.size();

    // Pairwise overlap admissibility, precomputed per observable pair.
    std::vector<std::vector<std::vector<bool>>> admissible(n_obs,
        std::vector<std::vector<bool>>(n_obs));
    for (std::size_t a = 0; a < n_obs; ++a) {
        for (std::size_t b = a + 1; b < n_obs; ++b) {
            auto& table = admissible[a][b];
            table.assign(dim, std::vector<bool>(dim, false));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    table[i][j] =
                        std::abs(observables[a].overlap(i, observables[b], j)) >=
                        zero_overlap_threshold;
        }
    }

    std::vector<std::vector<double>> probs(n_obs);
    for (std::size_t a = 0; a < n_obs; ++a) probs[a] = born_probabilities(state, observables[a]);

    LabelSpace space;
    space.observables = observables;
    space.zero_overlap_threshold = zero_overlap_threshold;

    std::vector<std::size_t> tuple(n_obs, 0);
    for (;;) {
        bool ok = true;
        for (std::size_t a = 0; a < n_obs && ok; ++a)
            for (std::size_t b = a + 1; b < n_obs && ok; ++b)
                ok = admissible[a][b][tuple[a]][tuple[b]];
        if (ok) {
            bool zero = false;
            for (std::size_t a = 0; a < n_obs; ++a)
                if (probs[a][tuple[a]] < zero_overlap_threshold) zero = true;
            space.tuples.push_back(tuple);
            space.zero_weight.push_back(zero);
        }
        // odometer increment
        std::size_t pos = n_obs;
        while (pos > 0) {
            --pos;
            if (++tuple[pos] < dim) break;
            tuple[pos] = 0;
            if (pos == 0) {
                if (space.tuples.empty())
                    throw EmptyLabelSpace("consistent_set: no consistent joint values");
                return space;
            }
        }
    }
}

WeightTable weight_table(const QuantumState& state, const Observable& basis_a,
                         const Observable& basis_b) {
    const std::size_t dim = state.dim();
    if (basis_a.dim() != dim || basis_b.dim() != dim)
        throw DimensionMismatch("weight_table: dim mismatch");

    const std::vector<cx> za = amplitudes(state, basis_a);
    const std::vector<cx> zb = amplitudes(state, basis_b);

    WeightTable table;
    table.values = RealMatrix(dim, dim);
    table.basis_a = basis_a;
    table.basis_b = basis_b;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const cx ov = basis_a.overlap(i, basis_b, j);
            const cx term = std::conj(za[i]) * zb[j] * ov;
            const cx value = 0.5 * (term + std::conj(term));
            table.max_imag_residue = std::max(table.max_imag_residue, std::abs(value.imag()));
            table.values(i, j) = value.real();
        }
    }
    return table;
}

cx ZTable::z(std::size_t i, std::size_t j) const {
    return std::polar(moduli(i, j), phases(i, j));
}

namespace {

struct PhaseObjective {
    const RealMatrix& moduli;
    const std::vector<double>& target_a;
    const std::vector<double>& target_b;

    // F(phi) = sum_i (|R_i| - tA_i)^2 + sum_j (|C_j| - tB_j)^2 with
    // R_i, C_j the row/column sums of Z = moduli .* exp(i phi).
    double value_and_grad(const std::vector<double>& phases, std::vector<double>* grad) const {
        const std::size_t n = moduli.rows();
        std::vector<cx> z(n * n);
        std::vector<cx> row(n, cx{0.0, 0.0}), col(n, cx{0.0, 0.0});
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t idx = i * n + j;
                const double m = moduli(i, j);
                const cx v = m == 0.0 ? cx{0.0, 0.0} : std::polar(m, phases[idx]);
                z[idx] = v;
                row[i] += v;
                col[j] += v;
            }
        }
        double f = 0.0;
        std::vector<double> ur(n), uc(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double ar = std::abs(row[i]);
            f += (ar - target_a[i]) * (ar - target_a[i]);
            ur[i] = ar > 1e-15 ? (ar - target_a[i]) / ar : 0.0;
        }
        for (std::size_t j = 0; j < n; ++j) {
            const double ac = std::abs(col[j]);
            f += (ac - target_b[j]) * (ac - target_b[j]);
            uc[j] = ac > 1e-15 ? (ac - target_b[j]) / ac : 0.0;
        }
        if (grad) {
            grad->assign(n * n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    const std::size_t idx = i * n + j;
                    if (moduli(i, j) == 0.0) continue;
                    const cx v = z[idx];
                    (*grad)[idx] = -2.0 * (ur[i] * (v * std::conj(row[i])).imag() +
                                           uc[j] * (v * std::conj(col[j])).imag());
                }
            }
        }
        return f;
    }
};

double wrap_angle(double a) {
    while (a > std::numbers::pi) a -= 2.0 * std::numbers::pi;
    while (a < -std::numbers::pi) a += 2.0 * std::numbers::pi;
    return a;
}

struct DescentResult {
    std::vector<double> phases;
    double objective;
    int iterations;
};

DescentResult descend(const PhaseObjective& obj, std::vector<double> phases, int max_iterations,
                      double tolerance) {
    std::vector<double> grad, trial;
    double f = obj.value_and_grad(phases, &grad);
    double step = 0.25;
    const double f_stop = tolerance * tolerance;
    int it = 0;
    for (; it < max_iterations && f > f_stop; ++it) {
        double g2 = 0.0;
        for (double g : grad) g2 += g * g;
        if (g2 < 1e-30) break; // stationary (possibly a saddle; restarts handle it)

        // Backtracking line search with a mild growth on success.
        bool moved = false;
        for (int half = 0; half < 60; ++half) {
            trial.resize(phases.size());
            for (std::size_t k = 0; k < phases.size(); ++k)
                trial[k] = wrap_angle(phases[k] - step * grad[k]);
            const double f_trial = obj.value_and_grad(trial, nullptr);
            if (f_trial <= f - 1e-4 * step * g2) {
                phases.swap(trial);
                f = obj.value_and_grad(phases, &grad);
                step = std::min(step * 1.5, 4.0);
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }
    return {std::move(phases), f, it};
}

} // namespace

ZTable z_table(const QuantumState& state, const Observable& basis_a, const Observable& basis_b,
               const SolverParams& params) {
    const std::size_t n = state.dim();
    if (basis_a.dim() != n || basis_b.dim() != n)
        throw DimensionMismatch("z_table: dim mismatch");

    const std::vector<cx> za = amplitudes(state, basis_a);
    const std::vector<cx> zb = amplitudes(state, basis_b);

    ZTable table;
    table.moduli = RealMatrix(n, n);
    ComplexMatrix overlaps(n, n);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const cx ov = basis_a.overlap(i, basis_b, j);
            overlaps(i, j) = ov;
            double m = std::abs(ov) * inv_sqrt_n;
            if (m < kZeroOverlapThreshold) m = 0.0; // consistency: Z = 0 on zero overlaps
            table.moduli(i, j) = m;
        }
    }

    std::vector<double> target_a(n), target_b(n);
    for (std::size_t i = 0; i < n; ++i) target_a[i] = std::abs(za[i]);
    for (std::size_t j = 0; j < n; ++j) target_b[j] = std::abs(zb[j]);

    const PhaseObjective obj{table.moduli, target_a, target_b};

    // Restart 0 starts from the phases of z^A_i* z^B_j <a_i|b_j>; later
    // restarts are uniform random with seeds derived from params.seed.
    std::vector<double> init(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            init[i * n + j] = std::arg(std::conj(za[i]) * zb[j] * overlaps(i, j));

    DescentResult best{{}, std::numeric_limits<double>::infinity(), 0};
    int best_restart = 0;
    const int restarts = std::max(params.restarts, 1);
    for (int r = 0; r < restarts; ++r) {
        std::vector<double> start;
        if (r == 0) {
            start = init;
        } else {
            Xoshiro256StarStar rng(derive_stream_seed(params.seed, static_cast<std::uint64_t>(r)));
            start.resize(n * n);
            for (auto& p : start) p = (2.0 * rng.uniform() - 1.0) * std::numbers::pi;
        }
        DescentResult res = descend(obj, std::move(start), params.max_iterations, params.tolerance);
        if (res.objective < best.objective) {
            best = std::move(res);
            best_restart = r;
        }
        if (best.objective <= params.tolerance * params.tolerance) break;
    }

    table.phases = RealMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table.phases(i, j) = table.moduli(i, j) == 0.0 ? 0.0 : best.phases[i * n + j];

    table.residual = std::sqrt(best.objective);
    table.converged = table.residual <= params.tolerance;
    table.best_restart = best_restart;
    table.iterations = best.iterations;

    table.gauge_a.assign(n, 0.0);
    table.gauge_b.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        cx row{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) row += table.z(i, j);
        if (std::abs(row) > 1e-15 && std::abs(za[i]) > 1e-15)
            table.gauge_a[i] = wrap_angle(std::arg(row) - std::arg(za[i]));
    }
    for (std::size_t j = 0; j < n; ++j) {
        cx col{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) col += table.z(i, j);
        if (std::abs(col) > 1e-15 && std::abs(zb[j]) > 1e-15)
            table.gauge_b[j] = wrap_angle(std::arg(col) - std::arg(zb[j]));
    }
    return table;
}

} // namespace qlabel
