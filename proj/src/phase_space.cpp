#include "qlabel/phase_space.hpp"

#include "qlabel/kernels.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace qlabel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double offset(std::size_t n) { return static_cast<double>(n) / 2.0; }

} // namespace

PhaseSpaceGrid::PhaseSpaceGrid(std::size_t n_points, double dx, double hbar,
                               std::vector<cx> psi_x, bool normalize)
    : dx_(dx), hbar_(hbar), psi_x_(std::move(psi_x)) {
    if (n_points < 2 || !std::has_single_bit(n_points))
        throw GridTooSmall("PhaseSpaceGrid: n_points must be a power of two >= 2");
    if (n_points > 4096)
        throw GridTooSmall("PhaseSpaceGrid: n_points > 4096 not supported");
    if (psi_x_.size() != n_points)
        throw DimensionMismatch("PhaseSpaceGrid: psi length != n_points");
    if (!(dx > 0.0) || !(hbar > 0.0))
        throw DegenerateGeometry("PhaseSpaceGrid: dx and hbar must be positive");
    dp_ = kTwoPi * hbar_ / (static_cast<double>(n_points) * dx_);

    const double n2 = kernels::norm_sq(psi_x_.data(), n_points) * dx_;
    if (normalize) {
        if (n2 < 1e-300)
            throw NotNormalized("PhaseSpaceGrid: zero wavefunction", 0.0);
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& a : psi_x_) a *= inv;
    } else if (std::abs(n2 - 1.0) > 1e-8) {
        throw NotNormalized("PhaseSpaceGrid: sum |psi|^2 dx = " + std::to_string(n2),
                            std::sqrt(n2));
    }

    // Unitary DFT with centered offsets:
    //   xi(p_m) = dx / sqrt(2 pi hbar) * sum_k psi(x_k) e^{-i p_m x_k / hbar}
    const std::size_t n = n_points;
    xi_p_.assign(n, cx{0.0, 0.0});
    const double fwd = dx_ / std::sqrt(kTwoPi * hbar_);
    for (std::size_t m = 0; m < n; ++m) {
        cx acc{0.0, 0.0};
        const double pm = p_at(m);
        for (std::size_t k = 0; k < n; ++k)
            acc += psi_x_[k] * std::polar(1.0, -pm * x_at(k) / hbar_);
        xi_p_[m] = fwd * acc;
    }

    // Round-trip residual of the inverse transform (type invariant).
    const double bwd = dp_ / std::sqrt(kTwoPi * hbar_);
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        cx acc{0.0, 0.0};
        const double xk = x_at(k);
        for (std::size_t m = 0; m < n; ++m)
            acc += xi_p_[m] * std::polar(1.0, p_at(m) * xk / hbar_);
        worst = std::max(worst, std::abs(bwd * acc - psi_x_[k]));
    }
    round_trip_residual_ = worst;
}

double PhaseSpaceGrid::x_at(std::size_t k) const {
    return (static_cast<double>(k) - offset(psi_x_.size())) * dx_;
}

double PhaseSpaceGrid::p_at(std::size_t m) const {
    return (static_cast<double>(m) - offset(psi_x_.size())) * dp_;
}

PhaseSpaceGrid PhaseSpaceGrid::gaussian(std::size_t n_points, double dx, double hbar,
                                        double x_center, double p_center, double width) {
    if (!(width > 0.0))
        throw DegenerateGeometry("gaussian: width must be positive");
    std::vector<cx> psi(n_points);
    const double off = offset(n_points);
    for (std::size_t k = 0; k < n_points; ++k) {
        const double x = (static_cast<double>(k) - off) * dx;
        const double u = (x - x_center) / width;
        psi[k] = std::polar(std::exp(-0.5 * u * u), p_center * x / hbar);
    }
    return PhaseSpaceGrid(n_points, dx, hbar, std::move(psi), true);
}

PhaseSpaceGrid PhaseSpaceGrid::two_peak(std::size_t n_points, double dx, double hbar,
                                        double separation, double width) {
    if (!(width > 0.0) || !(separation > 0.0))
        throw DegenerateGeometry("two_peak: separation and width must be positive");
    std::vector<cx> psi(n_points);
    const double off = offset(n_points);
    const double a = separation / 2.0;
    for (std::size_t k = 0; k < n_points; ++k) {
        const double x = (static_cast<double>(k) - off) * dx;
        const double l = (x - a) / width;
        const double r = (x + a) / width;
        psi[k] = cx{std::exp(-0.5 * l * l) + std::exp(-0.5 * r * r), 0.0};
    }
    return PhaseSpaceGrid(n_points, dx, hbar, std::move(psi), true);
}

PhaseSpaceGrid PhaseSpaceGrid::plane_wave(std::size_t n_points, double dx, double hbar,
                                          std::size_t momentum_index) {
    if (momentum_index >= n_points)
        throw DimensionMismatch("plane_wave: momentum index out of range");
    std::vector<cx> psi(n_points);
    const double off = offset(n_points);
    const double dp = kTwoPi * hbar / (static_cast<double>(n_points) * dx);
    const double pm = (static_cast<double>(momentum_index) - off) * dp;
    for (std::size_t k = 0; k < n_points; ++k) {
        const double x = (static_cast<double>(k) - off) * dx;
        psi[k] = std::polar(1.0, pm * x / hbar);
    }
    return PhaseSpaceGrid(n_points, dx, hbar, std::move(psi), true);
}

WignerTable discrete_wigner(const PhaseSpaceGrid& grid) {
    const std::size_t n = grid.n_points();
    if (n < 16)
        throw GridTooSmall("discrete_wigner: n_points < 16");

    // Band-limited interpolation of psi onto the half-step grid (2n points):
    // psi2[t] = psi(t dx/2 - n dx/2). Even t reproduces the input samples.
    const std::vector<cx>& psi = grid.psi_x();
    std::vector<cx> spectrum(n, cx{0.0, 0.0});
    for (std::size_t mu = 0; mu < n; ++mu) {
        cx acc{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k)
            acc += psi[k] *
                   std::polar(1.0, -kTwoPi * static_cast<double>(mu * k % n) / static_cast<double>(n));
        spectrum[mu] = acc;
    }
    const std::size_t n2 = 2 * n;
    std::vector<cx> psi_half(n2, cx{0.0, 0.0});
    for (std::size_t t = 0; t < n2; ++t) {
        cx acc{0.0, 0.0};
        for (std::size_t mu = 0; mu < n; ++mu) {
            // centered frequency
            const double f = mu < n / 2 ? static_cast<double>(mu)
                                        : static_cast<double>(mu) - static_cast<double>(n);
            acc += spectrum[mu] *
                   std::polar(1.0, std::numbers::pi * f * static_cast<double>(t) /
                                       static_cast<double>(n));
        }
        psi_half[t] = acc / static_cast<double>(n);
    }

    // Twiddle rows: tw(m, jj) = e^{2 pi i (j (m - n/2)) / n}, j = jj - n/2.
    std::vector<cx> unit_roots(n);
    for (std::size_t t = 0; t < n; ++t)
        unit_roots[t] = std::polar(1.0, kTwoPi * static_cast<double>(t) / static_cast<double>(n));
    ComplexMatrix twiddle(n, n);
    const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(n) / 2;
    for (std::size_t m = 0; m < n; ++m) {
        const std::ptrdiff_t mm = static_cast<std::ptrdiff_t>(m) - half;
        for (std::size_t jj = 0; jj < n; ++jj) {
            const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(jj) - half;
            std::ptrdiff_t e = (j * mm) % static_cast<std::ptrdiff_t>(n);
            if (e < 0) e += static_cast<std::ptrdiff_t>(n);
            twiddle(m, jj) = unit_roots[static_cast<std::size_t>(e)];
        }
    }

    WignerTable out;
    out.values = RealMatrix(n, n);
    out.max_imag_residue = 0.0;
    out.dx = grid.dx();
    out.dp = grid.dp();
    const double factor = grid.dx() / (kTwoPi * grid.hbar());

    std::vector<cx> corr(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t jj = 0; jj < n; ++jj) {
            const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(jj) - half;
            const std::size_t plus =
                static_cast<std::size_t>((2 * static_cast<std::ptrdiff_t>(k) + j +
                                          2 * static_cast<std::ptrdiff_t>(n2)) %
                                         static_cast<std::ptrdiff_t>(n2));
            const std::size_t minus =
                static_cast<std::size_t>((2 * static_cast<std::ptrdiff_t>(k) - j +
                                          2 * static_cast<std::ptrdiff_t>(n2)) %
                                         static_cast<std::ptrdiff_t>(n2));
            corr[jj] = std::conj(psi_half[plus]) * psi_half[minus];
        }
        for (std::size_t m = 0; m < n; ++m) {
            const cx w = kernels::dot_u(corr.data(), twiddle.row(m), n);
            out.values(k, m) = factor * w.real();
            out.max_imag_residue = std::max(out.max_imag_residue, std::abs(factor * w.imag()));
        }
    }

    if (out.max_imag_residue >= 1e-9)
        throw Error("discrete_wigner: imaginary residue " +
                    std::to_string(out.max_imag_residue) + " exceeds 1e-9");
    return out;
}

PhaseSpaceLabelState phase_space_label_state(const PhaseSpaceGrid& grid, std::size_t x0_index,
                                             std::size_t p0_index) {
    const std::size_t n = grid.n_points();
    if (x0_index >= n || p0_index >= n)
        throw DimensionMismatch("phase_space_label_state: reference index out of range");
    const std::vector<cx>& psi = grid.psi_x();
    const std::vector<cx>& xi = grid.xi_p();
    if (std::abs(psi[x0_index]) <= 1e-10 || std::abs(xi[p0_index]) <= 1e-10)
        throw ZeroReferenceAmplitude(
            "phase_space_label_state: |psi(x0)| or |xi(p0)| below 1e-10");

    const double x0 = grid.x_at(x0_index);
    const double p0 = grid.p_at(p0_index);
    const double hbar = grid.hbar();

    const double norm_psi = std::sqrt(kernels::norm_sq(psi.data(), n));
    const double norm_xi = std::sqrt(kernels::norm_sq(xi.data(), n));
    const double scale = 1.0 / (norm_psi * norm_xi); // sum |Z|^2 = 1

    PhaseSpaceLabelState out;
    out.table.moduli = RealMatrix(n, n);
    out.table.phases = RealMatrix(n, n);
    out.table.gauge_a.resize(n);
    out.table.gauge_b.resize(n);
    out.table.converged = true;

    for (std::size_t k = 0; k < n; ++k) {
        const double xk = grid.x_at(k);
        for (std::size_t m = 0; m < n; ++m) {
            const double pm = grid.p_at(m);
            const cx z = scale * psi[k] * xi[m] * std::polar(1.0, (pm * x0 - xk * p0) / hbar);
            out.table.moduli(k, m) = std::abs(z);
            out.table.phases(k, m) = std::abs(z) > 0.0 ? std::arg(z) : 0.0;
        }
        out.table.gauge_a[k] = p0 * grid.x_at(k) / hbar;  // |x>' = e^{i p0 x/hbar} |x>
    }
    for (std::size_t m = 0; m < n; ++m)
        out.table.gauge_b[m] = -grid.p_at(m) * x0 / hbar; // |p>' = e^{-i p x0/hbar} |p>

    // Trace over the momentum component, mapped back to the unprimed basis.
    out.trace.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        cx acc{0.0, 0.0};
        for (std::size_t m = 0; m < n; ++m) acc += out.table.z(k, m);
        out.trace[k] = acc * std::polar(1.0, grid.x_at(k) * p0 / hbar);
    }

    // Proportionality against the psi ray: relative L2 residual after a
    // least-squares complex factor.
    cx overlap = kernels::dot_conj(psi.data(), out.trace.data(), n);
    const double psi2 = kernels::norm_sq(psi.data(), n);
    const cx c = overlap / psi2;
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        num += std::norm(out.trace[k] - c * psi[k]);
        den += std::norm(out.trace[k]);
    }
    out.trace_residual = den > 0.0 ? std::sqrt(num / den) : 1.0;
    out.table.residual = out.trace_residual;
    return out;
}

Observable position_observable(const PhaseSpaceGrid& grid) {
    const std::size_t n = grid.n_points();
    ComplexMatrix v(n, n);
    std::vector<double> ev(n);
    for (std::size_t k = 0; k < n; ++k) {
        v(k, k) = cx{1.0, 0.0};
        ev[k] = grid.x_at(k);
    }
    return Observable::from_eigensystem(std::move(ev), std::move(v));
}

Observable momentum_observable(const PhaseSpaceGrid& grid) {
    const std::size_t n = grid.n_points();
    const double r = 1.0 / std::sqrt(static_cast<double>(n));
    ComplexMatrix v(n, n);
    std::vector<double> ev(n);
    for (std::size_t m = 0; m < n; ++m) {
        ev[m] = grid.p_at(m);
        for (std::size_t k = 0; k < n; ++k)
            v(k, m) = std::polar(r, grid.p_at(m) * grid.x_at(k) / grid.hbar());
    }
    return Observable::from_eigensystem(std::move(ev), std::move(v));
}

QuantumState grid_state(const PhaseSpaceGrid& grid) {
    std::vector<cx> amps(grid.n_points());
    const double root_dx = std::sqrt(grid.dx());
    for (std::size_t k = 0; k < grid.n_points(); ++k) amps[k] = grid.psi_x()[k] * root_dx;
    return QuantumState(std::move(amps), true);
}

} // namespace qlabel
