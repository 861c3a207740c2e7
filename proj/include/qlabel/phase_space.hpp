// Periodic position/momentum grid, the discrete Wigner transform, and the
// explicit phase-space labeled-state construction with its trace check.

#pragma once

#include "qlabel/errors.hpp"
#include "qlabel/label_tables.hpp"
#include "qlabel/types.hpp"

#include <cstddef>
#include <vector>

namespace qlabel {

// n_points positions x_k = (k - n/2) dx and momenta p_m = (m - n/2) dp with
// dx dp = 2 pi hbar / n. xi_p is the unitary discrete Fourier transform of
// psi_x under these offsets.
class PhaseSpaceGrid {
public:
    // psi samples are L2-normalized against dx (sum |psi|^2 dx = 1 within
    // 1e-8) unless `normalize` is set.
    PhaseSpaceGrid(std::size_t n_points, double dx, double hbar, std::vector<cx> psi_x,
                   bool normalize = false);

    static PhaseSpaceGrid gaussian(std::size_t n_points, double dx, double hbar,
                                   double x_center = 0.0, double p_center = 0.0,
                                   double width = 1.0);
    static PhaseSpaceGrid two_peak(std::size_t n_points, double dx, double hbar,
                                   double separation, double width = 1.0);
    static PhaseSpaceGrid plane_wave(std::size_t n_points, double dx, double hbar,
                                     std::size_t momentum_index);

    std::size_t n_points() const { return psi_x_.size(); }
    double dx() const { return dx_; }
    double dp() const { return dp_; }
    double hbar() const { return hbar_; }
    double x_at(std::size_t k) const;
    double p_at(std::size_t m) const;
    const std::vector<cx>& psi_x() const { return psi_x_; }
    const std::vector<cx>& xi_p() const { return xi_p_; }
    double fourier_round_trip_residual() const { return round_trip_residual_; }

private:
    double dx_, dp_, hbar_;
    std::vector<cx> psi_x_, xi_p_;
    double round_trip_residual_ = 0.0;
};

struct WignerTable {
    RealMatrix values;          // values(k, m) = W(x_k, p_m)
    double max_imag_residue;    // asserted < 1e-9 before dropping
    double dx, dp;
};

// W(x,p) = (1/2 pi hbar) Int ds psi*(x+s/2) psi(x-s/2) e^{i p s / hbar},
// discretized with s on the grid step and the half-step samples taken from
// the band-limited interpolation of psi (so both marginals come out on the
// grid). Requires n_points >= 16.
WignerTable discrete_wigner(const PhaseSpaceGrid& grid);

struct PhaseSpaceLabelState {
    ZTable table;                 // moduli/phases of the explicit construction
    std::vector<cx> trace;        // momentum-traced x amplitudes, gauge undone
    double trace_residual;        // relative L2 distance from the psi ray
};

// Z(x_k, p_m) ~ psi(x_k) xi(p_m) e^{(i/hbar)(p_m x0 - x_k p0)} over the
// gauge-rephased bases |x>' = e^{i p0 x/hbar}|x>, |p>' = e^{-i p x0/hbar}|p>.
// Requires |psi(x0)| and |xi(p0)| > 1e-10.
PhaseSpaceLabelState phase_space_label_state(const PhaseSpaceGrid& grid, std::size_t x0_index,
                                             std::size_t p0_index);

// Observables for reinjecting a grid state into the z_table solver: the
// position basis (eigenvalues x_k) and momentum basis (eigenvalues p_m,
// eigenvectors e^{i p_m x_k / hbar}/sqrt(n)).
Observable position_observable(const PhaseSpaceGrid& grid);
Observable momentum_observable(const PhaseSpaceGrid& grid);
QuantumState grid_state(const PhaseSpaceGrid& grid);

} // namespace qlabel
