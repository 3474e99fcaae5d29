#pragma once

#include <vector>

#include "gkw/solitons.hpp"

namespace gkw {

/// L v = mu v'''' - v'' + c v - phi^p v around a profile phi.
///
/// Immutable after assembly. The action is matrix-free (spectral
/// differentiation plus a diagonal potential); dense restrictions to the
/// even and odd subspaces are built on demand by the spectral routines.
class LinearizedOperator {
public:
    /// Linearization around `profile`; rejects profiles whose residual
    /// exceeds 1e-6 or whose potential has not decayed at the boundary.
    static LinearizedOperator assemble(const SolitonProfile& profile);

    /// Linearization around an arbitrary positive field, no residual check
    /// (Newton iterates).
    static LinearizedOperator around(const Field& phi, const WaveParams& params);

    /// mu d^4 - d^2 + c with no potential: its spectrum is the symbol on
    /// the grid wavenumbers, bottom value c.
    static LinearizedOperator potential_free(const WaveParams& params, const GridSpec& grid);

    const WaveParams& params() const noexcept { return params_; }
    const GridSpec& grid() const noexcept { return profile_.grid(); }
    const Field& profile() const noexcept { return profile_; }
    const Field& potential() const noexcept { return potential_; }

    double symbol(double k) const noexcept {
        return params_.mu * k * k * k * k + k * k + params_.c;
    }

    Field apply(const Field& v) const;

private:
    LinearizedOperator(WaveParams params, Field profile, Field potential)
        : params_(params), profile_(std::move(profile)), potential_(std::move(potential)) {}

    WaveParams params_;
    Field profile_;
    Field potential_;
};

struct SpectrumReport {
    std::vector<double> eigenvalues;     ///< ascending
    std::vector<Field> eigenfunctions;   ///< L2-normalized
    std::vector<bool> even;              ///< parity of each eigenfunction
    std::vector<double> residual_norms;  ///< ||L chi - lambda chi||
    int negative_count = 0;              ///< over the whole discrete spectrum
    double kernel_eigenvalue = 0.0;      ///< eigenvalue closest to zero
    double kernel_alignment = 0.0;       ///< |cos| between its eigenfunction and phi'
    bool kernel_found = false;           ///< |kernel_eigenvalue| < 1e-5 * essential_floor
    double essential_floor = 0.0;        ///< bottom of the potential-free spectrum
};

/// The k >= 3 smallest eigenpairs of the discretized operator, computed
/// blockwise on the even and odd subspaces.
SpectrumReport bottom_spectrum(const LinearizedOperator& op, int k);

/// Element of L^{-1}(rhs) for even rhs, solved on the even subspace where
/// the (odd) translation kernel is absent.
Field solve_constrained(const LinearizedOperator& op, const Field& rhs);

// ---- Fourier-side sufficient condition ----------------------------------

/// Fourier transform of sech^nu:
///   2^{nu-1} / Gamma(nu) * |Gamma(nu/2 + i omega/2)|^2.
double sech_power_transform(double nu, double omega);

/// Closed-form transform of sech^4(x/2): (2^4 pi / 3!) omega (omega^2+1) / sinh(pi omega).
double sech4_half_transform(double omega);

/// Second derivative of log of the transform of sech^4(x/2):
///   -1/omega^2 + 2(1 - omega^2)/(1 + omega^2)^2 + pi^2 / sinh^2(pi omega).
/// Uses the two-term series below |omega| = 1e-4.
double sech4_log_curvature(double omega);

struct AlbertReport {
    bool positivity_ok = false;
    bool logconcavity_ok = false;
    /// Closest approach to violation over the samples:
    /// min( transform(omega) / transform(0), -curvature(omega) ).
    double worst_margin = 0.0;
    double min_transform_ratio = 0.0;
    double max_curvature = 0.0;
    int samples = 0;
};

/// Positivity of the transform of sech^{4/p} and log-concavity of the
/// transform of phi^p (a rescaled sech^4) on log-spaced omega in
/// [1e-3, omega_max].
AlbertReport albert_criterion(double p, double omega_max, int samples);

/// log |Gamma(x + i y)| for x > 0.
double log_abs_gamma(double x, double y);

}  // namespace gkw
