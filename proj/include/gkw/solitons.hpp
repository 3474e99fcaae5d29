#pragma once

#include <optional>

#include "gkw/grid.hpp"

namespace gkw {

/// (p, c, mu) of the traveling-wave problem
///   mu phi'''' - phi'' + c phi = phi^{p+1} / (p+1).
/// mu = 0 is the gKdV limit.
struct WaveParams {
    double p = 1.0;
    double c = 1.0;
    double mu = 1.0;

    void validate() const;
    friend bool operator==(const WaveParams&, const WaveParams&) = default;
};

/// Speed carried by the explicit solitary wave when mu = 1, and equally the
/// dispersion coefficient mu_p at which it travels with unit speed:
/// 4 (p+2)^2 / (p^2 + 4p + 8)^2.
double explicit_speed(double p);

/// Slower root of mu s^4 - s^2 + c = 0: the exponential decay rate of
/// localized solutions of the linear tail equation. Falls back to sqrt(c)
/// for mu = 0.
double linear_decay_rate(double c, double mu);

/// A sampled solitary-wave profile.
///
/// `decay_scale` is the coefficient b of the sech argument for closed-form
/// profiles; for numerically computed profiles it is the fitted exponential
/// tail rate.
struct SolitonProfile {
    WaveParams params;
    double amplitude = 0.0;
    double decay_scale = 0.0;
    Field field;
};

/// Grid on which a wave with these parameters decays below 1e-12 at the
/// boundary (using the slowest linear tail rate).
GridSpec default_grid(const WaveParams& params, std::size_t num_points = 1024);

/// Explicit solitary wave of the fifth-order problem for exponent p.
/// With mu = 1 (the default) the speed is c_p = explicit_speed(p); for
/// other mu the speed is c_p / mu, so mu = explicit_speed(p) gives c = 1.
SolitonProfile explicit_gkw_soliton(double p, const GridSpec& grid, double mu = 1.0);

/// gKdV soliton [(p+1)(p+2)c/2]^{1/p} sech^{2/p}(p sqrt(c) x / 2).
SolitonProfile gkdv_soliton(double c, double p, const GridSpec& grid);

enum class Normalization {
    to_mu_one,  ///< (c = 1, mu)  ->  (c = mu, mu = 1):  v(x) = mu^{1/p} u(sqrt(mu) x)
    to_c_one,   ///< (c, mu = 1)  ->  (c = 1, mu = c):   u(x) = c^{-1/p} v(x / sqrt(c))
};

/// Map a profile between the two equivalent normalizations. The samples are
/// carried over exactly onto the correspondingly stretched grid; pass
/// `target` to resample onto a chosen grid by trigonometric interpolation.
SolitonProfile rescale_normalization(const SolitonProfile& profile, Normalization direction,
                                     const std::optional<GridSpec>& target = std::nullopt);

/// mu phi'''' - phi'' + c phi - phi^{p+1}/(p+1), spectrally.
Field profile_residual(const Field& field, const WaveParams& params);

double residual_norm(const Field& field, const WaveParams& params);

/// Smallest residual_norm a double-precision profile can reach on its grid:
/// sampling round-off amplified by the symbol at the highest wavenumber.
double residual_floor(const Field& field, const WaveParams& params);

/// L2 residual of a closed-form profile a sech^nu(b x) (nu = 4/p for mu > 0,
/// 2/p for mu = 0) with the derivatives taken analytically at the grid
/// points. Unlike residual_norm it does not pick up the k^4 amplification
/// of sampling round-off on fine grids.
double closed_form_residual(const SolitonProfile& profile);

/// Least-squares slope of -log|f| over the outer quarter of the grid
/// (x in [L/2, L)), ignoring samples below `floor` times the peak.
double tail_decay_rate(const Field& f, double floor = 1e-11);

}  // namespace gkw
