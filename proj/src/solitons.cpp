#include "gkw/solitons.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace gkw {

namespace {

constexpr double kBoundaryTolerance = 1e-10;

void check_boundary_decay(const Field& f, double amplitude) {
    const double edge = std::abs(f[0]);
    if (edge > kBoundaryTolerance * amplitude) {
        std::ostringstream msg;
        msg << "grid too small: boundary value " << edge << " exceeds 1e-10 x amplitude "
            << amplitude << " (half_length " << f.grid().half_length() << ")";
        throw InvalidArgument(msg.str());
    }
}

double sech(double x) { return 1.0 / std::cosh(x); }

}  // namespace

void WaveParams::validate() const {
    require(std::isfinite(p) && p >= 1.0, "exponent p must be >= 1");
    require(std::isfinite(c) && c > 0.0, "speed c must be positive");
    require(std::isfinite(mu) && mu >= 0.0, "dispersion mu must be non-negative");
}

double explicit_speed(double p) {
    const double q = p * p + 4.0 * p + 8.0;
    return 4.0 * (p + 2.0) * (p + 2.0) / (q * q);
}

double linear_decay_rate(double c, double mu) {
    require(c > 0.0 && mu >= 0.0, "linear_decay_rate needs c > 0 and mu >= 0");
    if (mu == 0.0) return std::sqrt(c);
    const double disc = 1.0 - 4.0 * mu * c;
    if (disc <= 0.0) {
        // Complex roots: oscillatory tail with envelope rate Re(s).
        const double modulus = std::pow(c / mu, 0.25);
        const double angle = 0.5 * std::atan2(std::sqrt(-disc), 1.0);
        return modulus * std::cos(angle);
    }
    // s^2 = 2c / (1 + sqrt(disc)) avoids cancellation for small mu.
    return std::sqrt(2.0 * c / (1.0 + std::sqrt(disc)));
}

GridSpec default_grid(const WaveParams& params, std::size_t num_points) {
    params.validate();
    return GridSpec(decay_half_length(linear_decay_rate(params.c, params.mu)), num_points);
}

SolitonProfile explicit_gkw_soliton(double p, const GridSpec& grid, double mu) {
    require(std::isfinite(p) && p >= 1.0, "exponent p must be >= 1");
    require(std::isfinite(mu) && mu > 0.0, "explicit solitary waves need mu > 0");
    const double c = explicit_speed(p) / mu;
    const double amplitude =
        std::pow((p + 1.0) * (p + 4.0) * (3.0 * p + 4.0) * c / (8.0 * (p + 2.0)), 1.0 / p);
    const double b = p * std::sqrt((p * p + 4.0 * p + 8.0) * c) / (4.0 * (p + 2.0));
    const double power = 4.0 / p;
    Field f = Field::sample(grid, [&](double x) { return amplitude * std::pow(sech(b * x), power); });
    check_boundary_decay(f, amplitude);
    return {{p, c, mu}, amplitude, b, std::move(f)};
}

SolitonProfile gkdv_soliton(double c, double p, const GridSpec& grid) {
    require(std::isfinite(p) && p >= 1.0, "exponent p must be >= 1");
    require(std::isfinite(c) && c > 0.0, "speed c must be positive");
    const double amplitude = std::pow((p + 1.0) * (p + 2.0) * c / 2.0, 1.0 / p);
    const double b = p * std::sqrt(c) / 2.0;
    const double power = 2.0 / p;
    Field f = Field::sample(grid, [&](double x) { return amplitude * std::pow(sech(b * x), power); });
    check_boundary_decay(f, amplitude);
    return {{p, c, 0.0}, amplitude, b, std::move(f)};
}

SolitonProfile rescale_normalization(const SolitonProfile& profile, Normalization direction,
                                     const std::optional<GridSpec>& target) {
    const WaveParams& in = profile.params;
    in.validate();
    double amplitude_factor = 0.0;
    double stretch = 0.0;  // new x = stretch * old x
    WaveParams out = in;

    if (direction == Normalization::to_mu_one) {
        require(in.mu > 0.0, "rescaling needs mu > 0");
        require(std::abs(in.c - 1.0) < 1e-12, "to_mu_one expects a profile normalized to c = 1");
        require(in.mu != 1.0, "profile is already normalized to mu = 1");
        amplitude_factor = std::pow(in.mu, 1.0 / in.p);
        stretch = 1.0 / std::sqrt(in.mu);
        out = {in.p, in.mu, 1.0};
    } else {
        require(std::abs(in.mu - 1.0) < 1e-12, "to_c_one expects a profile normalized to mu = 1");
        require(in.c != 1.0, "profile is already normalized to c = 1");
        amplitude_factor = std::pow(in.c, -1.0 / in.p);
        stretch = std::sqrt(in.c);
        out = {in.p, 1.0, in.c};
    }

    std::vector<double> values(profile.field.data());
    for (double& v : values) v *= amplitude_factor;
    Field f(profile.field.grid().scaled(stretch), std::move(values));
    if (target) f = resample(f, *target);
    return {out, profile.amplitude * amplitude_factor, profile.decay_scale / stretch, std::move(f)};
}

Field profile_residual(const Field& field, const WaveParams& params) {
    require(field.is_finite(), "profile_residual: field has non-finite samples");
    const double mu = params.mu;
    const double c = params.c;
    Field linear = apply_multiplier(field, [=](double k) { return mu * k * k * k * k + k * k + c; });
    Field nonlinear = field.pow(params.p + 1.0);
    nonlinear *= 1.0 / (params.p + 1.0);
    return linear - nonlinear;
}

double residual_norm(const Field& field, const WaveParams& params) {
    return sobolev_norm(profile_residual(field, params), 0);
}

double residual_floor(const Field& field, const WaveParams& params) {
    const GridSpec& g = field.grid();
    const double k = std::numbers::pi * static_cast<double>(g.num_points() / 2) / g.half_length();
    const double symbol = params.mu * std::pow(k, 4) + k * k + params.c;
    return 2e2 * std::numeric_limits<double>::epsilon() * field.max_abs() * symbol * std::sqrt(2.0 * g.half_length());
}

double closed_form_residual(const SolitonProfile& profile) {
    const WaveParams& prm = profile.params;
    prm.validate();
    const double a = profile.amplitude;
    const double b = profile.decay_scale;
    const double nu = (prm.mu > 0.0 ? 4.0 : 2.0) / prm.p;
    // (sech^m)'' = m b^2 (m sech^m - (m+1) sech^{m+2})
    const auto d2 = [b](double m, double s) {
        return m * b * b * (m * std::pow(s, m) - (m + 1.0) * std::pow(s, m + 2.0));
    };
    const auto d4 = [&](double m, double s) {
        return m * b * b * (m * d2(m, s) - (m + 1.0) * d2(m + 2.0, s));
    };
    const Field r = Field::sample(profile.field.grid(), [&](double x) {
        const double s = sech(b * x);
        const double y = std::pow(s, nu);
        return a * (prm.mu * d4(nu, s) - d2(nu, s) + prm.c * y) - std::pow(a * y, prm.p + 1.0) / (prm.p + 1.0);
    });
    return sobolev_norm(r, 0);
}

double tail_decay_rate(const Field& f, double floor) {
    const GridSpec& g = f.grid();
    const double cutoff = floor * f.max_abs();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double x = g.x(j);
        if (x < 0.5 * g.half_length()) continue;
        const double a = std::abs(f[j]);
        if (a <= cutoff) continue;
        const double y = std::log(a);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 3) throw ComputationError("tail_decay_rate: too few samples above the noise floor");
    const double n = static_cast<double>(count);
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return -slope;
}

}  // namespace gkw
