#include "gkw/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fft.hpp"
#include "gkw/continuation.hpp"
#include "gkw/groundstate.hpp"
#include "gkw/linop.hpp"

namespace gkw {

using cplx = std::complex<double>;

namespace {

int integer_exponent(double p) {
    require(p >= 1.0 && p <= 8.0 && p == std::floor(p), "evolution needs an integer exponent 1 <= p <= 8");
    return static_cast<int>(p);
}

double int_pow(double v, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= v;
    return r;
}

std::size_t padded_size(std::size_t n, int p) {
    std::size_t m = (static_cast<std::size_t>(p + 2) * n + 1) / 2;
    return m + (m % 2);
}

}  // namespace

ConservedQuantities conserved(const Field& u, const WaveParams& params) {
    params.validate();
    const int p = integer_exponent(params.p);
    const Field d1 = spectral_derivative(u, 1);
    const Field d2 = spectral_derivative(u, 2);
    double potential = 0.0;
    for (double v : u.values()) potential += int_pow(v, p + 2);
    potential *= u.grid().spacing() / ((p + 1.0) * (p + 2.0));
    const double energy =
        0.5 * params.mu * inner_product_l2(d2, d2) + 0.5 * inner_product_l2(d1, d1) - potential;
    return {energy, 0.5 * inner_product_l2(u, u)};
}

EvolutionState initial_state(const Field& u, const WaveParams& params) {
    const ConservedQuantities q = conserved(u, params);
    return {.time = 0.0, .u = u, .energy = q.energy, .mass = q.mass, .params = params};
}

// ---- Integrator ----------------------------------------------------------------

struct Integrator::Impl {
    GridSpec grid;
    WaveParams params;
    int p;
    double dt;
    bool nonlinear;
    std::size_t n, half, padded;
    std::vector<double> kappa;
    std::vector<cplx> e, e2, q, f1, f2, f3;
    detail::RealFft fft_n, fft_m;

    Impl(const GridSpec& g, const WaveParams& prm, double h, bool nl)
        : grid(g), params(prm), p(integer_exponent(prm.p)), dt(h), nonlinear(nl), n(g.num_points()),
          half(n / 2 + 1), padded(padded_size(n, p)), kappa(g.wavenumbers()), fft_n(n), fft_m(padded) {
        // Contour means (Kassam & Trefethen) over 32 points on the unit circle
        // around each h*L; L is imaginary, so the full circle is needed.
        constexpr int contour = 32;
        std::vector<cplx> roots(contour);
        for (int j = 0; j < contour; ++j)
            roots[j] = std::polar(1.0, std::numbers::pi * (2.0 * j + 1.0) / contour);
        const auto resize = [&](std::vector<cplx>& v) { v.assign(half, cplx{}); };
        for (auto* v : {&e, &e2, &q, &f1, &f2, &f3}) resize(*v);
        for (std::size_t j = 0; j < half; ++j) {
            const double k = kappa[j];
            const cplx hl(0.0, dt * (k * k * k + params.mu * k * k * k * k * k));
            e[j] = std::exp(hl);
            e2[j] = std::exp(0.5 * hl);
            cplx sq{}, s1{}, s2{}, s3{};
            for (const cplx& r : roots) {
                const cplx z = hl + r;
                const cplx ez = std::exp(z);
                const cplx z3 = z * z * z;
                sq += (std::exp(0.5 * z) - 1.0) / z;
                s1 += (-4.0 - z + ez * (4.0 - 3.0 * z + z * z)) / z3;
                s2 += (2.0 + z + ez * (z - 2.0)) / z3;
                s3 += (-4.0 - 3.0 * z - z * z + ez * (4.0 - z)) / z3;
            }
            q[j] = dt * sq / double(contour);
            f1[j] = dt * s1 / double(contour);
            f2[j] = dt * s2 / double(contour);
            f3[j] = dt * s3 / double(contour);
        }
    }

    struct Scratch {
        std::vector<cplx> pad;
        std::vector<double> fine;
    };

    /// Transform of -(u^{p+1}/(p+1))_x; returns sup|u| on the fine grid.
    double eval(const std::vector<cplx>& v, std::vector<cplx>& out, Scratch& s) const {
        if (!nonlinear) {
            std::fill(out.begin(), out.end(), cplx{});
            return 0.0;
        }
        const std::size_t mhalf = padded / 2 + 1;
        std::fill(s.pad.begin(), s.pad.end(), cplx{});
        std::copy(v.begin(), v.begin() + static_cast<long>(half - 1), s.pad.begin());
        fft_m.inverse(s.pad, s.fine);
        const double inv_n = 1.0 / static_cast<double>(n);
        double sup = 0.0;
        for (double& x : s.fine) {
            x *= inv_n;
            sup = std::max(sup, std::abs(x));
            x = int_pow(x, p + 1) / (p + 1.0);
        }
        if (!std::isfinite(sup)) sup = std::numeric_limits<double>::infinity();
        fft_m.forward(s.fine, std::span<cplx>(s.pad.data(), mhalf));
        const double scale = static_cast<double>(n) / static_cast<double>(padded);
        for (std::size_t j = 0; j + 1 < half; ++j) out[j] = cplx(0.0, -kappa[j]) * scale * s.pad[j];
        out[half - 1] = 0.0;
        return sup;
    }
};

Integrator::Integrator(const GridSpec& grid, const WaveParams& params, double dt, bool nonlinear) {
    params.validate();
    require(std::isfinite(dt) && dt > 0.0, "time step must be positive");
    impl_ = std::make_unique<Impl>(grid, params, dt, nonlinear);
}

Integrator::~Integrator() = default;
Integrator::Integrator(Integrator&&) noexcept = default;
Integrator& Integrator::operator=(Integrator&&) noexcept = default;

double Integrator::dt() const noexcept { return impl_->dt; }
const GridSpec& Integrator::grid() const noexcept { return impl_->grid; }
const WaveParams& Integrator::params() const noexcept { return impl_->params; }

Field Integrator::advance(const Field& u, long steps, double blowup_reference) const {
    const Impl& im = *impl_;
    require(u.grid() == im.grid, "advance: field is on a different grid");
    require(steps >= 0, "advance: negative step count");
    require(u.is_finite(), "advance: initial data has non-finite samples");
    const std::size_t half = im.half;
    Impl::Scratch s{std::vector<cplx>(im.padded / 2 + 1), std::vector<double>(im.padded)};

    std::vector<cplx> v(half), a(half), b(half), c(half), nv(half), na(half), nb(half), nc(half);
    im.fft_n.forward(u.values(), v);
    v[half - 1] = 0.0;
    const double limit = 1e6 * blowup_reference;

    for (long step = 0; step < steps; ++step) {
        const double sup = im.eval(v, nv, s);
        if (!(sup <= limit) && im.nonlinear) {
            std::ostringstream diag;
            diag << "sup|u| = " << sup << " at step " << step << " (limit " << limit << ")";
            throw ComputationError("evolution blew up", diag.str());
        }
        for (std::size_t j = 0; j < half; ++j) a[j] = im.e2[j] * v[j] + im.q[j] * nv[j];
        im.eval(a, na, s);
        for (std::size_t j = 0; j < half; ++j) b[j] = im.e2[j] * v[j] + im.q[j] * na[j];
        im.eval(b, nb, s);
        for (std::size_t j = 0; j < half; ++j) c[j] = im.e2[j] * a[j] + im.q[j] * (2.0 * nb[j] - nv[j]);
        im.eval(c, nc, s);
        for (std::size_t j = 0; j < half; ++j)
            v[j] = im.e[j] * v[j] + im.f1[j] * nv[j] + 2.0 * im.f2[j] * (na[j] + nb[j]) + im.f3[j] * nc[j];
    }

    Field out(im.grid);
    im.fft_n.inverse(v, out.values());
    out *= 1.0 / static_cast<double>(im.n);
    if (!out.is_finite()) throw ComputationError("evolution blew up", "non-finite samples at the end of a run");
    return out;
}

EvolutionState Integrator::step(const EvolutionState& state) const {
    Field u = advance(state.u, 1, std::max(state.u.max_abs(), 1e-300));
    const ConservedQuantities q = conserved(u, impl_->params);
    return {.time = state.time + impl_->dt, .u = std::move(u), .energy = q.energy, .mass = q.mass,
            .params = impl_->params};
}

EvolutionState step(const EvolutionState& state, double dt, bool nonlinear) {
    return Integrator(state.u.grid(), state.params, dt, nonlinear).step(state);
}

// ---- Orbital distance -----------------------------------------------------------

OrbitalDistance orbital_distance(const Field& u, const Field& phi) {
    require_same_grid(u, phi);
    const GridSpec& g = u.grid();
    const Spectrum uh = forward_transform(u);
    const Spectrum ph = forward_transform(phi);
    const std::vector<double> k = g.wavenumbers();
    const std::size_t half = uh.size();

    // g(z) = sum_k c_k w_k Re(u_k conj(phi_k) e^{-ikz}), w_k the H^2 weight.
    std::vector<cplx> bk(half);
    for (std::size_t j = 0; j + 1 < half; ++j) {
        const double w = (j == 0 ? 1.0 : 2.0) * (1.0 + k[j] * k[j] + k[j] * k[j] * k[j] * k[j]);
        bk[j] = w * uh[j] * std::conj(ph[j]);
    }
    Spectrum corr(half);
    for (std::size_t j = 0; j < half; ++j) corr[j] = 0.5 * std::conj(bk[j]);
    corr[0] = std::conj(bk[0]);
    const Field coarse = inverse_transform(g, corr);  // samples g(j h)
    std::size_t best = 0;
    for (std::size_t j = 1; j < coarse.size(); ++j)
        if (coarse[j] > coarse[best]) best = j;
    const double h = g.spacing();
    const double two_l = 2.0 * g.half_length();
    const auto wrap = [&](double z) {
        z = std::fmod(z, two_l);
        if (z > 0.5 * two_l) z -= two_l;
        if (z <= -0.5 * two_l) z += two_l;
        return z;
    };
    double z = wrap(static_cast<double>(best) * h);

    for (int it = 0; it < 60; ++it) {
        double d1 = 0.0, d2 = 0.0;
        for (std::size_t j = 0; j + 1 < half; ++j) {
            const cplx t = bk[j] * std::polar(1.0, -k[j] * z);
            d1 += k[j] * t.imag();        // Re(t * (-ik))
            d2 -= k[j] * k[j] * t.real();
        }
        if (!(d2 < 0.0)) break;
        const double dz = std::clamp(-d1 / d2, -h, h);
        z += dz;
        if (std::abs(dz) < 1e-12) break;
    }
    z = wrap(z);
    return {sobolev_norm(translate(u, z) - phi, 2), z};
}

OrbitalDistance orbital_distance(const Field& u, const SolitonProfile& phi) {
    return orbital_distance(u, phi.field);
}

// ---- Experiments -----------------------------------------------------------------

SolitonProfile experiment_profile(int p, BranchKind branch, double param, std::size_t num_points) {
    require(p >= 1 && p <= 5, "experiments cover p in {1, ..., 5}");
    if (branch == BranchKind::explicit_family) {
        const double cp = explicit_speed(p);
        const double c = param > 0.0 ? param : cp;
        require(std::abs(c - cp) <= 0.5 * cp, "explicit-branch speed must lie within 50% of c_p");
        const GridSpec grid = default_grid({double(p), std::min(c, cp), 1.0}, num_points);
        SolitonProfile seed = explicit_gkw_soliton(p, grid, 1.0);
        if (c == cp) return seed;
        ContinuationOptions opts;
        opts.compute_coercivity = false;
        const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(c - cp) / (0.02 * cp))));
        Branch br = newton_continue(seed, c, steps, opts);
        if (!br.completed) throw ComputationError("experiment_profile: continuation failed", br.failure);
        return br.points.back().profile;
    }
    const double mu = param > 0.0 ? param : 1e-2;
    require(p <= 3, "slow-branch experiments cover p in {1, 2, 3}");
    const GroundStateResult gs = minimize(make_problem(p, mu, std::nullopt, num_points));
    return {{double(p), 1.0, mu}, gs.phi.at_origin(), linear_decay_rate(1.0, mu), gs.phi};
}

StabilityTrace evolve_and_track(const SolitonProfile& phi, const Field& direction, double delta,
                                double horizon, double dt, double sample_every) {
    require(std::isfinite(delta) && delta >= 0.0, "delta must be >= 0");
    require(delta <= 0.1 * std::abs(phi.amplitude), "delta must be at most 0.1 times the amplitude");
    require(std::isfinite(horizon) && horizon >= 0.0, "horizon must be >= 0");
    require(std::isfinite(sample_every) && sample_every > 0.0, "sample interval must be positive");
    require(std::isfinite(dt) && dt > 0.0 && dt <= sample_every, "need 0 < dt <= sample interval");
    const long per_sample = std::lround(sample_every / dt);
    require(std::abs(per_sample * dt - sample_every) <= 1e-9 * sample_every,
            "sample interval must be a multiple of dt");
    const long samples = std::lround(horizon / sample_every);
    require(std::abs(samples * sample_every - horizon) <= 1e-9 * std::max(1.0, horizon),
            "horizon must be a multiple of the sample interval");
    require_same_grid(direction, phi.field);
    const double dnorm = sobolev_norm(direction, 2);
    require(dnorm > 0.0, "perturbation direction is zero");

    Field u = phi.field + direction * (delta / dnorm);
    const Integrator integ(u.grid(), phi.params, dt);
    const double reference = u.max_abs();

    StabilityTrace trace;
    trace.params = phi.params;
    trace.outside_proven_regime = phi.params.p > 4.0;
    const auto record = [&](double t, const Field& f) {
        const OrbitalDistance od = orbital_distance(f, phi.field);
        const ConservedQuantities q = conserved(f, phi.params);
        trace.times.push_back(t);
        trace.orbital_distances.push_back(od.distance);
        trace.best_shifts.push_back(od.shift);
        trace.energies.push_back(q.energy);
        trace.masses.push_back(q.mass);
    };
    record(0.0, u);
    for (long s = 1; s <= samples; ++s) {
        try {
            u = integ.advance(u, per_sample, reference);
        } catch (const ComputationError& e) {
            trace.aborted = true;
            trace.abort_reason = std::string(e.what()) + ": " + e.diagnostics();
            break;
        }
        record(static_cast<double>(s * per_sample) * dt, u);
    }

    const double e0 = trace.energies.front();
    const double v0 = trace.masses.front();
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        trace.energy_drift = std::max(trace.energy_drift, std::abs(trace.energies[i] - e0) / std::max(std::abs(e0), 1e-300));
        trace.mass_drift = std::max(trace.mass_drift, std::abs(trace.masses[i] - v0) / std::max(std::abs(v0), 1e-300));
        trace.sup_distance = std::max(trace.sup_distance, trace.orbital_distances[i]);
    }

    // Unwrap the shifts and fit a line; z(t) = -c t + const.
    if (trace.times.size() >= 2) {
        const double two_l = 2.0 * u.grid().half_length();
        std::vector<double> z = trace.best_shifts;
        for (std::size_t i = 1; i < z.size(); ++i) {
            double d = z[i] - z[i - 1];
            d -= two_l * std::round(d / two_l);
            z[i] = z[i - 1] + d;
        }
        const double n = static_cast<double>(z.size());
        double st = 0, sz = 0, stt = 0, stz = 0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            st += trace.times[i];
            sz += z[i];
            stt += trace.times[i] * trace.times[i];
            stz += trace.times[i] * z[i];
        }
        trace.measured_speed = -(n * stz - st * sz) / (n * stt - st * st);
    }
    return trace;
}

StabilityTrace stability_experiment(const ExperimentConfig& config) {
    const SolitonProfile phi = experiment_profile(config.p, config.branch, config.param, config.num_points);
    Field direction(phi.field.grid());
    if (config.perturbation == Perturbation::gaussian) {
        direction = Field::sample(phi.field.grid(), [](double x) { return std::exp(-x * x); });
    } else {
        const SpectrumReport spec = bottom_spectrum(LinearizedOperator::around(phi.field, phi.params), 3);
        require(spec.negative_count >= 1 && spec.even[0], "no even negative direction found");
        direction = spec.eigenfunctions[0];
    }
    return evolve_and_track(phi, direction, config.delta, config.horizon, config.dt, config.sample_every);
}

double time_reversal_error(const Field& u0, const WaveParams& params, double horizon, double dt) {
    const long steps = std::lround(horizon / dt);
    require(steps >= 1 && std::abs(steps * dt - horizon) <= 1e-9 * std::max(1.0, horizon),
            "horizon must be a positive multiple of dt");
    const Integrator integ(u0.grid(), params, dt);
    const double ref = std::max(u0.max_abs(), 1e-300);
    const Field forward = integ.advance(u0, steps, ref);
    const Field back = reflect(integ.advance(reflect(forward), steps, ref));
    return sobolev_norm(back - u0, 2);
}

}  // namespace gkw
