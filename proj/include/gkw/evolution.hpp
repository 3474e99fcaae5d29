#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gkw/solitons.hpp"

namespace gkw {

struct EvolutionState {
    double time = 0.0;
    Field u;
    double energy = 0.0;  ///< cache of conserved(u).energy
    double mass = 0.0;    ///< cache of conserved(u).mass
    WaveParams params;
};

struct ConservedQuantities {
    double energy;  ///< integral of mu u''^2/2 + u'^2/2 - u^{p+2}/((p+1)(p+2))
    double mass;    ///< integral of u^2/2
};

ConservedQuantities conserved(const Field& u, const WaveParams& params);

/// State at t = 0 with the conserved quantities filled in.
EvolutionState initial_state(const Field& u, const WaveParams& params);

/// ETDRK4 for u_t + u^p u_x + u_xxx - mu u_xxxxx = 0 on the periodic box.
/// The linear part i(k^3 + mu k^5) is propagated exactly; the nonlinear
/// term -(u^{p+1}/(p+1))_x is evaluated with zero padding to at least
/// (p+2)N/2 points. Coefficients are built once per (grid, p, mu, dt).
class Integrator {
public:
    Integrator(const GridSpec& grid, const WaveParams& params, double dt, bool nonlinear = true);
    ~Integrator();
    Integrator(Integrator&&) noexcept;
    Integrator& operator=(Integrator&&) noexcept;

    double dt() const noexcept;
    const GridSpec& grid() const noexcept;
    const WaveParams& params() const noexcept;

    /// Advance `steps` steps. Throws ComputationError on blow-up, i.e. a
    /// non-finite value or sup|u| above 1e6 times `blowup_reference`.
    Field advance(const Field& u, long steps, double blowup_reference) const;
    EvolutionState step(const EvolutionState& state) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One step from scratch; builds a fresh Integrator. Prefer Integrator for loops.
EvolutionState step(const EvolutionState& state, double dt, bool nonlinear = true);

struct OrbitalDistance {
    double distance;  ///< min over z of ||translate(u, z) - phi||_{H^2}
    double shift;     ///< the minimizing z in (-L, L]
};

/// Coarse maximum of the H^2 cross-correlation over grid shifts, then
/// Newton refinement in z to 1e-10.
OrbitalDistance orbital_distance(const Field& u, const Field& phi);
OrbitalDistance orbital_distance(const Field& u, const SolitonProfile& phi);

/// explicit_family: (c near c_p, mu = 1); slow_family: (c = 1, mu small) ground states.
enum class BranchKind { explicit_family, slow_family };
enum class Perturbation { gaussian, eigenfunction };

struct ExperimentConfig {
    int p = 1;
    BranchKind branch = BranchKind::explicit_family;
    /// c for the explicit branch (mu = 1), mu for the slow branch (c = 1).
    /// Zero selects c_p or 1e-2 respectively.
    double param = 0.0;
    double delta = 1e-3;
    double horizon = 100.0;
    double dt = 2e-3;
    double sample_every = 0.5;
    Perturbation perturbation = Perturbation::gaussian;
    std::size_t num_points = 512;
};

struct StabilityTrace {
    WaveParams params;
    std::vector<double> times;
    std::vector<double> orbital_distances;
    std::vector<double> best_shifts;
    std::vector<double> energies;
    std::vector<double> masses;
    double energy_drift = 0.0;   ///< max |E(t) - E(0)| / |E(0)|
    double mass_drift = 0.0;     ///< max |V(t) - V(0)| / |V(0)|
    double sup_distance = 0.0;
    double measured_speed = 0.0; ///< -slope of the unwrapped shifts
    bool aborted = false;
    std::string abort_reason;
    /// Set for p = 5, where the sufficient condition for stability fails.
    bool outside_proven_regime = false;
};

/// Evolve phi + delta * g with g even and ||g||_{H^2} = 1, sampling the
/// orbital distance every `sample_every`. A blow-up ends the run early
/// with aborted = true and the partial trace.
StabilityTrace stability_experiment(const ExperimentConfig& config);

/// Same, from a given profile and perturbation direction (normalized here).
StabilityTrace evolve_and_track(const SolitonProfile& phi, const Field& direction, double delta,
                                double horizon, double dt, double sample_every);

/// ||reflect(S_T reflect(S_T u0)) - u0||_{H^2}; gKW is invariant under
/// (t, x) -> (-t, -x), so this vanishes up to integration error.
double time_reversal_error(const Field& u0, const WaveParams& params, double horizon, double dt);

/// Profile used by stability_experiment for the given branch and parameter.
SolitonProfile experiment_profile(int p, BranchKind branch, double param, std::size_t num_points);

}  // namespace gkw
