#include <doctest.h>

#include <cmath>

#include "gkw/evolution.hpp"

using namespace gkw;

TEST_CASE("conserved quantities") {
    const GridSpec g(40.0, 1024);
    CHECK(conserved(Field(g), {1.0, 1.0, 1.0}).energy == 0.0);
    // V(3 sech^2(x/2)) = (9/2) * 8/3 = 12
    const SolitonProfile k = gkdv_soliton(1.0, 1.0, g);
    CHECK(conserved(k.field, {1.0, 1.0, 0.0}).mass == doctest::Approx(12.0).epsilon(1e-12));
    CHECK_THROWS_AS(conserved(k.field, {1.5, 1.0, 0.0}), InvalidArgument);
}

TEST_CASE("zero data and the linear flow") {
    const GridSpec g(20.0, 256);
    const WaveParams prm{2.0, 1.0, 1.0};
    EvolutionState s = initial_state(Field(g), prm);
    s = step(s, 1e-2);
    CHECK(s.u.max_abs() == 0.0);

    const Field u0 = Field::sample(g, [](double x) { return std::exp(-x * x); });
    const Integrator lin(g, prm, 1e-2, false);
    const Field u = lin.advance(u0, 500, 1.0);
    CHECK(sobolev_norm(u, 0) == doctest::Approx(sobolev_norm(u0, 0)).epsilon(1e-13));

    const EvolutionState st = Integrator(g, prm, 1e-3).step(initial_state(u0, prm));
    const ConservedQuantities q = conserved(st.u, prm);
    CHECK(st.energy == q.energy);
    CHECK(st.mass == q.mass);
    CHECK(st.time == doctest::Approx(1e-3));
    CHECK_THROWS_AS(Integrator(g, prm, -1.0), InvalidArgument);
}

TEST_CASE("orbital distance recovers translations") {
    const GridSpec g = default_grid({1.0, explicit_speed(1), 1.0}, 512);
    const SolitonProfile phi = explicit_gkw_soliton(1, g, 1.0);
    const OrbitalDistance same = orbital_distance(phi.field, phi);
    CHECK(same.distance < 1e-10);
    CHECK(std::abs(same.shift) < 1e-10);
    const OrbitalDistance moved = orbital_distance(translate(phi.field, 2.5), phi);
    CHECK(moved.distance < 1e-9);
    CHECK(moved.shift == doctest::Approx(-2.5).epsilon(1e-10));
    const OrbitalDistance far = orbital_distance(translate(phi.field, -31.7), phi);
    CHECK(far.distance < 1e-9);
    CHECK(far.shift == doctest::Approx(31.7).epsilon(1e-10));

    const Field bump = Field::sample(g, [](double x) { return std::exp(-x * x); });
    const OrbitalDistance pert = orbital_distance(phi.field + bump * 0.01, phi);
    CHECK(pert.distance > 0.0);
    CHECK(pert.distance <= 0.01 * sobolev_norm(bump, 2) * (1 + 1e-12));
    CHECK(std::abs(pert.shift) < 1e-8);
}

TEST_CASE("exact wave travels at speed c") {
    const WaveParams prm{2.0, explicit_speed(2), 1.0};
    const GridSpec g = default_grid(prm, 512);
    const SolitonProfile phi = explicit_gkw_soliton(2, g, 1.0);
    const Field bump = Field::sample(g, [](double x) { return std::exp(-x * x); });
    const StabilityTrace t = evolve_and_track(phi, bump, 0.0, 10.0, 2e-3, 0.5);
    CHECK(t.times.size() == 21);
    CHECK(t.sup_distance < 1e-6);
    CHECK(t.energy_drift < 1e-9);
    CHECK(t.mass_drift < 1e-9);
    CHECK(t.measured_speed == doctest::Approx(prm.c).epsilon(1e-3));
}

TEST_CASE("time reversal") {
    const WaveParams prm{1.0, explicit_speed(1), 1.0};
    const GridSpec g = default_grid(prm, 512);
    const Field u0 = explicit_gkw_soliton(1, g, 1.0).field +
                     Field::sample(g, [](double x) { return 0.02 * std::exp(-x * x); });
    CHECK(time_reversal_error(u0, prm, 1.0, 1e-3) < 1e-6);
}

TEST_CASE("perturbed explicit wave stays close; initial distance is delta") {
    ExperimentConfig cfg;
    cfg.p = 1;
    cfg.horizon = 10.0;
    cfg.delta = 1e-3;
    const StabilityTrace t = stability_experiment(cfg);
    CHECK(t.orbital_distances.front() == doctest::Approx(1e-3).epsilon(1e-7));
    CHECK(std::abs(t.orbital_distances.front() - 1e-3) < 1e-10);
    CHECK(t.sup_distance < 5e-3);
    CHECK_FALSE(t.outside_proven_regime);

    cfg.perturbation = Perturbation::eigenfunction;
    const StabilityTrace e = stability_experiment(cfg);
    CHECK(e.sup_distance < 5e-3);
}

TEST_CASE("sup distance is nondecreasing in delta") {
    double last = 0.0;
    for (double d : {1e-4, 1e-3, 1e-2}) {
        ExperimentConfig cfg;
        cfg.p = 2;
        cfg.horizon = 5.0;
        cfg.delta = d;
        const double s = stability_experiment(cfg).sup_distance;
        CHECK(s >= last);
        last = s;
    }
}

TEST_CASE("blow-up detection") {
    // Reference amplitude far below the data: the detector trips at once.
    const WaveParams prm{5.0, explicit_speed(5), 1.0};
    const GridSpec g(20.0, 256);
    const Integrator integ(g, prm, 1e-3);
    const Field big = Field::sample(g, [](double x) { return 1e3 * std::exp(-x * x); });
    CHECK_THROWS_AS(integ.advance(big, 2000, 1e-6), ComputationError);
}

TEST_CASE("experiment preconditions") {
    ExperimentConfig cfg;
    cfg.delta = 10.0;
    CHECK_THROWS_AS(stability_experiment(cfg), InvalidArgument);
    cfg.delta = 1e-3;
    cfg.p = 4;
    cfg.branch = BranchKind::slow_family;
    CHECK_THROWS_AS(stability_experiment(cfg), InvalidArgument);
}
