#include <doctest.h>

#include <cmath>

#include "gkw/groundstate.hpp"

using namespace gkw;

TEST_CASE("beta_p closed form") {
    CHECK(beta_p(1) == doctest::Approx(9.6).epsilon(1e-13));
    // Against quadrature of the sampled gKdV soliton.
    for (int p = 1; p <= 3; ++p) {
        const SolitonProfile k = gkdv_soliton(1.0, p, GridSpec(40.0, 2048));
        CHECK(functionals(k.field, 0.0, p).k_p == doctest::Approx(beta_p(p)).epsilon(1e-12));
    }
}

TEST_CASE("minimizers: constraint, multiplier and profile equation") {
    // alpha from an independent numpy Petviashvili run.
    struct Case {
        int p;
        double mu, alpha;
    };
    for (const Case& c : {Case{1, 0.1, 1.01025}, Case{1, 1e-2, 1.00117}, Case{2, 0.1, 1.02658},
                          Case{2, 1e-2, 1.00336}, Case{3, 0.1, 1.04242}}) {
        CAPTURE(c.p);
        CAPTURE(c.mu);
        const GroundStateResult r = minimize(make_problem(c.p, c.mu));
        CHECK(r.alpha == doctest::Approx(c.alpha).epsilon(2e-5));
        CHECK(functionals(r.psi, c.mu, c.p).k_p == doctest::Approx(beta_p(c.p)).epsilon(1e-10));
        CHECK(r.euler_lagrange_residual < 1e-8);
        CHECK(r.profile_residual < 1e-7);
        CHECK(r.alpha == doctest::Approx(2.0 * r.i_value / ((c.p + 2.0) * beta_p(c.p))));
    }
}

TEST_CASE("alpha decreases to 1 and the wave approaches gKdV") {
    const auto rows = mu_scan(1, {1e-1, 1e-2, 1e-3, 1e-4});
    REQUIRE(rows.size() == 4);
    CHECK(rows[3].alpha == doctest::Approx(1.0000119).epsilon(1e-6));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].alpha >= 1.0);
        CHECK(rows[i].alpha < rows[i - 1].alpha);
        CHECK(rows[i].h1_distance_to_gkdv < rows[i - 1].h1_distance_to_gkdv);
    }
    CHECK(rows[0].h1_distance_to_gkdv == doctest::Approx(0.3116).epsilon(1e-3));
    CHECK(alpha_slope(rows) > 0.0);
}

TEST_CASE("alpha slope fit") {
    CHECK(alpha_slope({0.1, 0.01}, {1.02, 1.002}) == doctest::Approx(0.2));
    CHECK_THROWS_AS(alpha_slope({0.1}, {}), InvalidArgument);
}

TEST_CASE("scaling identity and sub-additivity") {
    CHECK(scaling_identity_check(2, 1e-2, 0.3 * beta_p(2)) < 1e-6);
    CHECK(subadditivity_gap(1, 1e-2, 0.4 * beta_p(1)) > 0.0);
}

TEST_CASE("multi-start minimizers coincide") {
    const UniquenessProbe probe = empirical_uniqueness_probe(make_problem(1, 1e-2), 3);
    CHECK(probe.converged == 3);
    CHECK(probe.spread < 1e-8);
}

TEST_CASE("problem validation") {
    CHECK_THROWS_AS(make_problem(4, 1e-2), InvalidArgument);
    CHECK_THROWS_AS(make_problem(1, -1.0), InvalidArgument);
    MinimizationProblem p4{.p = 4, .mu = 1e-2, .beta_target = beta_p(4), .grid = GridSpec(27.7, 512), .allow_p4 = true};
    CHECK_NOTHROW(p4.validate());
    const MinimizationProblem prob = make_problem(1, 1e-2);
    const Field odd = Field::sample(prob.grid, [](double x) { return x * std::exp(-x * x); });
    CHECK_THROWS_AS(minimize(prob, odd), InvalidArgument);
    const Field negative = Field::sample(prob.grid, [](double x) { return -std::exp(-x * x); });
    CHECK_THROWS_AS(minimize(prob, negative), InvalidArgument);
}
