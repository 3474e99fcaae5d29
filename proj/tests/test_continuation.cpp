#include <doctest.h>

#include <cmath>

#include "gkw/continuation.hpp"
#include "gkw/linop.hpp"

using namespace gkw;

TEST_CASE("Jacobian matches finite differences of the residual") {
    const double p = 3.0;
    const GridSpec g = default_grid({p, explicit_speed(p), 1.0}, 512);
    const SolitonProfile phi = explicit_gkw_soliton(p, g, 1.0);
    const Field v = Field::sample(g, [](double x) { return std::exp(-0.2 * x * x); });
    const double eps = 1e-5;
    const Field fd = (profile_residual(phi.field + v * eps, phi.params) - profile_residual(phi.field - v * eps, phi.params)) *
                     (0.5 / eps);
    const Field jv = LinearizedOperator::around(phi.field, phi.params).apply(v);
    CHECK(sobolev_norm(fd - jv, 0) < 1e-6 * sobolev_norm(jv, 0));
}

TEST_CASE("Newton recovers the explicit wave from a perturbed guess") {
    const GridSpec g = default_grid({1.0, explicit_speed(1), 1.0}, 512);
    const SolitonProfile phi = explicit_gkw_soliton(1, g, 1.0);
    const Field guess = phi.field * 1.05;
    const BranchPoint bp = newton_correct(guess, phi.params);
    CHECK(bp.newton_residual < 1e-9);
    CHECK(sobolev_norm(bp.profile.field - phi.field, 0) < 1e-8);
}

TEST_CASE("branch over [0.9, 1.1] c_p keeps coercivity for p = 1, 4") {
    for (int p : {1, 4}) {
        CAPTURE(p);
        const double cp = explicit_speed(p);
        const GridSpec g = default_grid({double(p), 0.9 * cp, 1.0}, 512);
        const SolitonProfile seed = explicit_gkw_soliton(p, g, 1.0);
        const Branch br = newton_continue(seed, 1.1 * cp, 4);
        REQUIRE(br.completed);
        CHECK(br.points.size() == 5);
        for (const BranchPoint& bp : br.points) {
            CHECK(bp.newton_residual < 1e-9);
            CHECK(bp.coercivity_margin > 0.0);
            CHECK(bp.negative_count == 1);
        }
        CHECK(br.points.front().distance_to_seed < 1e-8);
        CHECK(br.points.back().gamma > 0.0);
        CHECK(admissible_window(br) > 0.0);
    }
}

TEST_CASE("coercivity fails at p = 5") {
    const GridSpec g = default_grid({5.0, explicit_speed(5), 1.0}, 512);
    const CoercivityReport r = coercivity_details(explicit_gkw_soliton(5, g, 1.0));
    CHECK(r.margin < 0.0);
    CHECK(r.even_margin < 0.0);
    CHECK(r.odd_margin > 0.0);
    CHECK(r.unconstrained_min < r.margin);
}

TEST_CASE("continuation input validation") {
    const GridSpec g = default_grid({1.0, explicit_speed(1), 1.0}, 256);
    SolitonProfile seed = explicit_gkw_soliton(1, g, 1.0);
    CHECK_THROWS_AS(newton_continue(seed, -1.0, 3), InvalidArgument);
    CHECK_THROWS_AS(newton_continue(seed, 0.2, 0), InvalidArgument);
    seed.field *= 1.1;
    CHECK_THROWS_AS(newton_continue(seed, 0.2, 3), InvalidArgument);
}
