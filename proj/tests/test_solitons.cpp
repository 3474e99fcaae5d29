#include <doctest.h>

#include <cmath>

#include "gkw/solitons.hpp"

using namespace gkw;

TEST_CASE("explicit speed and decay rate") {
    CHECK(explicit_speed(1) == doctest::Approx(36.0 / 169.0));
    CHECK(explicit_speed(2) == doctest::Approx(4.0 * 16.0 / 400.0));
    for (double mu : {0.0, 0.1, 0.2}) {
        const double s = linear_decay_rate(1.0, mu);
        CHECK(mu * std::pow(s, 4) - s * s + 1.0 == doctest::Approx(0.0).epsilon(1e-12));
    }
    WaveParams bad{0.5, 1.0, 1.0};
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("closed-form profiles solve their equations") {
    for (int p = 1; p <= 5; ++p) {
        CAPTURE(p);
        const GridSpec g = default_grid({double(p), explicit_speed(p), 1.0}, 1024);
        const SolitonProfile e = explicit_gkw_soliton(p, g, 1.0);
        CHECK(e.params.c == doctest::Approx(explicit_speed(p)));
        CHECK(closed_form_residual(e) < 1e-12);
        CHECK(residual_norm(e.field, e.params) < 1e-7);
        // sech^{4/p}(b x) decays at rate 4b/p, equal to the slow linear root.
        CHECK(tail_decay_rate(e.field) == doctest::Approx(4.0 * e.decay_scale / p).epsilon(1e-3));
        CHECK(4.0 * e.decay_scale / p == doctest::Approx(linear_decay_rate(e.params.c, 1.0)).epsilon(1e-12));

        const SolitonProfile k = gkdv_soliton(1.0, p, default_grid({double(p), 1.0, 0.0}, 1024));
        CHECK(closed_form_residual(k) < 1e-12);
        CHECK(residual_norm(k.field, k.params) < 1e-8);
    }
}

TEST_CASE("gKdV soliton at p = 1 is 3 sech^2(x/2)") {
    const GridSpec g(40.0, 256);
    const SolitonProfile k = gkdv_soliton(1.0, 1.0, g);
    CHECK(k.amplitude == doctest::Approx(3.0));
    CHECK(k.field.at_origin() == doctest::Approx(3.0));
}

TEST_CASE("profiles on a box that is too small are rejected") {
    CHECK_THROWS(explicit_gkw_soliton(1, GridSpec(5.0, 256), 1.0));
}

TEST_CASE("rescaling between (c = 1, mu) and (c = mu, mu = 1)") {
    const double p = 2.0;
    const double mu = explicit_speed(p);
    const GridSpec g = default_grid({p, 1.0, mu}, 1024);
    const SolitonProfile unit = explicit_gkw_soliton(p, g, mu);  // c = 1
    CHECK(unit.params.c == doctest::Approx(1.0));
    const SolitonProfile m1 = rescale_normalization(unit, Normalization::to_mu_one);
    CHECK(m1.params.mu == 1.0);
    CHECK(m1.params.c == doctest::Approx(mu));
    CHECK(residual_norm(m1.field, m1.params) < 1e-7);
    const SolitonProfile ref = explicit_gkw_soliton(p, m1.field.grid(), 1.0);
    CHECK(sobolev_norm(ref.field - m1.field, 0) < 1e-12);

    const SolitonProfile back = rescale_normalization(m1, Normalization::to_c_one);
    CHECK(back.params.c == doctest::Approx(1.0));
    CHECK(sobolev_norm(back.field - unit.field, 0) < 1e-12);
    CHECK_THROWS_AS(rescale_normalization(m1, Normalization::to_mu_one), InvalidArgument);
}
