#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gkw/field_io.hpp"
#include "gkw/grid.hpp"

using namespace gkw;

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(GridSpec(10.0, 15), InvalidArgument);
    CHECK_THROWS_AS(GridSpec(10.0, 8), InvalidArgument);
    CHECK_THROWS_AS(GridSpec(-1.0, 64), InvalidArgument);
    const GridSpec g(10.0, 64);
    CHECK(g.x(32) == doctest::Approx(0.0));
    CHECK(g.mirror(0) == 0);
    CHECK(g.mirror(32) == 32);
    CHECK(g.mirror(1) == 63);
    CHECK(g.wavenumbers().size() == 33);
    CHECK(g.wavenumbers()[1] == doctest::Approx(std::numbers::pi / 10.0));
}

TEST_CASE("spectral derivatives of a trigonometric polynomial are exact") {
    const GridSpec g(std::numbers::pi, 64);
    const Field f = Field::sample(g, [](double x) { return std::sin(3 * x) + std::cos(5 * x); });
    const Field d1 = spectral_derivative(f, 1);
    const Field d4 = spectral_derivative(f, 4);
    const Field d5 = spectral_derivative(f, 5);
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double x = g.x(j);
        CHECK(d1[j] == doctest::Approx(3 * std::cos(3 * x) - 5 * std::sin(5 * x)).epsilon(1e-12));
        CHECK(std::abs(d4[j] - (81 * std::sin(3 * x) + 625 * std::cos(5 * x))) < 1e-9 * 625);
        CHECK(std::abs(d5[j] - (243 * std::cos(3 * x) - 3125 * std::sin(5 * x))) < 1e-9 * 3125);
    }
    Field bad = f;
    bad[3] = std::nan("");
    CHECK_THROWS_AS(spectral_derivative(bad, 1), InvalidArgument);
}

TEST_CASE("Parseval and Sobolev norms") {
    const GridSpec g(std::numbers::pi, 128);
    const Field f = Field::sample(g, [](double x) { return std::sin(2 * x); });
    // ||sin 2x||^2 = pi, ||2 cos 2x||^2 = 4 pi, ||-4 sin 2x||^2 = 16 pi.
    CHECK(sobolev_norm(f, 0) == doctest::Approx(std::sqrt(std::numbers::pi)));
    CHECK(sobolev_norm(f, 2) == doctest::Approx(std::sqrt(21 * std::numbers::pi)));
    const Spectrum c = forward_transform(f);
    double energy = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k)
        energy += (k == 0 || k + 1 == c.size() ? 1.0 : 2.0) * std::norm(c[k]);
    CHECK(energy * g.spacing() / 128.0 == doctest::Approx(inner_product_l2(f, f)));
    const Field back = inverse_transform(g, c);
    for (std::size_t j = 0; j < f.size(); ++j) CHECK(back[j] == doctest::Approx(f[j]).epsilon(1e-13));
}

TEST_CASE("translate, reflect and even projection") {
    const GridSpec g(30.0, 512);
    const Field f = Field::sample(g, [](double x) { return 1.0 / std::cosh(x - 1.0); });
    const Field t = translate(f, 2.5);
    for (std::size_t j = 200; j < 300; ++j)
        CHECK(t[j] == doctest::Approx(1.0 / std::cosh(g.x(j) - 3.5)).epsilon(1e-10));
    const Field r = reflect(f);
    for (std::size_t j = 1; j < g.num_points(); ++j)
        CHECK(r[j] == doctest::Approx(1.0 / std::cosh(-g.x(j) - 1.0)));
    const Field e = even_projection(f);
    CHECK(sobolev_norm(e - reflect(e), 0) < 1e-14);
}

TEST_CASE("half-line integral matches a closed form") {
    // integral_0^inf sech^2 = 1
    const GridSpec g(40.0, 1024);
    const Field f = Field::sample(g, [](double x) { return std::pow(1.0 / std::cosh(x), 2); });
    CHECK(half_line_integral(f) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("resample onto a finer grid reproduces a band-limited function") {
    const GridSpec g(std::numbers::pi, 32);
    const GridSpec fine(std::numbers::pi, 96);
    const Field f = Field::sample(g, [](double x) { return std::cos(3 * x); });
    const Field r = resample(f, fine);
    for (std::size_t j = 0; j < fine.num_points(); ++j)
        CHECK(r[j] == doctest::Approx(std::cos(3 * fine.x(j))).epsilon(1e-12));
}

TEST_CASE("field io round trips exactly") {
    const GridSpec g(12.5, 32);
    const Field f = Field::sample(g, [](double x) { return std::exp(-x * x) / 3.0; });
    const Field c = io::field_from_csv(io::field_to_csv(f));
    const Field j = io::field_from_json(io::field_to_json(f));
    CHECK(c.grid() == g);
    CHECK(j.grid() == g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(c[i] == f[i]);
        CHECK(j[i] == f[i]);
    }
}
