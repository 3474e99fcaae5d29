#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gkw/linop.hpp"
#include "gkw/index.hpp"

using namespace gkw;

namespace {

// Trapezoid quadrature of sech^nu(x) cos(omega x) on a wide interval.
double quad_transform(double nu, double omega) {
    const double h = 1e-3, l = 60.0;
    double s = 0.0;
    for (double x = -l; x <= l; x += h) s += std::pow(1.0 / std::cosh(x), nu) * std::cos(omega * x);
    return s * h;
}

}  // namespace

TEST_CASE("log |Gamma| against known values") {
    for (double x : {0.3, 1.0, 2.5, 7.0}) CHECK(log_abs_gamma(x, 0.0) == doctest::Approx(std::lgamma(x)).epsilon(1e-12));
    // |Gamma(1/2 + i y)|^2 = pi / cosh(pi y)
    for (double y : {0.1, 1.0, 4.0, 20.0})
        CHECK(2.0 * log_abs_gamma(0.5, y) ==
              doctest::Approx(std::log(std::numbers::pi / std::cosh(std::numbers::pi * y))).epsilon(1e-11));
}

TEST_CASE("sech-power transform matches direct quadrature") {
    for (double nu : {1.0, 4.0 / 3.0, 2.0, 4.0})
        for (double w : {0.0, 0.7, 3.0}) {
            CAPTURE(nu);
            CAPTURE(w);
            CHECK(sech_power_transform(nu, w) == doctest::Approx(quad_transform(nu, w)).epsilon(1e-8));
        }
    // sech^4(x/2): transform(omega) = 2 * sech4 transform at 2 omega
    CHECK(sech4_half_transform(0.8) == doctest::Approx(2.0 * sech_power_transform(4.0, 1.6)).epsilon(1e-10));
}

TEST_CASE("log-curvature bracket") {
    CHECK(sech4_log_curvature(1.0) == doctest::Approx(-0.92600).epsilon(1e-4));
    const double small = sech4_log_curvature(1e-5);
    const double series = 2.0 - std::numbers::pi * std::numbers::pi / 3.0;
    CHECK(small == doctest::Approx(series).epsilon(1e-8));
    const double h = 1e-3;
    const auto logt = [](double w) { return std::log(sech4_half_transform(w)); };
    for (double w : {0.5, 2.0}) {
        const double fd = (logt(w + h) - 2 * logt(w) + logt(w - h)) / (h * h);
        CHECK(sech4_log_curvature(w) == doctest::Approx(fd).epsilon(1e-5));
    }
    for (int p = 1; p <= 5; ++p) {
        const AlbertReport a = albert_criterion(p, 50.0, 1000);
        CHECK(a.positivity_ok);
        CHECK(a.logconcavity_ok);
        CHECK(a.max_curvature < 0.0);
    }
}

TEST_CASE("linearized operator is self-adjoint") {
    const double p = 2.0;
    const SolitonProfile phi = explicit_gkw_soliton(p, default_index_grid(p, 512), explicit_speed(p));
    const LinearizedOperator op = LinearizedOperator::assemble(phi);
    const GridSpec& g = op.grid();
    const Field u = Field::sample(g, [](double x) { return std::exp(-0.3 * x * x) * (1.0 + x); });
    const Field v = Field::sample(g, [](double x) { return std::exp(-0.1 * (x - 2) * (x - 2)); });
    CHECK(inner_product_l2(op.apply(u), v) == doctest::Approx(inner_product_l2(u, op.apply(v))).epsilon(1e-12));
    // L phi' = 0 (translation invariance).
    CHECK(sobolev_norm(op.apply(spectral_derivative(phi.field, 1)), 0) < 1e-6);
}

TEST_CASE("bottom spectrum at p = 1") {
    const SolitonProfile phi = explicit_gkw_soliton(1, GridSpec(80.0, 1024), explicit_speed(1));
    const SpectrumReport r = bottom_spectrum(LinearizedOperator::assemble(phi), 4);
    REQUIRE(r.eigenvalues.size() == 4);
    CHECK(r.eigenvalues[0] == doctest::Approx(-1.22103).epsilon(1e-5));
    CHECK(r.even[0]);
    CHECK(std::abs(r.eigenvalues[1]) < 1e-6);
    CHECK(r.eigenvalues[2] == doctest::Approx(0.78343).epsilon(1e-5));
    CHECK(r.negative_count == 1);
    CHECK(r.kernel_found);
    CHECK(r.kernel_alignment > 0.999);
    for (double res : r.residual_norms) CHECK(res < 1e-8);
    const SpectrumReport free = bottom_spectrum(LinearizedOperator::potential_free(phi.params, phi.field.grid()), 3);
    CHECK(free.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(free.essential_floor == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(bottom_spectrum(LinearizedOperator::assemble(phi), 2), InvalidArgument);
}

TEST_CASE("exactly one negative eigenvalue for p = 1..5") {
    for (int p = 1; p <= 5; ++p) {
        CAPTURE(p);
        const SolitonProfile phi = explicit_gkw_soliton(p, default_index_grid(p, 512), explicit_speed(p));
        const SpectrumReport r = bottom_spectrum(LinearizedOperator::assemble(phi), 3);
        CHECK(r.negative_count == 1);
        CHECK(r.kernel_alignment > 0.999);
    }
}

TEST_CASE("constrained solve rejects odd data") {
    const SolitonProfile phi = explicit_gkw_soliton(1, default_index_grid(1, 512), explicit_speed(1));
    const LinearizedOperator op = LinearizedOperator::assemble(phi);
    CHECK_THROWS_AS(solve_constrained(op, spectral_derivative(phi.field, 1)), InvalidArgument);
    const Field rho = solve_constrained(op, phi.field);
    CHECK(sobolev_norm(op.apply(rho) - phi.field, 0) < 1e-8);
}
