#include <doctest.h>

#include <array>
#include <cmath>

#include "gkw/index.hpp"

using namespace gkw;

namespace {
// Half-line values from an independent Fourier-collocation computation
// (numpy, N = 2048, Fourier inversion of the even block).
constexpr std::array<double, 5> kReference{-10.078671, -1.932467, -0.564890, -0.144275, 0.025159};
// Published values.
constexpr std::array<double, 5> kPublished{-10.0787, -1.9325, -0.5649, -0.1443, 0.0252};
}  // namespace

TEST_CASE("half-line index by collocation") {
    for (int p = 1; p <= 5; ++p) {
        CAPTURE(p);
        const IndexReport r = index_bvp(p);
        CHECK(r.j_half == doctest::Approx(kReference[p - 1]).epsilon(1e-5));
        CHECK(std::abs(r.j_half - kPublished[p - 1]) <= 0.02 * std::abs(kPublished[p - 1]));
        CHECK(std::signbit(r.j_half) == std::signbit(kPublished[p - 1]));
        CHECK(r.j_full == doctest::Approx(2.0 * r.j_half));
        CHECK(r.pairing_identity_error < 1e-8);
        CHECK(r.refinement_change < 1e-8);
    }
}

TEST_CASE("spectral and collocation routes agree") {
    for (int p : {1, 3, 5}) {
        CAPTURE(p);
        const IndexReport bvp = index_bvp(p);
        const IndexReport spec = index_spectral(p, std::nullopt, true);
        CHECK(with_agreement(bvp, spec).method_agreement < 1e-3);
        CHECK(spec.refinement_change < 1e-6);
        CHECK(spec.pairing_identity_error < 1e-8);
    }
}

TEST_CASE("index options are validated") {
    CHECK_THROWS_AS(index_bvp(0.5), InvalidArgument);
    BvpOptions tiny;
    tiny.r_max = 3.0;
    CHECK_THROWS_AS(index_bvp(1, tiny), InvalidArgument);
    CHECK_THROWS_AS(critical_exponent(1.0, 2.0), InvalidArgument);  // no sign change
}

TEST_CASE("scan and critical exponent") {
    const auto rows = index_scan(4.0, 5.0, 3);
    REQUIRE(rows.size() == 3);
    CHECK(rows.front().j_full < 0.0);
    CHECK(rows.back().j_full > 0.0);
    const double pc = critical_exponent(4.0, 5.0, 1e-3);
    // Converged value of the sign change; see README on the gap to 4.84.
    CHECK(pc == doctest::Approx(4.791).epsilon(5e-4));
    CHECK(std::abs(pc - 4.84) <= 0.05);
}
