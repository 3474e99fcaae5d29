#include <doctest.h>

#include "gkw/report_json.hpp"
#include "gkw/reproduce.hpp"

using namespace gkw;

TEST_CASE("report pass rule") {
    CHECK(make_report("a", 1, -10.0, -10.1, 0.02).pass);
    CHECK_FALSE(make_report("a", 1, -10.0, -10.3, 0.02).pass);
    CHECK(make_report("a", 1, 0.5, 0.51, 0.02).pass);  // max(1, |paper|) = 1
    const ReproductionReport abs = make_absolute_report("p_crit", 2, 4.84, 4.80, 0.05);
    CHECK(abs.pass);
    CHECK(abs.tolerance * 4.84 == doctest::Approx(0.05));
    CHECK_FALSE(make_absolute_report("p_crit", 2, 4.84, 4.78, 0.05).pass);
    CHECK(make_check("c", 3, true).pass);
    CHECK_FALSE(make_check("c", 3, false).pass);
}

TEST_CASE("cheap criteria pass and serialize") {
    ReproduceOptions opts;
    opts.criteria = {4, 5};
    const auto rows = reproduce_all(opts);
    CHECK(rows.size() == 11 + 10);
    CHECK(all_passed(rows));
    const auto j = io::to_json(rows);
    CHECK(j["all_passed"] == true);
    CHECK(j["items"].size() == rows.size());
    CHECK(io::reproduction_csv(rows).find("log_curvature_at_1") != std::string::npos);
    CHECK_THROWS_AS(reproduce_criterion(9), InvalidArgument);
}
