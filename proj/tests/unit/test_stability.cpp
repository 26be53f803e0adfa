#include "doctest.h"
#include "hardylab/stability.hpp"

#include <cmath>

using namespace hardylab;

TEST_SUITE("stability") {

TEST_CASE("regime names round trip") {
    for (Regime r : {Regime::FracPGe2, Regime::FracPLt2, Regime::Local, Regime::PullbackP2})
        CHECK(parse_regime(regime_name(r)) == r);
    for (Family f : {Family::Window, Family::Perturb, Family::Gauss}) CHECK(parse_family(family_name(f)) == f);
    CHECK_THROWS(parse_regime("bogus"));
}

TEST_CASE("ratio is amplitude invariant") {
    const RadialProfile g = make_gaussian(1.0);
    const struct {
        Params P;
        Regime r;
    } cases[] = {{make_params(3, 0.5, 2), Regime::FracPGe2},
                 {make_params(3, 0.5, 1.5), Regime::FracPLt2},
                 {make_params(3, 1.0, 2), Regime::Local},
                 {make_params(4, 0.5, 2), Regime::PullbackP2}};
    for (const auto& c : cases) {
        const StabilityReport a = stability_report(g, c.P, c.r), b = stability_report(scaled(g, 3.0), c.P, c.r);
        CHECK(a.error.empty());
        CHECK(a.ratio > 0.0);
        CHECK(std::isfinite(a.ratio));
        CHECK(b.ratio == doctest::Approx(a.ratio).epsilon(1e-6));
    }
}

TEST_CASE("family scan") {
    const Params P = make_params(3, 0.5, 2);
    const std::vector<double> grid{4, 8, 12};
    const ScanTable t = family_scan(Family::Window, grid, P, Regime::FracPGe2);
    REQUIRE(t.rows.size() == grid.size());
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        CHECK(t.rows[i].distance.value < t.rows[i - 1].distance.value);
        CHECK(t.rows[i].deficit < t.rows[i - 1].deficit);
    }
    CHECK(t.floor > 0.0);
    const ScanTable again = family_scan(Family::Window, grid, P, Regime::FracPGe2);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        CHECK(again.rows[i].ratio == t.rows[i].ratio);
        CHECK(again.rows[i].distance.value == t.rows[i].distance.value);
    }
}

}
