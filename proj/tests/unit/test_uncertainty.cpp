#include "doctest.h"
#include "hardylab/cylinder.hpp"
#include "hardylab/uncertainty.hpp"

#include <cmath>
#include <numbers>

using namespace hardylab;
using std::numbers::pi;

TEST_SUITE("uncertainty") {

TEST_CASE("transformed mass and variance of the equality state") {
    const int N = 4;
    const double s = 0.5;
    const RadialProfile u = inverse_transform_T(make_cylinder_gaussian(N, 1.0, 1.0, 1.0), N, s).profile;
    const double M = transformed_mass(u, N, s);
    CHECK(M == doctest::Approx(2 * pi * pi * std::sqrt(pi / 2)).epsilon(1e-8));
    CHECK(transformed_variance(u, N, s) == doctest::Approx(M / 4).epsilon(1e-8));
    CHECK(transformed_mass(scaled(u, 3.0), N, s) == doctest::Approx(9 * M).epsilon(1e-10));

    const UncertaintyReport r = uncertainty_report(u, N, s);
    CHECK(std::abs(r.ratio - 0.25) <= 1e-6);
    const UncertaintyReport d = uncertainty_report(dilate(u, std::exp(0.5)), N, s);
    CHECK(std::abs(d.ratio_centered - r.ratio_centered) <= 1e-6);
}

TEST_CASE("strict inequality off the equality state") {
    for (const RadialProfile& u : {make_gaussian(1.0), make_truncated_extremizer(make_params(4, 0.5, 2), 1.0, 0.05, 20.0, 1.0)}) {
        const UncertaintyReport r = uncertainty_report(u, 4, 0.5);
        CHECK(r.ratio > 0.25);
    }
}

TEST_CASE("sharpness scan") {
    for (double alpha : {0.5, 1.0, 2.0}) {
        const auto rows = gaussian_sharpness_scan(4, 0.5, alpha, {4, 8, 12});
        REQUIRE(rows.size() == 3);
        CHECK(rows[0].ratio > rows[1].ratio);
        CHECK(rows[1].ratio > rows[2].ratio);
        CHECK(rows[2].gap <= 1e-4);
        CHECK(rows[2].gap >= -1e-9);
    }
}

}
