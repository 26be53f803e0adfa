#include "doctest.h"
#include "hardylab/norms.hpp"
#include "hardylab/profiles.hpp"

#include <cmath>
#include <numbers>

using namespace hardylab;
using std::numbers::pi;

TEST_SUITE("profiles") {

TEST_CASE("extremizer") {
    const Params P = make_params(3, 0.5, 2);
    const RadialProfile w = make_extremizer(P, 1.0);
    CHECK(evaluate(w, 1.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(evaluate(w, 4.0) == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(evaluate(make_extremizer(P, 2.5), 1.0) == doctest::Approx(2.5).epsilon(1e-9));
    CHECK(w.inner.leading(false) == doctest::Approx(-P.gamma()));
    CHECK(w.outer.leading(true) == doctest::Approx(-P.gamma()));
    CHECK(evaluate(w, 1e8) == doctest::Approx(1e-8).epsilon(1e-12));
    CHECK(derivative(w, 1.0) == doctest::Approx(-P.gamma()).epsilon(1e-6));
}

TEST_CASE("truncated extremizer") {
    const Params P = make_params(3, 0.5, 2);
    const RadialProfile w = make_extremizer(P, 1.0);
    const RadialProfile tr = make_truncated_extremizer(P, 1.0, std::exp(-4.0), std::exp(4.0), 1.0);
    for (double t = -2.95; t <= 2.95; t += 0.37) CHECK(tr.at(t) == doctest::Approx(w.at(t)).epsilon(1e-14));
    CHECK(tr.at(-4.5) == 0.0);
    CHECK(tr.at(4.5) == 0.0);

    const double rin = std::exp(-3.0), rout = std::exp(5.0);
    const RadialProfile sharp = make_truncated_extremizer(P, 1.0, rin, rout, 0.0);
    CHECK(hardy_potential(sharp, P) == doctest::Approx(4 * pi * std::log(rout / rin)).epsilon(1e-10));
    CHECK_THROWS_AS(make_truncated_extremizer(P, 1.0, 1.0, 2.0, 1.0), DomainError);
}

TEST_CASE("gaussian") {
    const RadialProfile g = make_gaussian(1.0);
    CHECK(evaluate(g, 1e-9) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(evaluate(g, 1.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-9));
    CHECK(evaluate(make_gaussian(2.0), 2.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-9));
    CHECK(g.outer.zero());
    double prev = 2.0;
    for (double r = 1e-3; r < 8; r *= 1.3) {
        const double v = evaluate(g, r);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(derivative(g, 1.0) == doctest::Approx(-std::exp(-0.5)).epsilon(1e-6));
}

TEST_CASE("cylinder gaussian") {
    const RadialProfile c = make_cylinder_gaussian(4, 1.0, 1.7, 1.0);
    CHECK(evaluate(c, 1.0) == doctest::Approx(1.7).epsilon(1e-9));
    const double r = std::exp(0.8);
    CHECK(evaluate(c, r) == doctest::Approx(1.7 * std::pow(r, -1.0) * std::exp(-0.64)).epsilon(1e-9));
}

TEST_CASE("grid nodes and interpolation") {
    const RadialProfile g = make_gaussian(1.0);
    for (int j : {0, 100, 1023, 1500, 2047}) CHECK(g.at(g.grid.t(j)) == g.values[j]);
    const GridSpec fine{-12, 12, 8192};
    const RadialProfile gf = make_gaussian(1.0, fine);
    for (double t = -2.0; t < 1.5; t += 0.173)
        CHECK(g.at(t) == doctest::Approx(gf.at(t)).epsilon(1e-6));
}

TEST_CASE("dilation and scaling are exact") {
    const RadialProfile g = make_gaussian(1.0);
    const RadialProfile d = dilate(g, std::exp(1.0));
    for (double r : {0.3, 1.0, 2.2}) CHECK(evaluate(d, r * std::exp(1.0)) == doctest::Approx(evaluate(g, r)).epsilon(1e-14));
    const RadialProfile s = scaled(g, -3.0);
    CHECK(evaluate(s, 0.7) == doctest::Approx(-3 * evaluate(g, 0.7)).epsilon(1e-14));
}

TEST_CASE("positive and negative parts") {
    const Params P = make_params(3, 0.5, 2);
    const RadialProfile u = combine(make_gaussian(1.0), 1.0, make_gaussian(2.0), -0.8);
    const RadialProfile pp = positive_part(u), np = negative_part(u);
    for (int j = 0; j < u.grid.n; j += 37) {
        CHECK(pp.values[j] >= 0.0);
        CHECK(np.values[j] >= 0.0);
        CHECK(pp.values[j] - np.values[j] == doctest::Approx(u.values[j]).epsilon(1e-15));
    }
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS((GridSpec{1.0, 0.0, 100}.validate()), DomainError);
    CHECK_THROWS_AS((GridSpec{-1.0, 1.0, 4}.validate()), DomainError);
    CHECK_THROWS_AS(evaluate(make_gaussian(1.0), 0.0), DomainError);
}

}
