#include "doctest.h"
#include "hardylab/specfun.hpp"

#include <cmath>
#include <numbers>

using namespace hardylab;
using std::numbers::pi;

TEST_SUITE("specfun") {

TEST_CASE("sphere areas") {
    CHECK(sphere_area(2) == doctest::Approx(2 * pi).epsilon(1e-14));
    CHECK(sphere_area(3) == doctest::Approx(4 * pi).epsilon(1e-14));
    CHECK(sphere_area(4) == doctest::Approx(2 * pi * pi).epsilon(1e-14));
}

TEST_CASE("cylinder eigenvalues") {
    CHECK(cylinder_eigenvalue(3, 0) == 0.0);
    CHECK(cylinder_eigenvalue(3, 1) == 2.0);
    CHECK(cylinder_eigenvalue(4, 2) == 8.0);
}

TEST_CASE("trigamma values and recurrence") {
    CHECK(trigamma(1.0) == doctest::Approx(pi * pi / 6).epsilon(1e-13));
    CHECK(trigamma(0.5) == doctest::Approx(pi * pi / 2).epsilon(1e-13));
    CHECK(trigamma(2.0) == doctest::Approx(trigamma(1.0) - 1.0).epsilon(1e-13));
    for (double x : {0.25, 0.5, 1.0, 2.5, 10.0})
        CHECK(std::abs(trigamma(x + 1) - trigamma(x) + 1 / (x * x)) <= 1e-12 * trigamma(x));
    CHECK_THROWS_AS(trigamma(0.0), DomainError);
    CHECK_THROWS_AS(trigamma(-1.5), DomainError);
}

TEST_CASE("Fourier Hardy constant") {
    CHECK(frac_hardy_constant_fourier(make_params(4, 1.0, 2)) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(frac_hardy_constant_fourier(make_params(3, 0.5, 2)) == doctest::Approx(2 / pi).epsilon(1e-13));
    CHECK(frac_hardy_constant_fourier(make_params(5, 1e-9, 2)) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("symbol basics") {
    for (int N : {3, 4, 5})
        for (double s : {0.25, 0.5, 0.9}) CHECK(std::abs(symbol_P(make_params(N, s, 2), 0.0, 0)) <= 1e-13);
    CHECK(symbol_P(make_params(3, 1.0, 2), 2.0, 1) == doctest::Approx(6.0).epsilon(1e-12));
    const Params P = make_params(4, 0.5, 2);
    for (double xi : {0.3, 1.7, 25.0})
        for (int ell : {0, 2}) {
            CHECK(symbol_P(P, xi, ell) == symbol_P(P, -xi, ell));
            CHECK(symbol_P(P, xi, ell) > 0.0);
        }
}

TEST_CASE("local-limit identity") {
    for (int N : {3, 4, 6}) {
        const Params P = make_params(N, 1.0, 2);
        for (double xi = 0.0; xi <= 40.0; xi += 0.7)
            for (int ell = 0; ell <= 6; ++ell) {
                const double ref = xi * xi + cylinder_eigenvalue(N, ell);
                CHECK(std::abs(symbol_P(P, xi, ell) - ref) <= 1e-9 * (1 + ref));
            }
    }
}

TEST_CASE("small-frequency limit is K squared") {
    const Params P = make_params(4, 0.5, 2);
    const double K = constant_K(P);
    CHECK(K * K == doctest::Approx(0.36781).epsilon(1e-4));
    auto q = [&](double xi) { return symbol_P(P, xi, 0) / (xi * xi); };
    const double h = 1e-2;
    const double r1 = (4 * q(h / 2) - q(h)) / 3, r2 = (4 * q(h / 4) - q(h / 2)) / 3;
    CHECK((16 * r2 - r1) / 15 == doctest::Approx(K * K).epsilon(1e-6));
}

TEST_CASE("multiplier") {
    const Params P = make_params(4, 0.5, 2);
    CHECK(multiplier_m(P, 0.0, 0) == constant_K(P));
    const double big = multiplier_m(P, 1e3, 0);
    CHECK(std::abs(big / std::pow(1e3, -0.5) - 1) <= 0.05);
    const Params L = make_params(4, 1.0, 2);
    for (double xi : {0.0, 0.5, 3.0, 80.0})
        for (int ell : {0, 1, 4}) CHECK(std::abs(multiplier_m(L, xi, ell) - 1) <= 1e-10);
}

TEST_CASE("K constant") {
    CHECK(constant_K(make_params(4, 1.0, 2)) == doctest::Approx(1.0).epsilon(1e-12));
    const double G = 0.915965594177219015;
    const double c4 = 2 * std::pow(std::tgamma(1.25) / std::tgamma(0.75), 2);
    const double k4 = 0.5 * std::sqrt((pi * pi - 8 * G) - (pi * pi + 8 * G - 16)) * std::sqrt(c4);
    CHECK(constant_K(make_params(4, 0.5, 2)) == doctest::Approx(k4).epsilon(1e-12));
    CHECK(constant_K(make_params(4, 0.5, 2)) == doctest::Approx(0.60647).epsilon(1e-4));
    const double k3 = 0.5 * std::sqrt(pi * pi / 3) * std::sqrt(2 / pi);
    CHECK(constant_K(make_params(3, 0.5, 2)) == doctest::Approx(k3).epsilon(1e-12));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make_params(0, 0.5, 2), DomainError);
    CHECK_THROWS_AS(make_params(3, 0.0, 2), DomainError);
    CHECK_THROWS_AS(make_params(3, 1.5, 2), DomainError);
    CHECK_THROWS_AS(make_params(3, 0.5, 0.5), DomainError);
    CHECK_THROWS_AS(make_params(2, 1.0, 2), DomainError);
}

}
