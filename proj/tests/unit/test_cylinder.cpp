#include "doctest.h"
#include "hardylab/cylinder.hpp"
#include "hardylab/deficits.hpp"

#include <cmath>
#include <numbers>

using namespace hardylab;
using std::numbers::pi;

namespace {
double max_abs_diff(const RadialProfile& a, const RadialProfile& b, double t0, double t1) {
    double m = 0.0;
    for (double t = t0; t <= t1; t += 0.01) m = std::max(m, std::abs(a.at(t) - b.at(t)));
    return m;
}
}  // namespace

TEST_SUITE("cylinder") {

TEST_CASE("lift of extremizer and cylinder Gaussian") {
    const int N = 4;
    const double s = 0.5;
    const CylinderSignal w = lift(make_extremizer(make_params(N, s, 2), 1.0), N, s);
    REQUIRE(w.modes.size() == 1);
    for (int j = 0; j < w.grid.n; j += 97)
        CHECK(std::abs(w.modes[0].data[j] - std::sqrt(sphere_area(N))) <= 1e-12);

    const CylinderSignal g = lift(make_cylinder_gaussian(N, 0.7, 1.3, 2.0), N, 0.7);
    for (int j = 0; j < g.grid.n; j += 97) {
        const double t = g.grid.t(j);
        CHECK(std::abs(g.modes[0].data[j] - 1.3 * std::sqrt(sphere_area(N)) * std::exp(-2 * t * t)) <= 1e-12);
    }
}

TEST_CASE("lift is an isometry and unlift inverts it") {
    const Params P = make_params(4, 0.5, 2);
    const RadialProfile tr = make_truncated_extremizer(P, 1.0, std::exp(-4.0), std::exp(4.0), 1.0);
    const CylinderSignal phi = lift(tr, 4, 1.0);
    const double direct =
        sphere_area(4) * integrate_grid(tr, [](double t, double v, double) { return v * v * std::exp(2 * t); });
    CHECK(phi.mass() == doctest::Approx(direct).epsilon(1e-6));

    const RadialProfile back = unlift(phi, 4, 1.0);
    for (int j = 0; j < tr.grid.n; ++j) CHECK(back.values[j] == doctest::Approx(tr.values[j]).epsilon(1e-12).scale(1.0));

    std::vector<cplx> ones(phi.grid.n, cplx(1.0));
    const RadialProfile c = unlift(mode_signal(phi.grid, 4, 1.0, 0, 1, ones), 4, 1.0);
    CHECK(evaluate(c, 2.0) == doctest::Approx(0.5 / std::sqrt(sphere_area(4))).epsilon(1e-9));

    std::vector<cplx> gs(phi.grid.n);
    for (int j = 0; j < phi.grid.n; ++j) gs[j] = std::exp(-phi.grid.t(j) * phi.grid.t(j));
    const RadialProfile ug = unlift(mode_signal(phi.grid, 4, 1.0, 0, 1, gs), 4, 1.0);
    const RadialProfile ref = make_cylinder_gaussian(4, 1.0, 1.0 / std::sqrt(sphere_area(4)), 1.0);
    CHECK(max_abs_diff(ug, ref, -5, 5) <= 1e-12);

    CHECK_THROWS_AS(unlift(mode_signal(phi.grid, 4, 1.0, 2, 1, gs), 4, 1.0), DomainError);
}

TEST_CASE("multiplier properties") {
    const GridSpec grid{-12, 12, 512};
    std::vector<cplx> data(grid.n);
    for (int j = 0; j < grid.n; ++j) data[j] = std::exp(-0.5 * grid.t(j) * grid.t(j)) * cplx(1.0, 0.3 * grid.t(j));
    for (int ell : {0, 2}) {
        const ModeSpectrum S = spectrum(mode_signal(grid, 4, 1.0, ell, 1, data));
        const ModeSpectrum id = apply_multiplier(S, 4, 1.0, Direction::Forward);
        const ModeSpectrum rt = apply_multiplier(apply_multiplier(S, 4, 0.5, Direction::Forward), 4, 0.5, Direction::Inverse);
        for (std::size_t k = 0; k < S.xi.size(); ++k) {
            CHECK(std::abs(id.modes[0].data[k] - S.modes[0].data[k]) <= 1e-10 * (1 + std::abs(S.modes[0].data[k])));
            CHECK(std::abs(rt.modes[0].data[k] - S.modes[0].data[k]) <= 1e-10 * (1 + std::abs(S.modes[0].data[k])));
        }
    }
    const ModeSpectrum S = spectrum(mode_signal(grid, 4, 1.0, 0, 1, data));
    const ModeSpectrum M = apply_multiplier(S, 4, 0.5, Direction::Forward);
    REQUIRE(S.xi[0] == 0.0);
    CHECK(M.modes[0].data[0] == S.modes[0].data[0] * constant_K(make_params(4, 0.5, 2)));

    const CylinderSignal back = inverse_spectrum(S);
    for (int j = 0; j < grid.n; ++j) CHECK(std::abs(back.modes[0].data[j] - data[j]) <= 1e-12);
    CHECK(S.mass() == doctest::Approx(mode_signal(grid, 4, 1.0, 0, 1, data).mass()).epsilon(1e-12));
}

TEST_CASE("transform T") {
    const int N = 4;
    const double s = 0.5;
    const Params P = make_params(N, s, 2);
    const RadialProfile tr = make_truncated_extremizer(P, 1.0, std::exp(-6.0), std::exp(6.0), 1.0);
    const TransformResult T = transform_T(tr, N, s);
    const double K = constant_K(P);
    const RadialProfile w1 = make_extremizer(make_params(N, 1.0, 2), K);
    for (double t = -3.0; t <= 3.0; t += 0.25) CHECK(T.profile.at(t) == doctest::Approx(w1.at(t)).epsilon(1e-2));

    const RadialProfile u = make_gaussian(1.0);
    const double lam = std::exp(16 * u.grid.dt());
    const RadialProfile lhs = transform_T(dilate(u, 1 / lam), N, s).profile;
    const RadialProfile rhs = transform_T(u, N, s).profile;
    double worst = 0.0, scale = 0.0;
    for (int j = 200; j < u.grid.n - 200; ++j) {
        const double t = u.grid.t(j);
        worst = std::max(worst, std::abs(lhs.at(t) - std::pow(lam, s - 1) * rhs.at(t + std::log(lam))));
        scale = std::max(scale, std::abs(lhs.at(t)));
    }
    CHECK(worst <= 1e-6 * scale);

    const RadialProfile w = make_cylinder_gaussian(N, s, 1.0, 0.7);
    const RadialProfile sum = transform_T(combine(u, 1.0, w, 1.0), N, s).profile;
    const RadialProfile parts = combine(rhs, 1.0, transform_T(w, N, s).profile, 1.0);
    double gap = 0.0, size = 0.0;
    for (int j = 0; j < u.grid.n; ++j) {
        if (std::abs(u.grid.t(j)) > 6.0) continue;
        gap = std::max(gap, std::abs(sum.values[j] - parts.values[j]));
        size = std::max(size, std::abs(parts.values[j]));
    }
    CHECK(gap <= 1e-12 * size);

    const RadialProfile inv = inverse_transform_T(transform_T(w, N, s).profile, N, s).profile;
    CHECK(max_abs_diff(inv, w, -6, 6) <= 1e-10);
}

TEST_CASE("spectral deficits") {
    const int N = 4;
    const GridSpec grid{};
    std::vector<cplx> g(grid.n);
    for (int j = 0; j < grid.n; ++j) g[j] = std::sqrt(sphere_area(N)) * std::exp(-grid.t(j) * grid.t(j));
    const CylinderSignal phi = mode_signal(grid, N, 1.0, 0, 1, g);
    const double ref = 2 * pi * pi * std::sqrt(pi / 2);
    const double loc = spectral_deficit_local(phi);
    CHECK(loc == doctest::Approx(ref).epsilon(1e-8));
    CHECK(loc == doctest::Approx(24.7394).epsilon(1e-5));
    const RadialProfile u = unlift(phi, N, 1.0);
    CHECK(local_deficit(u, N, 2).deficit == doctest::Approx(loc).epsilon(1e-3));

    std::vector<cplx> shifted(grid.n);
    for (int j = 0; j < grid.n; ++j) {
        const double t = grid.t(j) - 10 * grid.dt();
        shifted[j] = std::sqrt(sphere_area(N)) * std::exp(-t * t);
    }
    CHECK(spectral_deficit_local(mode_signal(grid, N, 1.0, 0, 1, shifted)) == doctest::Approx(loc).epsilon(1e-10));

    const CylinderSignal fs = lift(make_gaussian(1.0), N, 0.5);
    const ModeSpectrum S = spectrum(fs);
    CHECK(spectral_deficit_local(apply_multiplier(S, N, 0.5, Direction::Forward)) ==
          doctest::Approx(spectral_deficit_fractional(S, 0.5)).epsilon(1e-10));
    CHECK(spectral_deficit_fractional(phi, 1.0) == doctest::Approx(loc).epsilon(1e-9));
}

}
