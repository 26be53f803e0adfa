// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "hardylab/battery.hpp"
#include "hardylab/constants.hpp"
#include "hardylab/cylinder.hpp"
#include "hardylab/deficits.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/stability.hpp"
#include "hardylab/uncertainty.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

using namespace hardylab;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Outcome {
    bool ok = true;
    std::string detail;
    void need(bool cond, const char* fmt, ...) __attribute__((format(printf, 3, 4)));
};

void Outcome::need(bool cond, const char* fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    if (!detail.empty()) detail += "; ";
    detail += buf;
    if (!cond) {
        ok = false;
        detail += " [violated]";
    }
}

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail += std::string(" exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < limit_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s criterion %d (%s): %s; runtime %.2fs (limit %.0fs%s)\n", pass ? "PASS" : "FAIL", id, title,
                o.detail.c_str(), secs, limit_s, in_time ? "" : ", exceeded");
    std::fflush(stdout);
}

bool nonincreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1])) return false;
    return true;
}

}  // namespace

int main() {
    criterion(1, "weak norm of the extremizer", 1.0, [](Outcome& o) {
        for (auto [N, s, p] : {std::tuple{3, 0.5, 2.0}, std::tuple{4, 1.0 / 3.0, 3.0}, std::tuple{2, 0.25, 1.5}}) {
            const Params P = make_params(N, s, p);
            const double ps = P.p_star();
            const double got = lorentz_norm(make_extremizer(P, 1.0), N, ps, INFINITY);
            const double want = std::pow(sphere_area(N) / N, 1.0 / ps);
            o.need(rel(got, want) <= 1e-6, "(%d,%.3g,%.3g) rel %.2e", N, s, p, rel(got, want));
        }
    });

    criterion(2, "local-limit symbol", 1.0, [](Outcome& o) {
        for (int N : {3, 4, 5}) {
            const Params P = make_params(N, 1.0, 2.0);
            double worst = 0.0;
            for (int ell = 0; ell <= 8; ++ell) {
                const double mu = cylinder_eigenvalue(N, ell);
                for (int i = 0; i <= 500; ++i) {
                    const double xi = 0.1 * i;
                    const double want = xi * xi + mu;
                    worst = std::max(worst, std::abs(symbol_P(P, xi, ell) - want) / (1.0 + want));
                }
            }
            o.need(worst <= 1e-9, "N=%d max %.2e", N, worst);
        }
    });

    criterion(3, "small-frequency limit of the symbol", 1.0, [](Outcome& o) {
        for (auto [N, s] : {std::pair{4, 0.5}, std::pair{3, 0.5}, std::pair{5, 0.75}}) {
            const Params P = make_params(N, s, 2.0);
            auto f = [&](double xi) { return symbol_P(P, xi, 0) / (xi * xi); };
            const double h = 1e-2;
            const double r1 = (4.0 * f(h / 2) - f(h)) / 3.0;
            const double r2 = (4.0 * f(h / 4) - f(h / 2)) / 3.0;
            const double extrap = (16.0 * r2 - r1) / 15.0;
            const double K = constant_K(P);
            o.need(rel(extrap, K * K) <= 1e-6, "(%d,%.2g) rel %.2e", N, s, rel(extrap, K * K));
        }
    });

    criterion(4, "Euler-Lagrange residual", 30.0, [](Outcome& o) {
        for (auto [N, s, p] : {std::tuple{3, 0.4, 2.0}, std::tuple{1, 0.3, 1.5}, std::tuple{4, 0.3, 3.0}}) {
            const ElResidual r = el_residual(make_params(N, s, p));
            o.need(r.residual <= 1e-3, "(%d,%.2g,%.2g) residual %.2e", N, s, p, r.residual);
        }
    });

    criterion(5, "p=2 constant consistency", 60.0, [](Outcome& o) {
        for (auto [N, s] : {std::pair{3, 0.5}, std::pair{4, 0.25}}) {
            const Params P = make_params(N, s, 2.0);
            const double C = sharp_constant_frac(P).value;
            const double e = std::abs(C - conversion_kappa(N, s) * frac_hardy_constant_fourier(P)) / C;
            o.need(e <= 1e-3, "(%d,%.2g) rel %.2e", N, s, e);
        }
    });

    criterion(6, "spectral deficit preservation", 5.0, [](Outcome& o) {
        double worst = 0.0;
        int count = 0;
        for (auto [N, s] : {std::pair{4, 0.5}, std::pair{3, 0.5}, std::pair{5, 0.25}}) {
            const Params P = make_params(N, s, 2.0);
            for (const auto& name : preset_names()) {
                const ModeSpectrum S = spectrum(lift(make_preset(name, P), N, s));
                const double frac = spectral_deficit_fractional(S, s);
                const double loc = spectral_deficit_local(apply_multiplier(S, N, s, Direction::Forward));
                worst = std::max(worst, rel(loc, frac));
                ++count;
            }
        }
        o.need(worst <= 1e-10, "%d profiles, max rel %.2e", count, worst);
    });

    criterion(7, "extremizer transport", 5.0, [](Outcome& o) {
        const int N = 4;
        const double s = 0.5;
        const Params P = make_params(N, s, 2.0);
        const double L = 8.0;
        const RadialProfile w = make_truncated_extremizer(P, 1.0, std::exp(-L), std::exp(L), 1.0);
        const TransformResult T = transform_T(w, N, s);
        const double K = constant_K(P);
        double worst = 0.0;
        for (int j = 0; j < T.profile.grid.n; ++j) {
            const double t = T.profile.grid.t(j);
            if (std::abs(t) > 0.5 * L) continue;
            const double want = K * std::exp(-0.5 * (N - 2) * t);
            worst = std::max(worst, rel(T.profile.values[j], want));
        }
        o.need(worst <= 1e-2, "window |t|<=%.0f, max rel %.2e", 0.5 * L, worst);
    });

    criterion(8, "remainder identity at p=2", 120.0, [](Outcome& o) {
        const Params P = make_params(3, 0.5, 2.0);
        for (const char* name : {"trunc-ext", "gauss"}) {
            const DeficitReport d = fractional_deficit(make_preset(name, P), P, RemainderKind::Eps);
            const double e = std::abs(d.deficit - d.remainder) / d.deficit;
            o.need(e <= 1e-3, "%s rel %.2e", name, e);
        }
    });

    criterion(9, "remainder inequalities", 600.0, [](Outcome& o) {
        const char* all[] = {"gauss", "trunc-ext", "sign-change"};
        const char* nonneg[] = {"gauss", "trunc-ext"};
        for (double p : {2.5, 3.0}) {
            const Params P = make_params(3, 0.5, p);
            double worst = INFINITY;
            for (const char* name : all) {
                const DeficitReport d = fractional_deficit(make_preset(name, P), P, RemainderKind::Eps);
                const double tol = d.quad_error + 1e-8 * d.energy;
                worst = std::min(worst, (d.deficit - remainder_constant_cp(p) * d.remainder) / tol);
            }
            o.need(worst >= -1.0, "frac p=%.2g min margin/tol %.3g", p, worst);
        }
        for (double p : {1.3, 1.5, 1.8}) {
            const Params P = make_params(3, 0.5, p);
            double w1 = INFINITY, w2 = INFINITY;
            for (const char* name : nonneg) {
                const DeficitReport d = fractional_deficit(make_preset(name, P), P, RemainderKind::EpsW);
                const double tol = d.quad_error + 1e-8 * d.energy;
                w1 = std::min(w1, (d.deficit - remainder_constant_cp_star(p) * d.remainder) / tol);
                w2 = std::min(w2, (d.deficit - remainder_constant_cp_star_nonneg(p) * d.remainder) / tol);
            }
            o.need(w1 >= -1.0 && w2 >= -1.0, "frac p=%.2g margins/tol %.3g, %.3g", p, w1, w2);
        }
        for (double p : {2.0, 2.5}) {
            double worst = INFINITY;
            for (const char* name : all) {
                const DeficitReport d = local_deficit(make_preset(name, make_params(3, 1.0, p)), 3, p, true);
                const double tol = d.quad_error + 1e-8 * d.energy;
                worst = std::min(worst, (d.deficit - remainder_constant_cp(p) * d.remainder) / tol);
            }
            o.need(worst >= -1.0, "local p=%.2g min margin/tol %.3g", p, worst);
        }
        for (double p : {1.3, 1.5, 1.8}) {
            double worst = INFINITY;
            for (const char* name : nonneg) {
                const DeficitReport d = local_deficit(make_preset(name, make_params(3, 1.0, p)), 3, p, true);
                const double tol = d.quad_error + 1e-8 * d.energy;
                worst = std::min(worst, (d.deficit - d.remainder) / tol);
            }
            o.need(worst >= -1.0, "local p=%.2g min margin/tol %.3g", p, worst);
        }
    });

    criterion(10, "uncertainty sharpness", 30.0, [](Outcome& o) {
        const int N = 4;
        const double s = 0.5;
        const Params P = make_params(N, s, 2.0);
        const UncertaintyReport eq = uncertainty_report(make_preset("cyl-gauss", P, {}, 1.0), N, s);
        o.need(std::abs(eq.ratio - 0.25) <= 1e-6, "equality state ratio %.10f", eq.ratio);
        double lowest = INFINITY;
        for (const char* name : {"gauss", "trunc-ext", "trunc-sharp", "sign-change", "cyl-gauss"})
            lowest = std::min(lowest, uncertainty_report(make_preset(name, P), N, s).ratio);
        o.need(lowest >= 0.25 - 1e-6, "battery min ratio %.8f", lowest);
        const auto rows = gaussian_sharpness_scan(N, s, 1.0, {4.0, 8.0, 12.0});
        std::vector<double> ratios;
        for (const auto& r : rows) ratios.push_back(r.ratio);
        o.need(nonincreasing(ratios), "scan ratios %.6f, %.6f, %.6f", ratios[0], ratios[1], ratios[2]);
        o.need(rows.back().gap <= 1e-4 && rows.back().gap >= -1e-6, "gap at R=12 %.2e", rows.back().gap);
    });

    criterion(11, "closed-form spot values", 1.0, [](Outcome& o) {
        o.need(std::abs(remainder_constant_cp(3.0) - (2.0 - std::sqrt(2.0))) <= 1e-10, "c_3 %.12f",
               remainder_constant_cp(3.0));
        o.need(std::abs(remainder_constant_cp(4.0) - 1.0 / 3.0) <= 1e-10, "c_4 %.12f", remainder_constant_cp(4.0));
        o.need(remainder_constant_cp(2.0) == 1.0, "c_2 %.17g", remainder_constant_cp(2.0));
        o.need(std::abs(sharp_constant_local(4, 2.0) - 1.0) <= 1e-12, "C_4 %.17g", sharp_constant_local(4, 2.0));
        const double d = local_deficit(make_gaussian(1.0), 3, 2.0).deficit;
        const double want = std::pow(std::numbers::pi, 1.5);
        o.need(rel(d, want) <= 1e-4, "Gaussian local deficit rel %.2e", rel(d, want));
    });

    criterion(12, "invariant battery", 600.0, [](Outcome& o) {
        const BatteryResult b = run_battery();
        std::string failed;
        for (const auto& c : b.checks)
            if (!c.pass) failed += " " + c.name;
        o.need(b.all_pass(), "%zu checks, %d failed%s", b.checks.size(), b.failures(), failed.c_str());
    });

    criterion(13, "stability scans", 600.0, [](Outcome& o) {
        struct Case {
            const char* label;
            Params P;
            Regime regime;
        };
        for (const Case& c : {Case{"(3,1/2,2)", make_params(3, 0.5, 2.0), Regime::FracPGe2},
                              Case{"local (3,2)", make_params(3, 1.0, 2.0), Regime::Local}}) {
            const ScanTable t = family_scan(Family::Window, {4.0, 8.0, 12.0}, c.P, c.regime);
            std::vector<double> def, dist;
            for (const auto& r : t.rows) {
                def.push_back(r.deficit);
                dist.push_back(r.distance.value);
            }
            o.need(nonincreasing(def) && nonincreasing(dist) && t.floor > 0.0,
                   "%s deficit %.4g>%.4g>%.4g distance %.4g>%.4g>%.4g ratio floor %.4g", c.label, def[0], def[1],
                   def[2], dist[0], dist[1], dist[2], t.floor);
        }
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
