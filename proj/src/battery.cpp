#include "hardylab/battery.hpp"

#include "hardylab/cylinder.hpp"
#include "hardylab/deficits.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hardylab {

std::vector<std::string> preset_names() {
    return {"gauss", "trunc-ext", "trunc-sharp", "extremizer", "cyl-gauss", "sign-change", "ext-gauss"};
}

RadialProfile make_preset(const std::string& name, const Params& P, const GridSpec& grid, double alpha) {
    if (name == "gauss") return make_gaussian(1.0, grid);
    if (name == "trunc-ext") return make_truncated_extremizer(P, 1.0, std::exp(-4.0), std::exp(4.0), 1.0, grid);
    if (name == "trunc-sharp") return make_truncated_extremizer(P, 1.0, std::exp(-4.0), std::exp(4.0), 0.0, grid);
    if (name == "extremizer") return make_extremizer(P, 1.0, grid);
    if (name == "cyl-gauss") {
        if (P.local()) throw DomainError("cyl-gauss needs 0 < s < 1");
        RadialProfile u = inverse_transform_T(make_cylinder_gaussian(P.N, 1.0, 1.0, alpha, grid), P.N, P.s).profile;
        u.label = "cyl-gauss";
        return u;
    }
    if (name == "sign-change") {
        RadialProfile u = combine(make_gaussian(1.0, grid), 1.0, make_gaussian(2.0, grid), -0.5);
        u.label = "sign-change";
        return u;
    }
    if (name == "ext-gauss") {
        RadialProfile u = combine(make_extremizer(P, 1.0, grid), 1.0, make_gaussian(1.0, grid), 1.0);
        u.label = "ext-gauss";
        return u;
    }
    throw DomainError("unknown preset '" + name + "'");
}

bool BatteryResult::all_pass() const { return failures() == 0; }

int BatteryResult::failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

struct Recorder {
    BatteryResult& out;
    // discrepancy must not exceed tol
    void close(const std::string& name, double value, double tol) {
        out.checks.push_back({name, value, tol, std::isfinite(value) && value <= tol});
    }
    // margin must be >= -tol
    void at_least(const std::string& name, double margin, double tol) {
        out.checks.push_back({name, margin, tol, std::isfinite(margin) && margin >= -tol});
    }
};

}  // namespace

BatteryResult run_battery(const GridSpec& grid, std::uint64_t seed) {
    BatteryResult res;
    Recorder rec{res};
    const Params P = make_params(3, 0.5, 2.0);
    const double e = std::exp(1.0);

    std::vector<std::string> members{"gauss", "trunc-ext", "sign-change"};
    if (seed != 0) std::shuffle(members.begin(), members.end(), std::mt19937_64(seed));

    // fractional and local deficits
    for (const auto& name : members) {
        const RadialProfile u = make_preset(name, P, grid);
        const DeficitReport d = fractional_deficit(u, P);
        rec.at_least("deficit_nonneg/" + name, d.deficit, d.quad_error);
        const DeficitReport l = local_deficit(u, 3, 2.0);
        rec.at_least("local_deficit_nonneg/" + name, l.deficit, l.quad_error);
    }
    for (double p : {1.5, 3.0}) {
        const Params Q = make_params(3, 0.5, p);
        for (const char* name : {"gauss", "trunc-ext"}) {
            const DeficitReport d = fractional_deficit(make_preset(name, Q, grid), Q);
            char buf[64];
            std::snprintf(buf, sizeof buf, "deficit_nonneg_p%.2g/%s", p, name);
            rec.at_least(buf, d.deficit, d.quad_error);
        }
    }
    {
        const RadialProfile g = make_preset("gauss", P, grid);
        const DeficitReport d = fractional_deficit(g, P);
        const DeficitReport d2 = fractional_deficit(scaled(g, 2.0), P);
        rec.close("deficit_homogeneity/gauss", rel(d2.deficit, 4.0 * d.deficit), 1e-9);
        const DeficitReport dl = fractional_deficit(dilate(g, e), P);
        const double f = std::pow(e, P.N - P.sp());
        rec.close("energy_dilation/gauss", rel(dl.energy, f * d.energy), 1e-4);
        rec.close("deficit_dilation/gauss", rel(dl.deficit, f * d.deficit), 1e-4);
        const double E = local_dirichlet_energy(g, 3, 2.0);
        rec.close("local_energy_dilation/gauss", rel(local_dirichlet_energy(dilate(g, e), 3, 2.0), e * E), 1e-6);
    }

    // subadditivity for the three kernel weights
    {
        const RadialProfile u = make_preset("sign-change", P, grid);
        const RadialProfile up = positive_part(u), um = negative_part(u);
        const double full = gagliardo_seminorm(u, P).value;
        rec.at_least("subadditive/unweighted", full - gagliardo_seminorm(up, P).value - gagliardo_seminorm(um, P).value,
                     1e-8 * full);
        const double eps = weighted_remainder_eps(u, P).value;
        rec.at_least("subadditive/symmetric_power",
                     eps - weighted_remainder_eps(up, P).value - weighted_remainder_eps(um, P).value, 1e-8 * eps);
        const Params Q = make_params(3, 0.5, 1.5);
        const double ew = weighted_remainder_eps_w(u, Q).value;
        rec.at_least("subadditive/minmax",
                     ew - weighted_remainder_eps_w(up, Q).value - weighted_remainder_eps_w(um, Q).value, 1e-8 * ew);
    }

    // norms
    const double ps = P.p_star();
    for (const char* name : {"gauss", "trunc-ext", "trunc-sharp", "sign-change", "ext-gauss"}) {
        const RadialProfile u = make_preset(name, P, grid);
        const std::string tag = std::string("/") + name;
        const double w = lorentz_norm(u, 3, ps, INFINITY);
        rec.close("weak_homogeneity" + tag, rel(lorentz_norm(scaled(u, 3.0), 3, ps, INFINITY), 3.0 * w), 1e-9);
        rec.close("weak_dilation" + tag, rel(lorentz_norm(dilate(u, e), 3, ps, INFINITY), std::pow(e, 3.0 / ps) * w),
                  1e-6);
        const double s = lorentz_norm(u, 3, ps, P.p);
        if (!std::isfinite(s)) continue;
        rec.close("lorentz_homogeneity" + tag, rel(lorentz_norm(scaled(u, 3.0), 3, ps, P.p), 3.0 * s), 1e-9);
        rec.close("lorentz_dilation" + tag, rel(lorentz_norm(dilate(u, e), 3, ps, P.p), std::pow(e, 3.0 / ps) * s),
                  1e-6);
        rec.close("layer_cake_two_routes" + tag, rel(lorentz_norm_rearranged(u, 3, ps, P.p), s), 1e-6);
        rec.at_least("weak_below_strong" + tag, std::pow(P.p / ps, 1.0 / P.p) * s - w, 1e-9 * s);
        const double H = hardy_potential(u, P);
        if (std::isfinite(H))
            rec.at_least("hardy_lorentz_bound" + tag, std::pow(sphere_area(3) / 3.0, P.sp() / 3.0) * std::pow(s, P.p) - H,
                         1e-8 * H);
    }

    // distances
    for (const char* name : {"gauss", "trunc-ext"}) {
        const RadialProfile u = make_preset(name, P, grid);
        const std::string tag = std::string("/") + name;
        const double d = distance_dsp(u, P).value;
        rec.close("distance_homogeneity" + tag, std::abs(distance_dsp(scaled(u, 3.0), P).value - d), 1e-9);
        rec.close("distance_dilation" + tag, std::abs(distance_dsp(dilate(u, e), P).value - d), 1e-6);
    }

    // cylinder identities
    for (const auto& name : members) {
        const Params Q = make_params(4, 0.5, 2.0);
        const RadialProfile u = make_preset(name, Q, grid);
        const std::string tag = "/" + name;
        const CylinderSignal phi = lift(u, 4, 0.5);
        const ModeSpectrum S = spectrum(phi);
        rec.close("plancherel" + tag, rel(S.mass(), phi.mass()), 1e-12);
        rec.close("lift_isometry" + tag, rel(phi.mass(), hardy_potential(u, make_params(4, 0.5, 2.0))), 1e-6);
        const RadialProfile back = unlift(phi, 4, 0.5);
        double rt = 0.0, scale = 0.0;
        for (int j = 0; j < grid.n; ++j) {
            rt = std::max(rt, std::abs(back.values[j] - u.values[j]));
            scale = std::max(scale, std::abs(u.values[j]));
        }
        rec.close("lift_round_trip" + tag, rt / scale, 1e-12);
        const CylinderSignal again = inverse_spectrum(S);
        double st = 0.0, sc = 0.0;
        for (int j = 0; j < grid.n; ++j) {
            st = std::max(st, std::abs(again.modes[0].data[j] - phi.modes[0].data[j]));
            sc = std::max(sc, std::abs(phi.modes[0].data[j]));
        }
        rec.close("spectrum_round_trip" + tag, st / sc, 1e-12);
        const ModeSpectrum M = apply_multiplier(S, 4, 0.5, Direction::Forward);
        rec.close("deficit_preservation" + tag,
                  rel(spectral_deficit_local(M), spectral_deficit_fractional(S, 0.5)), 1e-10);
        const ModeSpectrum B = apply_multiplier(M, 4, 0.5, Direction::Inverse);
        double mi = 0.0;
        for (std::size_t k = 0; k < S.xi.size(); ++k)
            mi = std::max(mi, std::abs(B.modes[0].data[k] - S.modes[0].data[k]));
        double ms = 0.0;
        for (const auto& z : S.modes[0].data) ms = std::max(ms, std::abs(z));
        rec.close("multiplier_round_trip" + tag, mi / ms, 1e-10);
        rec.at_least("T_bounded" + tag, multiplier_sup(S, 0.5, 8) * std::sqrt(S.mass()) - std::sqrt(M.mass()),
                     1e-12 * std::sqrt(M.mass()));
        const UncertaintyReport ur = uncertainty_report(u, 4, 0.5);
        rec.at_least("uncertainty_floor" + tag, ur.ratio - 0.25, 1e-6);
    }
    {
        const Params Q = make_params(4, 0.5, 2.0);
        const UncertaintyReport ur = uncertainty_report(make_preset("cyl-gauss", Q, grid), 4, 0.5);
        rec.close("uncertainty_equality/cyl-gauss", std::abs(ur.ratio - 0.25), 1e-6);
    }
    return res;
}

}  // namespace hardylab
