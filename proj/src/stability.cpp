#include "hardylab/stability.hpp"

#include "hardylab/cylinder.hpp"
#include "hardylab/deficits.hpp"
#include "hardylab/parallel.hpp"
#include "hardylab/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hardylab {

Regime parse_regime(const std::string& name) {
    if (name == "frac_p_ge_2") return Regime::FracPGe2;
    if (name == "frac_p_lt_2") return Regime::FracPLt2;
    if (name == "local") return Regime::Local;
    if (name == "pullback_p2") return Regime::PullbackP2;
    throw DomainError("unknown regime '" + name + "'");
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::FracPGe2: return "frac_p_ge_2";
        case Regime::FracPLt2: return "frac_p_lt_2";
        case Regime::Local: return "local";
        case Regime::PullbackP2: return "pullback_p2";
    }
    return "";
}

double stability_exponent(Regime r, double p) {
    switch (r) {
        case Regime::FracPGe2: return 2.0 * p;
        case Regime::FracPLt2: return 4.0;
        case Regime::Local: return std::max(4.0, 2.0 * p);
        case Regime::PullbackP2: return 4.0;
    }
    return 0.0;
}

StabilityReport stability_report(const RadialProfile& u, const Params& P, Regime regime) {
    StabilityReport r;
    r.params = P;
    r.regime = regime;
    r.exponent = stability_exponent(regime, P.p);
    switch (regime) {
        case Regime::FracPGe2: {
            if (P.local() || P.p < 2.0) throw DomainError("frac_p_ge_2 needs 0 < s < 1 and p >= 2");
            const DeficitReport d = fractional_deficit(u, P);
            r.deficit = d.deficit;
            r.hardy = d.hardy;
            r.quad_error = d.quad_error;
            r.distance = distance_dsp(u, P);
            break;
        }
        case Regime::FracPLt2: {
            if (P.local() || !(P.p > 1.0 && P.p < 2.0)) throw DomainError("frac_p_lt_2 needs 0 < s < 1 and 1 < p < 2");
            const DeficitReport d = fractional_deficit(u, P);
            r.deficit = d.deficit;
            r.hardy = d.hardy;
            r.quad_error = d.quad_error;
            r.distance = distance_Dsp(u, P);
            break;
        }
        case Regime::Local: {
            if (!P.local() || !(P.p > 1.0 && P.p < P.N)) throw DomainError("local regime needs s = 1 and 1 < p < N");
            const DeficitReport d = local_deficit(u, P.N, P.p);
            r.deficit = d.deficit;
            r.hardy = d.hardy;
            r.quad_error = d.quad_error;
            r.distance = distance_local(u, P.N, P.p);
            break;
        }
        case Regime::PullbackP2: {
            if (P.local() || P.p != 2.0 || P.N < 3) throw DomainError("pullback_p2 needs p = 2, N >= 3, 0 < s < 1");
            const CylinderSignal phi = lift(u, P.N, P.s);
            const ModeSpectrum S = spectrum(phi);
            r.deficit = spectral_deficit_fractional(S, P.s);
            r.hardy = apply_multiplier(S, P.N, P.s, Direction::Forward).mass();
            r.quad_error = phi.leak * r.hardy;
            r.distance = distance_pullback(u, P.N, P.s);
            break;
        }
    }
    const double d = r.distance.value;
    if (r.distance.defined && d > 0.0 && std::isfinite(r.deficit) && r.hardy > 0.0 && std::isfinite(r.hardy)) {
        r.ratio = r.deficit / (std::pow(d, r.exponent) * r.hardy);
    } else {
        r.ratio = std::numeric_limits<double>::quiet_NaN();
    }
    return r;
}

Family parse_family(const std::string& name) {
    if (name == "window") return Family::Window;
    if (name == "perturb") return Family::Perturb;
    if (name == "gauss") return Family::Gauss;
    throw DomainError("unknown family '" + name + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Window: return "window";
        case Family::Perturb: return "perturb";
        case Family::Gauss: return "gauss";
    }
    return "";
}

RadialProfile family_member(Family f, double x, const Params& P, const GridSpec& grid) {
    switch (f) {
        case Family::Window:
            if (!(x > 0.0)) throw DomainError("window family: L must be positive");
            return make_truncated_extremizer(P, 1.0, std::exp(-0.5 * x), std::exp(0.5 * x), 0.25 * x, grid);
        case Family::Perturb: {
            const RadialProfile w = make_truncated_extremizer(P, 1.0, std::exp(-4.0), std::exp(4.0), 1.0, grid);
            RadialProfile u = combine(w, 1.0, make_gaussian(1.0, grid), x);
            return u;
        }
        case Family::Gauss: return make_gaussian(x, grid);
    }
    throw DomainError("unknown family");
}

ScanTable family_scan(Family f, const std::vector<double>& values, const Params& P, Regime regime,
                      const GridSpec& grid) {
    ScanTable t;
    t.param = values;
    t.rows.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        try {
            t.rows[i] = stability_report(family_member(f, values[i], P, grid), P, regime);
        } catch (const std::exception& e) {
            t.rows[i].params = P;
            t.rows[i].regime = regime;
            t.rows[i].exponent = stability_exponent(regime, P.p);
            t.rows[i].ratio = std::numeric_limits<double>::quiet_NaN();
            t.rows[i].error = e.what();
        }
    }
    t.floor = std::numeric_limits<double>::infinity();
    for (const auto& r : t.rows)
        if (std::isfinite(r.ratio)) t.floor = std::min(t.floor, r.ratio);
    return t;
}

}  // namespace hardylab
