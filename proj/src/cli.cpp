#include "hardylab/cli.hpp"

#include "hardylab/battery.hpp"
#include "hardylab/constants.hpp"
#include "hardylab/cylinder.hpp"
#include "hardylab/deficits.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/stability.hpp"
#include "hardylab/uncertainty.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hardylab {

namespace {

using ojson = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    int N = 3;
    double s = 0.5;
    double p = 2.0;
    std::string preset = "gauss";
    std::string profile;
    double tol = 1e-8;
    double identity_tol = 1e-10;
    double cross_tol = 1e-3;
    int grid_n = 2048;
    double t_min = -12.0;
    double t_max = 12.0;
    std::string format;
    std::string out;
    std::uint64_t seed = 0;
    double alpha = 1.0;
    double xi_max = 50.0;
    double xi_step = 0.5;
    int ell_max = 8;
    std::string kind = "auto";
    bool inverse = false;
    bool scan = false;
    std::vector<double> windows{4.0, 8.0, 12.0};
    std::string family = "window";
    std::string regime = "auto";
    std::vector<double> values;
    bool remainder = false;

    GridSpec grid() const { return GridSpec{t_min, t_max, grid_n}; }
};

ojson config_json(const RunConfig& c) {
    ojson j;
    j["command"] = c.command;
    j["N"] = c.N;
    j["s"] = c.s;
    j["p"] = c.p;
    if (c.profile.empty()) j["preset"] = c.preset;
    else j["profile"] = c.profile;
    j["alpha"] = c.alpha;
    j["tol"] = c.tol;
    j["identity_tol"] = c.identity_tol;
    j["cross_tol"] = c.cross_tol;
    j["grid_n"] = c.grid_n;
    j["t_min"] = c.t_min;
    j["t_max"] = c.t_max;
    j["seed"] = c.seed;
    if (c.command == "symbol") {
        j["xi_max"] = c.xi_max;
        j["xi_step"] = c.xi_step;
        j["ell_max"] = c.ell_max;
    }
    if (c.command == "distance") j["kind"] = c.kind;
    if (c.command == "transform") j["inverse"] = c.inverse;
    if (c.command == "uncertainty") {
        j["scan"] = c.scan;
        j["windows"] = c.windows;
    }
    if (c.command == "stability-scan") {
        j["family"] = c.family;
        j["regime"] = c.regime;
        j["values"] = c.values;
    }
    if (c.command == "deficit") j["remainder"] = c.remainder;
    return j;
}

std::string num(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

// line and column of a byte offset, 1-based
std::pair<int, int> locate(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Tail parse_tail(const ojson& j, const std::string& field) {
    Tail t;
    if (!j.is_array()) throw UsageError("profile field '" + field + "': expected an array of {c, g}");
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        if (!e.is_object() || !e.contains("c") || !e.contains("g") || !e["c"].is_number() || !e["g"].is_number())
            throw UsageError("profile field '" + field + "[" + std::to_string(i) + "]': expected {\"c\": num, \"g\": num}");
        t.terms.push_back({e["c"].get<double>(), e["g"].get<double>()});
    }
    return t;
}

RadialProfile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open profile '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
        throw UsageError("profile '" + path + "' line " + std::to_string(line) + " column " + std::to_string(col) +
                         ": malformed JSON");
    }
    if (!j.is_object()) throw UsageError("profile '" + path + "': top level must be an object");
    GridSpec g;
    if (j.contains("grid")) {
        const auto& gj = j["grid"];
        for (const char* k : {"t_min", "t_max", "n"})
            if (!gj.contains(k) || !gj[k].is_number())
                throw UsageError(std::string("profile field 'grid.") + k + "': missing or not a number");
        g.t_min = gj["t_min"].get<double>();
        g.t_max = gj["t_max"].get<double>();
        g.n = gj["n"].get<int>();
    }
    if (!j.contains("values") || !j["values"].is_array()) throw UsageError("profile field 'values': missing array");
    std::vector<double> vals;
    for (std::size_t i = 0; i < j["values"].size(); ++i) {
        if (!j["values"][i].is_number())
            throw UsageError("profile field 'values[" + std::to_string(i) + "]': not a number");
        vals.push_back(j["values"][i].get<double>());
    }
    if (!j.contains("grid")) g.n = static_cast<int>(vals.size());
    if (static_cast<int>(vals.size()) != g.n)
        throw UsageError("profile field 'values': length " + std::to_string(vals.size()) + " does not match grid.n");
    RadialProfile u;
    try {
        u = from_samples(g, vals, j.value("label", std::string("file")));
    } catch (const DomainError& e) {
        throw UsageError(std::string("profile: ") + e.what());
    }
    if (j.contains("slopes")) {
        const auto& sj = j["slopes"];
        if (!sj.is_array() || static_cast<int>(sj.size()) != g.n)
            throw UsageError("profile field 'slopes': expected an array of length grid.n");
        for (int i = 0; i < g.n; ++i) {
            if (!sj[i].is_number()) throw UsageError("profile field 'slopes[" + std::to_string(i) + "]': not a number");
            u.slopes[i] = sj[i].get<double>();
        }
    }
    if (j.contains("inner")) u.inner = parse_tail(j["inner"], "inner");
    if (j.contains("outer")) u.outer = parse_tail(j["outer"], "outer");
    return u;
}

RadialProfile input_profile(const RunConfig& c, const Params& P) {
    if (!c.profile.empty()) return load_profile(c.profile);
    return make_preset(c.preset, P, c.grid(), c.alpha);
}

class Output {
public:
    explicit Output(const RunConfig& c, std::ostream& fallback) : c_(c), os_(&fallback) {
        if (!c.out.empty()) {
            file_.open(c.out);
            if (!file_) throw UsageError("cannot write '" + c.out + "'");
            os_ = &file_;
        }
    }
    void json(ojson body) {
        ojson j;
        j["config"] = config_json(c_);
        for (auto& [k, v] : body.items()) j[k] = v;
        *os_ << j.dump(2) << "\n";
    }
    void csv_header(const std::string& columns) { *os_ << "# config: " << config_json(c_).dump() << "\n" << columns << "\n"; }
    void row(const std::vector<double>& xs) {
        for (std::size_t i = 0; i < xs.size(); ++i) *os_ << (i ? "," : "") << num(xs[i]);
        *os_ << "\n";
    }

private:
    const RunConfig& c_;
    std::ostream* os_;
    std::ofstream file_;
};

ojson distance_json(const DistanceResult& d) {
    ojson j;
    j["value"] = d.defined ? ojson(d.value) : ojson(nullptr);
    j["minimizer_a"] = d.minimizer_a;
    j["bracket"] = {d.bracket.first, d.bracket.second};
    j["scan_resolution"] = d.scan_resolution;
    j["numerator"] = d.objective;
    j["denominator"] = d.denominator;
    j["defined"] = d.defined;
    return j;
}

ojson report_json(const DeficitReport& r) {
    auto val = [](double x) { return std::isfinite(x) ? ojson(x) : ojson(std::isinf(x) ? "inf" : "undefined"); };
    ojson j;
    j["energy"] = val(r.energy);
    j["hardy"] = val(r.hardy);
    j["sharp_constant"] = r.sharp_constant;
    j["deficit"] = val(r.deficit);
    j["remainder"] = r.remainder;
    j["quad_error"] = r.quad_error;
    return j;
}

Regime resolve_regime(const RunConfig& c, const Params& P) {
    if (c.regime != "auto") return parse_regime(c.regime);
    if (P.local()) return Regime::Local;
    return P.p >= 2.0 ? Regime::FracPGe2 : Regime::FracPLt2;
}

int cmd_constants(const RunConfig& c, Output& o) {
    const Params P = make_params(c.N, c.s, c.p);
    const ConstantSet k = constant_set(P);
    ojson j;
    j["frac_sharp"] = k.frac_sharp;
    j["fourier_sharp"] = k.fourier_sharp;
    j["cp"] = k.cp;
    j["cp_star"] = k.cp_star;
    j["K"] = k.K;
    j["local_sharp"] = k.local_sharp;
    j["kappa"] = k.kappa;
    j["quad_error"] = k.quad_error;
    o.json(j);
    return 0;
}

int cmd_symbol(const RunConfig& c, Output& o) {
    const Params P = make_params(c.N, c.s, 2.0);
    if (!(c.xi_step > 0.0)) throw UsageError("--xi-step must be positive");
    o.csv_header("xi,ell,P,m");
    const int steps = static_cast<int>(std::floor(c.xi_max / c.xi_step + 1e-9));
    for (int ell = 0; ell <= c.ell_max; ++ell)
        for (int i = 0; i <= steps; ++i) {
            const double xi = i * c.xi_step;
            o.row({xi, double(ell), symbol_P(P, xi, ell), multiplier_m(P, xi, ell)});
        }
    return 0;
}

int cmd_deficit(const RunConfig& c, Output& o) {
    const Params P = make_params(c.N, c.s, c.p);
    const RadialProfile u = input_profile(c, P);
    DeficitReport r;
    if (P.local()) {
        r = local_deficit(u, c.N, c.p, c.remainder);
    } else {
        const RemainderKind k = !c.remainder ? RemainderKind::None : (P.p >= 2.0 ? RemainderKind::Eps : RemainderKind::EpsW);
        r = fractional_deficit(u, P, k);
    }
    o.json(report_json(r));
    if (std::isfinite(r.deficit) && r.deficit < -(r.quad_error + c.tol * std::abs(r.energy))) return 1;
    return 0;
}

int cmd_distance(const RunConfig& c, Output& o) {
    const Params P = make_params(c.N, c.s, c.p);
    const RadialProfile u = input_profile(c, P);
    std::string kind = c.kind;
    if (kind == "auto") kind = P.local() ? "local" : (P.p >= 2.0 ? "dsp" : "Dsp");
    DistanceResult d;
    if (kind == "dsp") d = distance_dsp(u, P);
    else if (kind == "Dsp") d = distance_Dsp(u, P);
    else if (kind == "local") d = distance_local(u, c.N, c.p);
    else if (kind == "pullback") d = distance_pullback(u, c.N, c.s);
    else throw UsageError("--kind must be auto, dsp, Dsp, local or pullback");
    ojson j = distance_json(d);
    j["kind"] = kind;
    o.json(j);
    return 0;
}

int cmd_transform(const RunConfig& c, Output& o) {
    const Params P = make_params(c.N, c.s, 2.0);
    const RadialProfile u = input_profile(c, P);
    const TransformResult T = c.inverse ? inverse_transform_T(u, c.N, c.s) : transform_T(u, c.N, c.s);
    std::ostringstream extra;
    o.csv_header("t,r,value");
    for (int j = 0; j < T.profile.grid.n; ++j) {
        const double t = T.profile.grid.t(j);
        o.row({t, std::exp(t), T.profile.values[j]});
    }
    return T.leak > kLeakThreshold ? 1 : 0;
}

int cmd_spectral_verify(const RunConfig& c, Output& o) {
    const Params P = make_params(c.N, c.s, 2.0);
    const RadialProfile u = input_profile(c, P);
    const ModeSpectrum S = spectrum(lift(u, c.N, c.s));
    const double frac = spectral_deficit_fractional(S, c.s);
    const double local = spectral_deficit_local(apply_multiplier(S, c.N, c.s, Direction::Forward));
    const DeficitReport g = fractional_deficit(u, P);
    const double kappa = conversion_kappa(c.N, c.s);
    const double e_pres = std::abs(local - frac) / std::abs(frac);
    const double e_cross = std::abs(g.deficit - kappa * frac) / std::abs(g.deficit);
    ojson j;
    j["fractional_spectral"] = frac;
    j["local_spectral_after_M"] = local;
    j["gagliardo_form"] = g.deficit;
    j["kappa"] = kappa;
    j["rel_errors"] = {{"preservation", e_pres}, {"kappa_cross", e_cross}};
    o.json(j);
    return (e_pres <= c.identity_tol && e_cross <= 10.0 * c.cross_tol) ? 0 : 1;
}

int cmd_uncertainty(const RunConfig& c, Output& o) {
    make_params(c.N, c.s, 2.0);
    if (c.scan) {
        const auto rows = gaussian_sharpness_scan(c.N, c.s, c.alpha, c.windows, c.grid());
        o.csv_header("R,alpha,ratio,gap");
        bool ok = true;
        for (const auto& r : rows) {
            o.row({r.R, r.alpha, r.ratio, r.gap});
            ok = ok && r.ratio >= 0.25 - c.tol;
        }
        return ok ? 0 : 1;
    }
    const Params P = make_params(c.N, c.s, 2.0);
    const RadialProfile u = input_profile(c, P);
    const UncertaintyReport r = uncertainty_report(u, c.N, c.s);
    ojson j;
    j["deficit"] = r.deficit;
    j["mass"] = r.mass;
    j["variance"] = r.variance;
    j["ratio"] = r.ratio;
    j["sharp_gap"] = r.sharp_gap;
    j["centroid"] = r.centroid;
    j["variance_centered"] = r.variance_centered;
    j["ratio_centered"] = r.ratio_centered;
    j["leak"] = r.leak;
    o.json(j);
    return r.ratio >= 0.25 - c.tol ? 0 : 1;
}

int cmd_stability(const RunConfig& c, Output& o) {
    const Params P = make_params(c.N, c.s, c.p);
    const Family f = parse_family(c.family);
    std::vector<double> values = c.values;
    if (values.empty()) {
        if (f == Family::Window) values = {4.0, 8.0, 12.0};
        if (f == Family::Perturb) values = {1e-3, 1e-2, 1e-1};
        if (f == Family::Gauss) values = {0.5, 1.0, 2.0};
    }
    const Regime reg = resolve_regime(c, P);
    const ScanTable t = family_scan(f, values, P, reg, c.grid());
    o.csv_header("param,deficit,hardy,distance,minimizer_a,exponent,ratio,quad_error");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        o.row({t.param[i], r.deficit, r.hardy, r.distance.defined ? r.distance.value : NAN, r.distance.minimizer_a,
               r.exponent, r.ratio, r.quad_error});
    }
    return 0;
}

int cmd_battery(const RunConfig& c, Output& o) {
    const BatteryResult b = run_battery(c.grid(), c.seed);
    ojson checks = ojson::array();
    for (const auto& k : b.checks) {
        ojson e;
        e["name"] = k.name;
        e["value"] = std::isfinite(k.value) ? ojson(k.value) : ojson(nullptr);
        e["tolerance"] = k.tolerance;
        e["pass"] = k.pass;
        checks.push_back(e);
    }
    ojson j;
    j["checks"] = checks;
    j["failures"] = b.failures();
    o.json(j);
    return b.all_pass() ? 0 : 1;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Numerical laboratory for fractional Hardy inequalities on radial functions", "hardy_lab"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub, bool profile) {
        sub->add_option("--N", c.N, "dimension")->capture_default_str();
        sub->add_option("--s", c.s, "fractional order in (0,1]; 1 selects the local problem")->capture_default_str();
        sub->add_option("--p", c.p, "integrability exponent")->capture_default_str();
        if (profile) {
            sub->add_option("--preset", c.preset,
                            "gauss | trunc-ext | trunc-sharp | extremizer | cyl-gauss | sign-change | ext-gauss")
                ->capture_default_str();
            sub->add_option("--profile", c.profile, "JSON profile file (grid, values, optional slopes/inner/outer)");
            sub->add_option("--alpha", c.alpha, "Gaussian width parameter for cyl-gauss and --scan")->capture_default_str();
        }
        sub->add_option("--tol", c.tol, "pass/fail slack for deficit and uncertainty checks")->capture_default_str();
        sub->add_option("--identity-tol", c.identity_tol, "tolerance for exact discrete identities")->capture_default_str();
        sub->add_option("--cross-tol", c.cross_tol, "tolerance for cross-oracle comparisons")->capture_default_str();
        sub->add_option("--grid-n", c.grid_n, "samples on the log-radius grid")->capture_default_str();
        sub->add_option("--t-min", c.t_min, "left end of the log-radius window")->capture_default_str();
        sub->add_option("--t-max", c.t_max, "right end of the log-radius window")->capture_default_str();
        sub->add_option("--format", c.format, "json | csv (each subcommand has one natural format)");
        sub->add_option("--out", c.out, "output file (default standard output)");
        sub->add_option("--seed", c.seed, "seed for battery member ordering")->capture_default_str();
    };

    auto* constants = app.add_subcommand("constants", "sharp constants, remainder constants, K and kappa (JSON)");
    common(constants, false);
    auto* symbol = app.add_subcommand("symbol", "CSV of xi, ell, P_s, multiplier");
    common(symbol, false);
    symbol->add_option("--xi-max", c.xi_max)->capture_default_str();
    symbol->add_option("--xi-step", c.xi_step)->capture_default_str();
    symbol->add_option("--ell-max", c.ell_max)->capture_default_str();
    auto* deficit = app.add_subcommand("deficit", "energy, Hardy potential and deficit (JSON)");
    common(deficit, true);
    deficit->add_flag("--remainder", c.remainder, "also evaluate the matching remainder functional");
    auto* distance = app.add_subcommand("distance", "distance to the extremal family (JSON)");
    common(distance, true);
    distance->add_option("--kind", c.kind, "auto | dsp | Dsp | local | pullback")->capture_default_str();
    auto* transform = app.add_subcommand("transform", "T[u] or its inverse as CSV (t, r, value)");
    common(transform, true);
    transform->add_flag("--inverse", c.inverse, "apply the inverse transform");
    auto* sverify = app.add_subcommand("spectral-verify", "spectral and physical deficits side by side (JSON)");
    common(sverify, true);
    auto* unc = app.add_subcommand("uncertainty", "uncertainty report (JSON) or sharpness scan (CSV)");
    common(unc, true);
    unc->add_flag("--scan", c.scan, "windowed Gaussian sharpness scan");
    unc->add_option("--windows", c.windows, "window half-widths R for --scan")->delimiter(',')->capture_default_str();
    auto* stab = app.add_subcommand("stability-scan", "stability ratios along a profile family (CSV)");
    common(stab, false);
    stab->add_option("--family", c.family, "window | perturb | gauss")->capture_default_str();
    stab->add_option("--values", c.values, "family parameters (default per family)")->delimiter(',');
    stab->add_option("--regime", c.regime, "auto | frac_p_ge_2 | frac_p_lt_2 | local | pullback_p2")
        ->capture_default_str();
    auto* battery = app.add_subcommand("battery", "full invariant battery (JSON); exit 1 on any violation");
    common(battery, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        if (e.get_exit_code() != 0) err << app.help();
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    c.command = sub->get_name();
    try {
        if (!c.format.empty() && c.format != "json" && c.format != "csv") throw UsageError("--format must be json or csv");
        Output o(c, out);
        if (c.command == "constants") return cmd_constants(c, o);
        if (c.command == "symbol") return cmd_symbol(c, o);
        if (c.command == "deficit") return cmd_deficit(c, o);
        if (c.command == "distance") return cmd_distance(c, o);
        if (c.command == "transform") return cmd_transform(c, o);
        if (c.command == "spectral-verify") return cmd_spectral_verify(c, o);
        if (c.command == "uncertainty") return cmd_uncertainty(c, o);
        if (c.command == "stability-scan") return cmd_stability(c, o);
        if (c.command == "battery") return cmd_battery(c, o);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace hardylab
