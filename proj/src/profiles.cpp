#include "hardylab/profiles.hpp"

#include "hardylab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hardylab {

namespace {

std::string fmt_label(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
    return buf;
}

double sgn_pow(double x, double b) { return std::copysign(std::pow(std::abs(x), b), x); }

bool same_grid(const GridSpec& a, const GridSpec& b) {
    return a.n == b.n && a.t_min == b.t_min && a.t_max == b.t_max;
}

RadialProfile blank(const GridSpec& grid, std::string label) {
    grid.validate();
    RadialProfile u;
    u.grid = grid;
    u.values.assign(grid.n, 0.0);
    u.slopes.assign(grid.n, 0.0);
    u.label = std::move(label);
    return u;
}

Tail scaled_tail(const Tail& t, double c) {
    Tail out;
    for (const auto& term : t.terms) out.terms.push_back({c * term.c, term.g});
    return out;
}

Tail single_term_map(const Tail& t, double b, const char* what) {
    const Tail n = t.normalized();
    if (n.terms.size() > 1) throw DomainError(std::string(what) + ": multi-term tail not supported");
    Tail out;
    for (const auto& term : n.terms) out.terms.push_back({sgn_pow(term.c, b), term.g * b});
    return out;
}

}  // namespace

void GridSpec::validate() const {
    if (!(t_min < t_max)) throw DomainError("grid: need t_min < t_max");
    if (n < 16) throw DomainError("grid: need n >= 16");
}

double Tail::value(double t) const {
    double v = 0.0;
    for (const auto& term : terms) v += term.c * std::exp(term.g * t);
    return v;
}

double Tail::slope(double t) const {
    double v = 0.0;
    for (const auto& term : terms) v += term.c * term.g * std::exp(term.g * t);
    return v;
}

double Tail::leading(bool outer_end) const {
    double g = outer_end ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
    for (const auto& term : terms) {
        if (term.c == 0.0) continue;
        g = outer_end ? std::max(g, term.g) : std::min(g, term.g);
    }
    return g;
}

Tail Tail::normalized() const {
    Tail out;
    std::vector<double> scale;
    for (const auto& term : terms) {
        bool merged = false;
        for (std::size_t i = 0; i < out.terms.size(); ++i) {
            if (std::abs(out.terms[i].g - term.g) <= 1e-13 * (1.0 + std::abs(term.g))) {
                out.terms[i].c += term.c;
                scale[i] = std::max(scale[i], std::abs(term.c));
                merged = true;
                break;
            }
        }
        if (!merged) {
            out.terms.push_back(term);
            scale.push_back(std::abs(term.c));
        }
    }
    Tail kept;
    for (std::size_t i = 0; i < out.terms.size(); ++i) {
        if (std::abs(out.terms[i].c) > 1e-14 * scale[i]) kept.terms.push_back(out.terms[i]);
    }
    std::sort(kept.terms.begin(), kept.terms.end(), [](auto& a, auto& b) { return a.g < b.g; });
    return kept;
}

double RadialProfile::at_cell(int k, double f) const {
    const int n = grid.n;
    const double dt = grid.dt();
    const double t = grid.t_min + (k + f) * dt;
    if (masked() && (t < support_lo || t > support_hi)) return 0.0;
    if (k < 0) return inner.value(t);
    if (k >= n - 1) {
        if (k == n - 1 && f == 0.0) return values[n - 1];
        return outer.value(t);
    }
    const double y0 = values[k], y1 = values[k + 1];
    const double m0 = dt * slopes[k], m1 = dt * slopes[k + 1];
    const double A = 3.0 * (y1 - y0) - 2.0 * m0 - m1;
    const double B = 2.0 * (y0 - y1) + m0 + m1;
    return y0 + f * (m0 + f * (A + f * B));
}

void RadialProfile::cell_eval(int k, double f, double& v, double& dv) const {
    const double dt = grid.dt();
    const double y0 = values[k], y1 = values[k + 1];
    const double m0 = dt * slopes[k], m1 = dt * slopes[k + 1];
    const double A = 3.0 * (y1 - y0) - 2.0 * m0 - m1;
    const double B = 2.0 * (y0 - y1) + m0 + m1;
    v = y0 + f * (m0 + f * (A + f * B));
    dv = (m0 + f * (2.0 * A + 3.0 * f * B)) / dt;
}

double RadialProfile::at(double t) const {
    if (masked() && (t < support_lo || t > support_hi)) return 0.0;
    if (t < grid.t_min) return inner.value(t);
    if (t > grid.t_max) return outer.value(t);
    const double x = (t - grid.t_min) / grid.dt();
    const double node = std::round(x);
    if (std::abs(x - node) < 1e-9) return values[static_cast<int>(node)];
    const int k = std::min(grid.n - 2, static_cast<int>(std::floor(x)));
    return at_cell(k, x - k);
}

double RadialProfile::slope_at(double t) const {
    if (masked() && (t < support_lo || t > support_hi)) return 0.0;
    if (t < grid.t_min) return inner.slope(t);
    if (t > grid.t_max) return outer.slope(t);
    const double dt = grid.dt();
    const double x = (t - grid.t_min) / dt;
    const int k = std::min(grid.n - 2, static_cast<int>(std::floor(x)));
    const double f = x - k;
    const double y0 = values[k], y1 = values[k + 1];
    const double m0 = dt * slopes[k], m1 = dt * slopes[k + 1];
    const double A = 3.0 * (y1 - y0) - 2.0 * m0 - m1;
    const double B = 2.0 * (y0 - y1) + m0 + m1;
    return (m0 + f * (2.0 * A + 3.0 * f * B)) / dt;
}

double RadialProfile::increment(int j, int m, double f) const {
    const int n = grid.n;
    if (!masked()) {
        if (m == 0 && j >= 0 && j <= n - 2) {
            const double dt = grid.dt();
            const double y0 = values[j], y1 = values[j + 1];
            const double m0 = dt * slopes[j], m1 = dt * slopes[j + 1];
            const double A = 3.0 * (y1 - y0) - 2.0 * m0 - m1;
            const double B = 2.0 * (y0 - y1) + m0 + m1;
            return f * (m0 + f * (A + f * B));
        }
        const bool both_inner = j + m + f < 0.0;
        const bool both_outer = j >= n - 1;
        if (both_inner || both_outer) {
            const Tail& tl = both_inner ? inner : outer;
            const double t = grid.t(j);
            const double h = (m + f) * grid.dt();
            double v = 0.0;
            for (const auto& term : tl.terms) v += term.c * std::exp(term.g * t) * std::expm1(term.g * h);
            return v;
        }
    }
    return at_cell(j + m, f) - at_cell(j, 0.0);
}

bool RadialProfile::hardy_finite(int N, double s, double p) const {
    const double sp = s * p;
    const double g0 = inner.leading(false);
    const double g1 = outer.leading(true);
    const bool in_ok = inner.zero() || !std::isfinite(g0) || p * g0 + N - sp > 0.0;
    const bool out_ok = outer.zero() || !std::isfinite(g1) || p * g1 + N - sp < 0.0;
    return in_ok && out_ok;
}

bool RadialProfile::lorentz_finite(int N, double p, double q) const {
    const double crit = -N / p;
    const double eps = 1e-12 * (1.0 + std::abs(crit));
    const double g0 = inner.leading(false);
    const double g1 = outer.leading(true);
    const bool weak = std::isinf(q);
    bool in_ok = inner.zero() || g0 >= 0.0 || (weak ? g0 >= crit - eps : g0 > crit + eps);
    bool out_ok = outer.zero() || (weak ? g1 <= crit + eps : g1 < crit - eps);
    return in_ok && out_ok;
}

double evaluate(const RadialProfile& u, double r) {
    if (!(r > 0.0)) throw DomainError("evaluate: r must be positive");
    return u.at(std::log(r));
}

double derivative(const RadialProfile& u, double r) {
    if (!(r > 0.0)) throw DomainError("derivative: r must be positive");
    return u.slope_at(std::log(r)) / r;
}

RadialProfile make_power(double c, double g, const GridSpec& grid) {
    RadialProfile u = blank(grid, fmt_label("power(c=%.6g,g=%.6g)", c, g));
    for (int j = 0; j < grid.n; ++j) {
        const double v = c * std::exp(g * grid.t(j));
        u.values[j] = v;
        u.slopes[j] = g * v;
    }
    u.inner.terms = {{c, g}};
    u.outer.terms = {{c, g}};
    return u;
}

RadialProfile make_extremizer(const Params& P, double a, const GridSpec& grid) {
    if (!(P.sp() < P.N)) throw DomainError("extremizer: need sp < N");
    RadialProfile u = make_power(a, -P.gamma(), grid);
    u.label = fmt_label("extremizer(a=%.6g)", a);
    return u;
}

RadialProfile make_truncated_extremizer(const Params& P, double a, double r_in, double r_out, double ramp,
                                        const GridSpec& grid) {
    if (!(r_in > 0.0 && ramp >= 0.0 && r_in * std::exp(2.0 * ramp) < r_out))
        throw DomainError("truncated extremizer: need r_in e^{2 ramp} < r_out");
    const double t_in = std::log(r_in), t_out = std::log(r_out);
    if (t_in < grid.t_min || t_out > grid.t_max) throw DomainError("truncated extremizer: window exceeds grid");
    RadialProfile u = blank(grid, fmt_label("truncated_extremizer(a=%.6g,r_in=%.6g,r_out=%.6g,ramp=%.6g)", a,
                                            r_in, r_out, ramp));
    const double g = P.gamma();
    for (int j = 0; j < grid.n; ++j) {
        const double t = grid.t(j);
        const double w = a * std::exp(-g * t);
        double S = 1.0, dS = 0.0;
        if (ramp > 0.0) {
            if (t <= t_in || t >= t_out) {
                S = 0.0;
            } else if (t < t_in + ramp) {
                const double x = (t - t_in) / ramp;
                S = x * x * (3.0 - 2.0 * x);
                dS = 6.0 * x * (1.0 - x) / ramp;
            } else if (t > t_out - ramp) {
                const double x = (t_out - t) / ramp;
                S = x * x * (3.0 - 2.0 * x);
                dS = -6.0 * x * (1.0 - x) / ramp;
            }
        }
        u.values[j] = w * S;
        u.slopes[j] = w * (dS - g * S);
    }
    if (ramp == 0.0) {
        u.support_lo = t_in;
        u.support_hi = t_out;
    }
    return u;
}

RadialProfile make_gaussian(double sigma, const GridSpec& grid) {
    if (!(sigma > 0.0)) throw DomainError("gaussian: sigma must be positive");
    RadialProfile u = blank(grid, fmt_label("gaussian(sigma=%.6g)", sigma));
    for (int j = 0; j < grid.n; ++j) {
        const double x = std::exp(2.0 * grid.t(j)) / (sigma * sigma);
        const double v = std::exp(-0.5 * x);
        u.values[j] = v;
        u.slopes[j] = -x * v;
    }
    u.inner.terms = {{1.0, 0.0}};
    return u;
}

RadialProfile make_cylinder_gaussian(int N, double weight, double A, double alpha, const GridSpec& grid) {
    if (N < 3) throw DomainError("cylinder gaussian: need N >= 3");
    if (!(weight > 0.0 && weight <= 1.0)) throw DomainError("cylinder gaussian: weight must lie in (0,1]");
    if (!(alpha > 0.0)) throw DomainError("cylinder gaussian: alpha must be positive");
    RadialProfile u =
        blank(grid, fmt_label("cylinder_gaussian(weight=%.6g,A=%.6g,alpha=%.6g)", weight, A, alpha));
    const double e = 0.5 * (N - 2.0 * weight);
    for (int j = 0; j < grid.n; ++j) {
        const double t = grid.t(j);
        const double v = A * std::exp(-e * t - alpha * t * t);
        u.values[j] = v;
        u.slopes[j] = v * (-e - 2.0 * alpha * t);
    }
    return u;
}

RadialProfile from_samples(const GridSpec& grid, std::vector<double> values, std::string label) {
    RadialProfile u = blank(grid, std::move(label));
    if (static_cast<int>(values.size()) != grid.n) throw DomainError("from_samples: size mismatch");
    u.values = std::move(values);
    const double dt = grid.dt();
    const int n = grid.n;
    std::vector<double> d(n - 1);
    for (int k = 0; k + 1 < n; ++k) d[k] = (u.values[k + 1] - u.values[k]) / dt;
    u.slopes[0] = d[0];
    u.slopes[n - 1] = d[n - 2];
    for (int k = 1; k + 1 < n; ++k) {
        u.slopes[k] = (d[k - 1] * d[k] > 0.0) ? 2.0 * d[k - 1] * d[k] / (d[k - 1] + d[k]) : 0.0;
    }
    return u;
}

RadialProfile materialized(const RadialProfile& u) {
    if (!u.masked()) return u;
    RadialProfile w = u;
    for (int j = 0; j < u.grid.n; ++j) {
        const double t = u.grid.t(j);
        if (t < u.support_lo || t > u.support_hi) {
            w.values[j] = 0.0;
            w.slopes[j] = 0.0;
        }
    }
    if (std::isfinite(u.support_lo)) w.inner.terms.clear();
    if (std::isfinite(u.support_hi)) w.outer.terms.clear();
    w.support_lo = -std::numeric_limits<double>::infinity();
    w.support_hi = std::numeric_limits<double>::infinity();
    return w;
}

RadialProfile scaled(const RadialProfile& u, double c) {
    RadialProfile w = u;
    for (auto& v : w.values) v *= c;
    for (auto& v : w.slopes) v *= c;
    w.inner = scaled_tail(u.inner, c);
    w.outer = scaled_tail(u.outer, c);
    return w;
}

RadialProfile combine(const RadialProfile& u0, double cu, const RadialProfile& w0, double cw) {
    if (!same_grid(u0.grid, w0.grid)) throw DomainError("combine: grids differ");
    const RadialProfile u = materialized(u0);
    const RadialProfile w = materialized(w0);
    RadialProfile out = blank(u.grid, u.label + "+" + w.label);
    for (int j = 0; j < u.grid.n; ++j) {
        out.values[j] = cu * u.values[j] + cw * w.values[j];
        out.slopes[j] = cu * u.slopes[j] + cw * w.slopes[j];
    }
    for (const Tail* t : {&u.inner, &w.inner}) {
        const double c = t == &u.inner ? cu : cw;
        for (const auto& term : t->terms) out.inner.terms.push_back({c * term.c, term.g});
    }
    for (const Tail* t : {&u.outer, &w.outer}) {
        const double c = t == &u.outer ? cu : cw;
        for (const auto& term : t->terms) out.outer.terms.push_back({c * term.c, term.g});
    }
    out.inner = out.inner.normalized();
    out.outer = out.outer.normalized();
    return out;
}

RadialProfile dilate(const RadialProfile& u, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("dilate: lambda must be positive");
    const double L = std::log(lambda);
    RadialProfile w = u;
    w.grid.t_min += L;
    w.grid.t_max += L;
    w.support_lo += L;
    w.support_hi += L;
    for (auto& term : w.inner.terms) term.c *= std::exp(-term.g * L);
    for (auto& term : w.outer.terms) term.c *= std::exp(-term.g * L);
    return w;
}

RadialProfile resample(const RadialProfile& u, const GridSpec& grid) {
    RadialProfile w = blank(grid, u.label);
    for (int j = 0; j < grid.n; ++j) {
        w.values[j] = u.at(grid.t(j));
        w.slopes[j] = u.slope_at(grid.t(j));
    }
    w.inner = u.inner;
    w.outer = u.outer;
    w.support_lo = u.support_lo;
    w.support_hi = u.support_hi;
    return w;
}

RadialProfile positive_part(const RadialProfile& u0) {
    const RadialProfile u = materialized(u0);
    RadialProfile w = u;
    w.label = "(" + u.label + ")+";
    for (int j = 0; j < u.grid.n; ++j) {
        if (u.values[j] <= 0.0) {
            w.values[j] = 0.0;
            w.slopes[j] = 0.0;
        }
    }
    for (Tail* t : {&w.inner, &w.outer}) {
        const Tail n = single_term_map(*t, 1.0, "positive_part");
        t->terms.clear();
        for (const auto& term : n.terms)
            if (term.c > 0.0) t->terms.push_back(term);
    }
    return w;
}

RadialProfile negative_part(const RadialProfile& u) {
    RadialProfile w = positive_part(scaled(u, -1.0));
    w.label = "(" + u.label + ")-";
    return w;
}

RadialProfile sign_power(const RadialProfile& u, double b) {
    RadialProfile w = u;
    w.label = u.label + "^<" + fmt_label("%.6g", b) + ">";
    for (int j = 0; j < u.grid.n; ++j) {
        const double v = u.values[j];
        w.values[j] = sgn_pow(v, b);
        w.slopes[j] = v == 0.0 ? 0.0 : b * std::pow(std::abs(v), b - 1.0) * u.slopes[j];
    }
    w.inner = single_term_map(u.inner, b, "sign_power");
    w.outer = single_term_map(u.outer, b, "sign_power");
    return w;
}

double tail_power_integral(const Tail& tail0, double p, double kappa, double edge, bool outer) {
    const Tail tail = tail0.normalized();
    if (tail.zero()) return 0.0;
    const double g = tail.leading(outer);
    const double rate = p * g + kappa;
    // integrand must decay away from the edge
    if (outer ? !(rate < 0.0) : !(rate > 0.0)) return std::numeric_limits<double>::infinity();
    if (tail.terms.size() == 1) {
        const double c = tail.terms[0].c;
        return std::pow(std::abs(c), p) * std::exp(rate * edge) / std::abs(rate);
    }
    auto f = [&](double t) { return std::pow(std::abs(tail.value(t)), p) * std::exp(kappa * t); };
    const double w = std::min(1.0, 1.0 / std::abs(rate));
    double total = 0.0;
    for (int k = 0; k < 100000; ++k) {
        const double a = outer ? edge + k * w : edge - (k + 1) * w;
        const double piece = integrate_gk(f, a, a + w, 1e-13, 8).value;
        total += piece;
        if (k > 4 && std::abs(piece) <= 1e-18 * std::abs(total)) break;
    }
    return total;
}

}  // namespace hardylab
