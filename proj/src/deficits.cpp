#include "hardylab/deficits.hpp"

#include "hardylab/constants.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>

namespace hardylab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// int e^{kappa tau} |w(tau + h) - w(tau)|^p dtau over the real line.
class TauIntegral {
public:
    TauIntegral(const RadialProfile& w, double p, double kappa)
        : w_(w), p_(p), kappa_(kappa), rule_(gauss_legendre_unit(p == 2.0 ? 4 : 6)),
          far_(gauss_legendre_unit(10)) {}

    double operator()(double h) const {
        const RadialProfile& w = w_;
        const int n = w.grid.n;
        const double dt = w.grid.dt();
        const double t0 = w.grid.t_min;
        double hm = h / dt;
        int m = static_cast<int>(std::floor(hm));
        double f = hm - m;
        if (f > 1.0 - 1e-13) {
            ++m;
            f = 0.0;
        }

        double total = 0.0;
        // both points in the inner or both in the outer tail: closed form
        if (!std::isfinite(w.support_lo) && !w.inner.zero()) {
            total += tail_power_integral(shifted(w.inner, h), p_, kappa_, t0 - h, false);
        }
        if (!std::isfinite(w.support_hi) && !w.outer.zero()) {
            total += tail_power_integral(shifted(w.outer, h), p_, kappa_, w.grid.t_max, true);
        }
        if (!std::isfinite(total)) return kInf;

        const int j_start = f > 0.0 ? -(m + 1) : -m;
        const int first_end = n - 2 - m;
        if (first_end >= -1) {
            for (int j = j_start; j <= n - 2; ++j) total += cell(j, m, f, j == j_start && f > 0.0 ? 1.0 - f : 0.0);
        } else {
            for (int j = j_start; j <= first_end; ++j) total += cell(j, m, f, j == j_start && f > 0.0 ? 1.0 - f : 0.0);
            for (int j = 0; j <= n - 2; ++j) total += cell(j, m, f, 0.0);
            total += gap(t0 + (first_end + 1) * dt, t0, h);
        }
        return total;
    }

private:
    static Tail shifted(const Tail& t, double h) {
        Tail out;
        for (const auto& term : t.terms) out.terms.push_back({term.c * std::expm1(term.g * h), term.g});
        return out.normalized();
    }

    double powp(double x) const { return p_ == 2.0 ? x * x : std::pow(std::abs(x), p_); }

    double diff(int j, double x, int m, double f) const {
        const RadialProfile& w = w_;
        const int n = w.grid.n;
        double y = x + f;
        int k2 = j + m;
        if (y >= 1.0) {
            y -= 1.0;
            k2 += 1;
        }
        if (!w.masked() && k2 == j && j >= 0 && j <= n - 2) {
            const double dt = w.grid.dt();
            const double y0 = w.values[j], y1 = w.values[j + 1];
            const double m0 = dt * w.slopes[j], m1 = dt * w.slopes[j + 1];
            const double A = 3.0 * (y1 - y0) - 2.0 * m0 - m1;
            const double B = 2.0 * (y0 - y1) + m0 + m1;
            return f * (m0 + A * (2.0 * x + f) + B * (3.0 * x * x + 3.0 * x * f + f * f));
        }
        return w.at_cell(k2, y) - w.at_cell(j, x);
    }

    double cell(int j, int m, double f, double x_lo) const {
        const RadialProfile& w = w_;
        const double dt = w.grid.dt();
        const double t0 = w.grid.t_min;
        double cuts[8];
        int nc = 0;
        cuts[nc++] = x_lo;
        if (f > 0.0 && 1.0 - f > x_lo) cuts[nc++] = 1.0 - f;
        if (w.masked()) {
            const double h = (m + f) * dt;
            for (double e : {w.support_lo, w.support_hi}) {
                if (!std::isfinite(e)) continue;
                for (double x : {(e - t0) / dt - j, (e - h - t0) / dt - j})
                    if (x > x_lo && x < 1.0) cuts[nc++] = x;
            }
            std::sort(cuts, cuts + nc);
        }
        cuts[nc++] = 1.0;
        const double base = kappa_ == 0.0 ? 1.0 : std::exp(kappa_ * (t0 + j * dt));
        double sum = 0.0;
        for (int c = 0; c + 1 < nc; ++c) {
            const double a = cuts[c], b = cuts[c + 1];
            if (!(b > a)) continue;
            double part = 0.0;
            for (std::size_t i = 0; i < rule_.x.size(); ++i) {
                const double x = a + (b - a) * rule_.x[i];
                const double wt = kappa_ == 0.0 ? 1.0 : std::exp(kappa_ * x * dt);
                part += rule_.w[i] * wt * powp(diff(j, x, m, f));
            }
            sum += part * (b - a);
        }
        return sum * base * dt;
    }

    // tau < t_min with tau + h > t_max
    double gap(double a, double b, double h) const {
        if (!(b > a)) return 0.0;
        const int chunks = static_cast<int>(std::ceil((b - a) / 0.5));
        double sum = 0.0;
        for (int c = 0; c < chunks; ++c) {
            const double lo = a + (b - a) * c / chunks, hi = a + (b - a) * (c + 1) / chunks;
            double part = 0.0;
            for (std::size_t i = 0; i < far_.x.size(); ++i) {
                const double t = lo + (hi - lo) * far_.x[i];
                part += far_.w[i] * std::exp(kappa_ * t) * powp(w_.at(t + h) - w_.at(t));
            }
            sum += part * (hi - lo);
        }
        return sum;
    }

    const RadialProfile& w_;
    double p_, kappa_;
    const UnitRule& rule_;
    const UnitRule& far_;
};

// 2 |S| int_0^inf Phi(e^{-h}) e^{-rate h} I(h) dh on the shared kernel nodes.
QuadResult h_integral(const KernelTable& K, const TauIntegral& I, double rate, double small_h_power) {
    const std::size_t n = K.nodes.size();
    std::vector<double> vals(n);
    parallel_for(n, [&](std::size_t i) {
        const double h = K.nodes.x[i];
        vals[i] = K.phi[i] * std::exp(-rate * h) * I(h);
    });
    QuadResult q;
    for (double v : vals)
        if (!std::isfinite(v)) return {kInf, 0.0};
    for (std::size_t s = 0; s < n; s += 15) {
        double gk = 0.0, g7 = 0.0;
        for (std::size_t i = s; i < s + 15; ++i) {
            gk += K.nodes.wk[i] * vals[i];
            g7 += K.nodes.wg[i] * vals[i];
        }
        q.value += gk;
        q.error += std::abs(gk - g7);
    }
    // h below the first break: integrand ~ h^{small_h_power}
    std::size_t i0 = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (K.nodes.x[i] < K.nodes.x[i0]) i0 = i;
    const double x0 = K.nodes.x[i0];
    const double head = vals[i0] * std::pow(K.h_first / x0, small_h_power) * K.h_first / (small_h_power + 1.0);
    // past h_max: Phi -> |S^{N-1}| and I frozen at its last sampled value
    std::size_t i1 = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (K.nodes.x[i] > K.nodes.x[i1]) i1 = i;
    const double tail = K.phi_zero * I(K.h_max) * std::exp(-rate * K.h_max) / rate;
    (void)i1;
    q.value += head + tail;
    q.error += std::abs(head) + 1e-2 * std::abs(tail);
    const double c = 2.0 * sphere_area(K.N);
    q.value *= c;
    q.error = q.error * c + 1e-12 * std::abs(q.value);
    return q;
}

double cached_sharp_constant(const Params& P, double* err) {
    static std::mutex mu;
    static std::map<std::tuple<int, double, double>, QuadResult> cache;
    const auto key = std::make_tuple(P.N, P.s, P.p);
    {
        std::lock_guard lk(mu);
        if (auto it = cache.find(key); it != cache.end()) {
            if (err) *err = it->second.error;
            return it->second.value;
        }
    }
    const QuadResult C = sharp_constant_frac(P);
    std::lock_guard lk(mu);
    cache.emplace(key, C);
    if (err) *err = C.error;
    return C.value;
}

void require_frac(const Params& P, const char* what) {
    if (!(P.s > 0.0 && P.s < 1.0)) throw DomainError(std::string(what) + ": need 0 < s < 1");
    if (!(P.sp() < P.N)) throw DomainError(std::string(what) + ": need sp < N");
}

}  // namespace

RadialProfile ground_state_ratio(const RadialProfile& u, const Params& P) {
    const double g = P.gamma();
    RadialProfile v = u;
    v.label = "v[" + u.label + "]";
    for (int j = 0; j < u.grid.n; ++j) {
        const double e = std::exp(g * u.grid.t(j));
        v.values[j] = e * u.values[j];
        v.slopes[j] = e * (u.slopes[j] + g * u.values[j]);
    }
    for (auto& term : v.inner.terms) term.g += g;
    for (auto& term : v.outer.terms) term.g += g;
    return v;
}

double minmax_weight(const Params& P, double r, double rho) {
    // omega is decreasing: its min sits at the larger radius
    const double lo = std::min(r, rho), hi = std::max(r, rho);
    const double g = P.gamma();
    return std::pow(hi, -g) * std::pow(lo, -g * (P.p - 1.0));
}

QuadResult gagliardo_seminorm(const RadialProfile& u, const Params& P) {
    require_frac(P, "seminorm");
    if (u.masked() && P.sp() >= 1.0) return {kInf, 0.0};
    const TauIntegral I(u, P.p, P.N - P.sp());
    return h_integral(kernel_table(P.N, P.sp()), I, P.sp(), P.p - 1.0 - P.sp());
}

QuadResult weighted_remainder_eps(const RadialProfile& u, const Params& P) {
    require_frac(P, "eps");
    if (!(P.p >= 2.0)) throw DomainError("eps: need p >= 2");
    if (u.masked() && P.sp() >= 1.0) return {kInf, 0.0};
    const RadialProfile v = ground_state_ratio(u, P);
    const TauIntegral J(v, P.p, 0.0);
    return h_integral(kernel_table(P.N, P.sp()), J, 0.5 * (P.N + P.sp()), P.p - 1.0 - P.sp());
}

QuadResult weighted_remainder_eps_w(const RadialProfile& u, const Params& P) {
    require_frac(P, "eps_W");
    if (!(P.p > 1.0 && P.p < 2.0)) throw DomainError("eps_W: need 1 < p < 2");
    if (u.masked() && P.sp() >= 1.0) return {kInf, 0.0};
    const RadialProfile V = sign_power(ground_state_ratio(u, P), 0.5 * P.p);
    const TauIntegral J(V, 2.0, 0.0);
    const double rate = P.sp() + P.gamma();
    return h_integral(kernel_table(P.N, P.sp()), J, rate, 1.0 - P.sp());
}

DeficitReport fractional_deficit(const RadialProfile& u, const Params& P, RemainderKind rem) {
    require_frac(P, "fractional deficit");
    DeficitReport r;
    double c_err = 0.0;
    r.sharp_constant = cached_sharp_constant(P, &c_err);
    const QuadResult E = gagliardo_seminorm(u, P);
    r.energy = E.value;
    r.hardy = hardy_potential(u, P);
    if (!std::isfinite(r.hardy)) {
        r.deficit = kNaN;
    } else if (!std::isfinite(r.energy)) {
        r.deficit = kInf;
    } else {
        r.deficit = r.energy - r.sharp_constant * r.hardy;
        r.quad_error = E.error + c_err * r.hardy + 1e-12 * r.sharp_constant * r.hardy;
    }
    if (rem == RemainderKind::Eps) {
        const QuadResult e = weighted_remainder_eps(u, P);
        r.remainder = e.value;
        r.quad_error += e.error;
    } else if (rem == RemainderKind::EpsW) {
        const QuadResult e = weighted_remainder_eps_w(u, P);
        r.remainder = e.value;
        r.quad_error += e.error;
    }
    return r;
}

namespace {

QuadResult local_energy_q(const RadialProfile& u, int N, double p) {
    if (!(p > 1.0 && p < N)) throw DomainError("local energy: need 1 < p < N");
    if (u.masked()) throw DomainError("local energy: sharp cutoff has no classical derivative; use a ramp");
    const double kappa = N - p;
    auto g = [&](double t, double, double dv) { return std::pow(std::abs(dv), p) * std::exp(kappa * t); };
    const double hi = integrate_grid(u, g, 8);
    const double lo = integrate_grid(u, g, 6);
    auto slope_tail = [](const Tail& t) {
        Tail d;
        for (const auto& term : t.terms) d.terms.push_back({term.c * term.g, term.g});
        return d.normalized();
    };
    double tails = tail_power_integral(slope_tail(u.inner), p, kappa, u.grid.t_min, false) +
                   tail_power_integral(slope_tail(u.outer), p, kappa, u.grid.t_max, true);
    const double S = sphere_area(N);
    return {S * (hi + tails), S * std::abs(hi - lo) + 1e-13 * S * std::abs(hi)};
}

}  // namespace

double local_dirichlet_energy(const RadialProfile& u, int N, double p) { return local_energy_q(u, N, p).value; }

double local_remainder(const RadialProfile& u, int N, double p) {
    const Params P = make_params(N, 1.0, p);
    if (u.masked()) throw DomainError("local remainder: sharp cutoff has no classical derivative; use a ramp");
    const RadialProfile v = ground_state_ratio(u, P);
    auto g = [&](double, double, double dv) { return std::pow(std::abs(dv), p); };
    auto slope_tail = [](const Tail& t) {
        Tail d;
        for (const auto& term : t.terms) d.terms.push_back({term.c * term.g, term.g});
        return d.normalized();
    };
    const double tails = tail_power_integral(slope_tail(v.inner), p, 0.0, v.grid.t_min, false) +
                         tail_power_integral(slope_tail(v.outer), p, 0.0, v.grid.t_max, true);
    return sphere_area(N) * (integrate_grid(v, g, 8) + tails);
}

double local_weighted_remainder(const RadialProfile& u, int N, double p) {
    const Params P = make_params(N, 1.0, p);
    if (!(p > 1.0 && p < 2.0)) throw DomainError("local weighted remainder: need 1 < p < 2");
    if (u.masked()) throw DomainError("local remainder: sharp cutoff has no classical derivative; use a ramp");
    const RadialProfile v = ground_state_ratio(u, P);
    const double g = P.gamma();
    auto integrand = [&](double, double x, double dx) {
        const double base = g * std::abs(x) + std::abs(dx);
        return base > 0.0 ? dx * dx * std::pow(base, p - 2.0) : 0.0;
    };
    // tails: v and v_t are single power laws there; integrate numerically over a long window
    auto tail_part = [&](const Tail& t, bool outer) {
        if (t.zero()) return 0.0;
        auto f = [&](double s) { return integrand(s, t.value(s), t.slope(s)); };
        const double edge = outer ? v.grid.t_max : v.grid.t_min;
        double total = 0.0;
        for (int k = 0; k < 2000; ++k) {
            const double a = outer ? edge + k : edge - k - 1;
            const double piece = integrate_gk(f, a, a + 1.0, 1e-12, 8).value;
            total += piece;
            if (k > 3 && std::abs(piece) <= 1e-17 * std::abs(total)) break;
        }
        return total;
    };
    const double total = integrate_grid(v, integrand, 8) + tail_part(v.inner, false) + tail_part(v.outer, true);
    return 0.5 * p * (p - 1.0) * sphere_area(N) * total;
}

DeficitReport local_deficit(const RadialProfile& u, int N, double p, bool with_remainder) {
    const QuadResult E = local_energy_q(u, N, p);
    DeficitReport r;
    r.energy = E.value;
    r.sharp_constant = sharp_constant_local(N, p);
    r.hardy = hardy_potential(u, make_params(N, 1.0, p));
    if (!std::isfinite(r.hardy)) {
        r.deficit = kNaN;
    } else if (!std::isfinite(r.energy)) {
        r.deficit = kInf;
    } else {
        r.deficit = r.energy - r.sharp_constant * r.hardy;
        r.quad_error = E.error + 1e-12 * r.sharp_constant * r.hardy;
    }
    if (with_remainder) r.remainder = p >= 2.0 ? local_remainder(u, N, p) : local_weighted_remainder(u, N, p);
    return r;
}

}  // namespace hardylab
