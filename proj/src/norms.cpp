#include "hardylab/norms.hpp"

#include "hardylab/cylinder.hpp"
#include "hardylab/parallel.hpp"
#include "hardylab/quadrature.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace hardylab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kGolden = 0.6180339887498949;

double sgn_pow(double x, double b) { return std::copysign(std::pow(std::abs(x), b), x); }

template <class F>
double bisect_root(F&& h, double a, double b) {
    const double ha = h(a), hb = h(b);
    if (ha == 0.0) return a;
    if (hb == 0.0) return b;
    if ((ha > 0.0) == (hb > 0.0)) return 0.5 * (a + b);
    std::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(h, a, b, ha, hb, boost::math::tools::eps_tolerance<double>(52),
                                                     iters);
    return 0.5 * (r.first + r.second);
}

// Golden-section maximum of f on [a, b].
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, double width) {
    double c = b - kGolden * (b - a), d = a + kGolden * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && b - a > width; ++it) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - kGolden * (b - a); fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + kGolden * (b - a); fd = f(d);
        }
    }
    return fc > fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

// e-folds below the top level where level-set breakpoints stop mattering
constexpr double kLevelFloor = 60.0;

bool critical_exponent(double g, double crit) { return std::abs(g - crit) <= 1e-9 * (1.0 + std::abs(crit)); }

}  // namespace

LevelSets::LevelSets(const RadialProfile& u, int N, double a, double g)
    : u_(&u), N_(N), a_(a), g_(g), unit_(sphere_area(N) / N) {
    if (N < 1) throw DomainError("level sets: need N >= 1");
    const GridSpec& G = u.grid;
    const double dt = G.dt();

    if (!std::isfinite(u.support_lo)) tin_ = u.inner;
    if (!std::isfinite(u.support_hi)) tout_ = u.outer;
    if (a != 0.0) {
        tin_.terms.push_back({-a, g});
        tout_.terms.push_back({-a, g});
    }
    tin_ = tin_.normalized();
    tout_ = tout_.normalized();

    // inner tail: near zone sampled until the leading term dominates
    if (!tin_.zero()) {
        const PowerTerm L = tin_.terms.front();
        double E = G.t_min;
        for (std::size_t j = 1; j < tin_.terms.size(); ++j) {
            const auto& T = tin_.terms[j];
            E = std::min(E, (std::log(1e-17) - std::log(std::abs(T.c / L.c))) / (T.g - L.g));
        }
        E = std::max(E, G.t_min - 300.0);
        far_in_ = {true, E, L.c, L.g};
        const int chunks = static_cast<int>(std::ceil((G.t_min - E) / 0.25));
        for (int i = 0; i < chunks; ++i) {
            const double t0 = E + (G.t_min - E) * i / chunks;
            const double t1 = E + (G.t_min - E) * (i + 1) / chunks;
            add_monotone(NearIn, -1, t0, t1, 8);
        }
    }

    for (int k = 0; k + 1 < G.n; ++k) {
        const double t0 = G.t(k), t1 = G.t(k + 1);
        if (!u.masked()) {
            add_monotone(Cell, k, t0, t1, 6);
            continue;
        }
        const double lo = std::clamp(u.support_lo, t0, t1);
        const double hi = std::clamp(u.support_hi, t0, t1);
        if (a != 0.0 && lo > t0) add_monotone(Bare, k, t0, lo, 4);
        if (hi > lo) add_monotone(Cell, k, lo, hi, 6);
        if (a != 0.0 && hi < t1 && hi >= lo) add_monotone(Bare, k, std::max(hi, t0), t1, 4);
    }
    (void)dt;

    if (!tout_.zero()) {
        const PowerTerm L = tout_.terms.back();
        double E = G.t_max;
        for (std::size_t j = 0; j + 1 < tout_.terms.size(); ++j) {
            const auto& T = tout_.terms[j];
            E = std::max(E, (std::log(1e-17) - std::log(std::abs(T.c / L.c))) / (T.g - L.g));
        }
        E = std::min(E, G.t_max + 300.0);
        const int chunks = static_cast<int>(std::ceil((E - G.t_max) / 0.25));
        for (int i = 0; i < chunks; ++i) {
            const double t0 = G.t_max + (E - G.t_max) * i / chunks;
            const double t1 = G.t_max + (E - G.t_max) * (i + 1) / chunks;
            add_monotone(NearOut, -1, t0, t1, 8);
        }
        far_out_ = {true, E, L.c, L.g};
    }

    // extrema and jumps, walking pieces in t order with the far zones as end caps
    struct Run {
        double ta, tb, fa, fb;
    };
    std::vector<Run> runs;
    auto far_edge = [](const Far& f) { return std::abs(f.c) * std::exp(f.g * f.edge); };
    if (far_in_.present) {
        const double lim = far_in_.g < 0.0 ? kInf : (far_in_.g > 0.0 ? 0.0 : std::abs(far_in_.c));
        runs.push_back({-kInf, far_in_.edge, lim, far_edge(far_in_)});
    }
    for (const Piece& pc : pieces_) runs.push_back({pc.ta, pc.tb, pc.fa, pc.fb});
    if (far_out_.present) {
        const double lim = far_out_.g > 0.0 ? kInf : (far_out_.g < 0.0 ? 0.0 : std::abs(far_out_.c));
        runs.push_back({far_out_.edge, kInf, far_edge(far_out_), lim});
    }
    std::vector<double> crit;
    auto dir = [](const Run& r) { return r.fb > r.fa ? 1 : (r.fb < r.fa ? -1 : 0); };
    if (!runs.empty()) {
        crit.push_back(runs.front().fa);
        crit.push_back(runs.back().fb);
    }
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
        const Run& A = runs[i];
        const Run& B = runs[i + 1];
        const double scale = std::max({std::abs(A.fb), std::abs(B.fa), 1e-300});
        const bool joined = std::abs(A.tb - B.ta) <= 1e-12 * (1.0 + std::abs(A.tb)) &&
                            std::abs(A.fb - B.fa) <= 1e-9 * scale;
        if (!joined) {
            crit.push_back(A.fb);
            crit.push_back(B.fa);
        } else if (dir(A) != dir(B) || dir(A) == 0) {
            crit.push_back(A.fb);
        }
    }
    for (const Far* f : {&far_in_, &far_out_})
        if (f->present && f->g == 0.0) crit.push_back(std::abs(f->c));
    std::sort(crit.begin(), crit.end(), std::greater<>());
    for (double c : crit) {
        if (!(c > 0.0) || !std::isfinite(c)) continue;
        if (!critical_.empty() && critical_.back() - c <= 1e-13 * c) continue;
        critical_.push_back(c);
    }

    top_ = 0.0;
    for (const Piece& pc : pieces_) {
        top_ = std::max({top_, pc.fa, pc.fb});
        if (pc.kind == Cell || pc.kind == Bare) body_top_ = std::max({body_top_, pc.fa, pc.fb});
    }
    for (const Far* f : {&far_in_, &far_out_})
        if (f->present) top_ = std::max(top_, far_edge(*f));
    sup_ = top_;
    if (far_in_.present && far_in_.g < 0.0) sup_ = kInf;
    if (far_out_.present && far_out_.g > 0.0) sup_ = kInf;
    build_index();
}

void LevelSets::build_index() {
    const int n = static_cast<int>(pieces_.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    auto lo_of = [&](int i) { return std::min(pieces_[i].fa, pieces_[i].fb); };
    std::sort(order.begin(), order.end(), [&](int x, int y) { return lo_of(x) > lo_of(y); });
    lo_desc_.resize(n);
    full_sum_.assign(n + 1, 0.0);
    for (int k = 0; k < n; ++k) {
        lo_desc_[k] = lo_of(order[k]);
        full_sum_[k + 1] = full_sum_[k] + ball(pieces_[order[k]].ta, pieces_[order[k]].tb);
    }
    if (!(top_ > 0.0)) return;
    const int bmax = static_cast<int>(std::floor(std::log2(top_))) + 1;
    bucket_min_ = bmax - 400;
    buckets_.assign(bmax - bucket_min_ + 1, {});
    auto bucket = [&](double v) {
        if (!(v > 0.0)) return bucket_min_;
        return std::clamp(static_cast<int>(std::floor(std::log2(v))), bucket_min_, bmax);
    };
    for (int i = 0; i < n; ++i) {
        const double lo = lo_of(i), hi = std::max(pieces_[i].fa, pieces_[i].fb);
        if (!(hi > lo)) continue;
        for (int b = bucket(lo); b <= bucket(hi); ++b) buckets_[b - bucket_min_].push_back(i);
    }
}

double LevelSets::signed_value(Kind kind, int cell, double t) const {
    const double w = a_ == 0.0 ? 0.0 : a_ * std::exp(g_ * t);
    switch (kind) {
        case Cell: {
            double v, dv;
            u_->cell_eval(cell, (t - u_->grid.t(cell)) / u_->grid.dt(), v, dv);
            return v - w;
        }
        case Bare: return -w;
        case NearIn: return tin_.value(t);
        case NearOut: return tout_.value(t);
    }
    return 0.0;
}

double LevelSets::signed_slope(Kind kind, int cell, double t) const {
    const double w = a_ == 0.0 ? 0.0 : a_ * g_ * std::exp(g_ * t);
    switch (kind) {
        case Cell: {
            double v, dv;
            u_->cell_eval(cell, (t - u_->grid.t(cell)) / u_->grid.dt(), v, dv);
            return dv - w;
        }
        case Bare: return -w;
        case NearIn: return tin_.slope(t);
        case NearOut: return tout_.slope(t);
    }
    return 0.0;
}

void LevelSets::add_monotone(Kind kind, int cell, double t0, double t1, int samples) {
    if (!(t1 > t0)) return;
    std::vector<double> cuts{t0};
    double prev_t = t0;
    double prev_d = signed_slope(kind, cell, t0);
    for (int i = 1; i <= samples; ++i) {
        const double t = t0 + (t1 - t0) * i / samples;
        const double d = signed_slope(kind, cell, t);
        if ((prev_d < 0.0 && d > 0.0) || (prev_d > 0.0 && d < 0.0)) {
            cuts.push_back(bisect_root([&](double x) { return signed_slope(kind, cell, x); }, prev_t, t));
        }
        prev_t = t;
        prev_d = d;
    }
    cuts.push_back(t1);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double ta = cuts[i], tb = cuts[i + 1];
        if (!(tb > ta)) continue;
        const double va = signed_value(kind, cell, ta);
        const double vb = signed_value(kind, cell, tb);
        if ((va < 0.0 && vb > 0.0) || (va > 0.0 && vb < 0.0)) {
            const double z = bisect_root([&](double x) { return signed_value(kind, cell, x); }, ta, tb);
            pieces_.push_back({ta, z, std::abs(va), 0.0, kind, cell});
            pieces_.push_back({z, tb, 0.0, std::abs(vb), kind, cell});
        } else {
            pieces_.push_back({ta, tb, std::abs(va), std::abs(vb), kind, cell});
        }
    }
}

double LevelSets::crossing(const Piece& pc, double lambda) const {
    return bisect_root([&](double t) { return std::abs(signed_value(pc.kind, pc.cell, t)) - lambda; }, pc.ta, pc.tb);
}

double LevelSets::ball(double ta, double tb) const {
    if (tb == kInf) return kInf;
    if (ta == -kInf) return unit_ * std::exp(N_ * tb);
    return unit_ * std::exp(N_ * ta) * std::expm1(N_ * (tb - ta));
}

double LevelSets::far_measure(const Far& fz, bool inner, double lambda) const {
    if (!fz.present) return 0.0;
    double lo = inner ? -kInf : fz.edge;
    double hi = inner ? fz.edge : kInf;
    const double c = std::abs(fz.c);
    if (fz.g == 0.0) return c > lambda ? ball(lo, hi) : 0.0;
    if (lambda == 0.0) return ball(lo, hi);
    const double x = std::log(lambda / c) / fz.g;
    if (fz.g > 0.0) lo = std::max(lo, x);
    else hi = std::min(hi, x);
    return hi > lo ? ball(lo, hi) : 0.0;
}

double LevelSets::measure_above(double lambda) const {
    double m = far_measure(far_in_, true, lambda) + far_measure(far_out_, false, lambda);
    if (!std::isfinite(m)) return kInf;
    // pieces entirely above lambda
    const auto full = std::partition_point(lo_desc_.begin(), lo_desc_.end(), [&](double v) { return v > lambda; });
    m += full_sum_[full - lo_desc_.begin()];
    auto partial = [&](const Piece& pc) {
        if (std::max(pc.fa, pc.fb) <= lambda || std::min(pc.fa, pc.fb) > lambda) return;
        const double x = crossing(pc, lambda);
        m += pc.fa > pc.fb ? ball(pc.ta, x) : ball(x, pc.tb);
    };
    const double lb = lambda > 0.0 ? std::floor(std::log2(lambda)) : -kInf;
    if (!buckets_.empty() && lb > bucket_min_ && lb < bucket_min_ + static_cast<double>(buckets_.size()) - 1) {
        for (int i : buckets_[static_cast<int>(lb) - bucket_min_]) partial(pieces_[i]);
    } else {
        for (const Piece& pc : pieces_) partial(pc);
    }
    return m;
}

std::pair<double, double> LevelSets::weak_limits(double p) const {
    const double crit = -N_ / p;
    const double k = std::pow(unit_, 1.0 / p);
    double at_zero = 0.0, at_inf = 0.0;
    if (far_out_.present && critical_exponent(far_out_.g, crit)) at_zero = std::abs(far_out_.c) * k;
    if (far_in_.present && critical_exponent(far_in_.g, crit)) at_inf = std::abs(far_in_.c) * k;
    return {at_zero, at_inf};
}

double distribution_function(const RadialProfile& u, double lambda, int N) {
    if (!(lambda > 0.0)) throw DomainError("distribution_function: lambda must be positive");
    return LevelSets(u, N).measure_above(lambda);
}

double weak_norm(const LevelSets& ls, double p) {
    const auto lim = ls.weak_limits(p);
    double best = std::max(lim.first, lim.second);
    const double top = ls.top();
    if (!(top > 0.0)) return best;
    auto F = [&](double ell) {
        const double lam = std::exp(ell);
        const double m = ls.measure_above(lam);
        return std::isfinite(m) ? lam * std::pow(m, 1.0 / p) : kInf;
    };
    const double base = ls.body_top() > 0.0 ? std::min(top, ls.body_top()) : top;
    const double lo = std::log(base) - 12.0 * std::log(10.0);
    const double hi = std::log(top) + (std::isfinite(ls.sup()) ? 0.0 : 8.0 * std::log(10.0));
    const int n = static_cast<int>(std::ceil((hi - lo) / std::log(10.0) * 20.0));
    std::vector<double> ell(n + 1), val(n + 1);
    for (int i = 0; i <= n; ++i) {
        ell[i] = lo + (hi - lo) * i / n;
        val[i] = F(ell[i]);
        if (!std::isfinite(val[i])) return kInf;
        best = std::max(best, val[i]);
    }
    for (double c : ls.critical_values()) {
        const double v = F(std::log(c) + std::log1p(-1e-12));
        if (!std::isfinite(v)) return kInf;
        best = std::max(best, v);
    }
    std::vector<int> peaks;
    for (int i = 0; i <= n; ++i) {
        const bool left = i == 0 || val[i] >= val[i - 1];
        const bool right = i == n || val[i] >= val[i + 1];
        if (left && right && val[i] > 0.0) peaks.push_back(i);
    }
    std::sort(peaks.begin(), peaks.end(), [&](int x, int y) { return val[x] > val[y]; });
    if (peaks.size() > 4) peaks.resize(4);
    for (int i : peaks) {
        const double a = ell[std::max(0, i - 1)], b = ell[std::min(n, i + 1)];
        best = std::max(best, golden_max(F, a, b, 1e-11).second);
    }
    return best;
}

namespace {

// int over ell of w(ell) on (-inf, a] or [a, inf) by unit panels until negligible.
template <class W>
double tail_panels(W&& w, double a, bool down, double scale_hint) {
    double total = 0.0;
    for (int k = 0; k < 4000; ++k) {
        const double x0 = down ? a - (k + 1) : a + k;
        const double piece = integrate_gk(w, x0, x0 + 1.0, 1e-12, 5).value;
        if (!std::isfinite(piece)) return kInf;
        total += piece;
        if (k >= 3 && std::abs(piece) <= 1e-17 * (std::abs(total) + scale_hint)) break;
    }
    return total;
}

}  // namespace

double lorentz_norm(const RadialProfile& u, int N, double p, double q) {
    if (!(p > 0.0 && q > 0.0)) throw DomainError("lorentz_norm: need p, q > 0");
    if (!u.lorentz_finite(N, p, q)) return kInf;
    const LevelSets ls(u, N);
    if (std::isinf(q)) return weak_norm(ls, p);
    if (!(ls.top() > 0.0)) return 0.0;
    auto G = [&](double ell) {
        const double m = ls.measure_above(std::exp(ell));
        return m > 0.0 ? std::exp(q * ell + (q / p) * std::log(m)) : 0.0;
    };
    // levels below the floor only enter through the geometric tail panels
    const double floor = std::log(ls.top()) - kLevelFloor;
    std::vector<double> br{floor};
    for (double c : ls.critical_values())
        if (std::log(c) > floor) br.push_back(std::log(c));
    if (std::isfinite(ls.sup())) br.push_back(std::log(ls.sup()));
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end(), [](double x, double y) { return std::abs(x - y) < 1e-13; }),
             br.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < br.size(); ++i) total += integrate_ts(G, br[i], br[i + 1], 1e-12).value;
    total += tail_panels(G, br.front(), true, total);
    if (!std::isfinite(ls.sup())) total += tail_panels(G, br.back(), false, total);
    return std::pow(p * total, 1.0 / q);
}

double decreasing_rearrangement(const LevelSets& ls, double tau) {
    if (!(tau > 0.0)) return ls.sup();
    if (!(ls.top() > 0.0)) return 0.0;
    if (ls.measure_above(0.0) <= tau) return 0.0;
    // mu(e^ell) - tau is nonincreasing in ell; f* is where it drops through zero
    auto g = [&](double ell) {
        const double m = ls.measure_above(std::exp(ell));
        return std::isfinite(m) ? m - tau : 1e300;
    };
    double b = std::log(std::isfinite(ls.sup()) ? ls.sup() : ls.top());
    for (int it = 0; it < 400 && g(b) > 0.0; ++it) b += 2.0;
    double a = std::log(ls.top()) - kLevelFloor;
    for (int it = 0; g(a) <= 0.0; ++it) {
        a -= kLevelFloor;
        if (it > 10) return 0.0;
    }
    const double ga = g(a), gb = g(b);
    if (gb == 0.0) return std::exp(b);
    std::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(g, a, b, ga, gb, boost::math::tools::eps_tolerance<double>(50),
                                                     iters);
    return std::exp(r.second);
}

double lorentz_norm_rearranged(const RadialProfile& u, int N, double p, double q) {
    if (!(p > 0.0 && q > 0.0)) throw DomainError("lorentz_norm: need p, q > 0");
    if (!u.lorentz_finite(N, p, q)) return kInf;
    const LevelSets ls(u, N);
    if (std::isinf(q)) {
        // sup tau^{1/p} f*(tau) over the breakpoints of mu
        double best = 0.0;
        for (double c : ls.critical_values()) {
            if (c <= ls.top() * std::exp(-kLevelFloor)) continue;
            for (double lam : {c, c * (1.0 - 1e-12)}) {
                const double m = ls.measure_above(lam);
                if (m > 0.0 && std::isfinite(m)) best = std::max(best, std::pow(m, 1.0 / p) * decreasing_rearrangement(ls, m));
            }
        }
        return std::max(best, weak_norm(ls, p));
    }
    if (!(ls.top() > 0.0)) return 0.0;
    auto H = [&](double sig) {
        const double f = decreasing_rearrangement(ls, std::exp(sig));
        return f > 0.0 ? std::exp(sig * q / p + q * std::log(f)) : 0.0;
    };
    std::vector<double> br;
    const double lam_floor = ls.top() * std::exp(-kLevelFloor);
    for (double c : ls.critical_values()) {
        if (c <= lam_floor) continue;
        for (double lam : {c, c * (1.0 - 1e-12)}) {
            const double m = ls.measure_above(lam);
            if (m > 0.0 && std::isfinite(m)) br.push_back(std::log(m));
        }
    }
    const double M_floor = ls.measure_above(lam_floor);
    if (std::isfinite(M_floor) && M_floor > 0.0) br.push_back(std::log(M_floor));
    if (br.empty()) br.push_back(0.0);
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end(), [](double x, double y) { return std::abs(x - y) < 1e-12; }),
             br.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < br.size(); ++i) total += integrate_ts(H, br[i], br[i + 1], 1e-11).value;
    total += tail_panels(H, br.front(), true, total);
    total += tail_panels(H, br.back(), false, total);
    return std::pow(total, 1.0 / q);
}

double hardy_potential(const RadialProfile& u, const Params& P) {
    if (!u.hardy_finite(P.N, P.s, P.p)) return kInf;
    const double kappa = P.N - P.sp();
    const double p = P.p;
    double total = integrate_grid(u, [&](double t, double v, double) {
        return std::pow(std::abs(v), p) * std::exp(kappa * t);
    });
    if (!std::isfinite(u.support_lo)) total += tail_power_integral(u.inner, p, kappa, u.grid.t_min, false);
    if (!std::isfinite(u.support_hi)) total += tail_power_integral(u.outer, p, kappa, u.grid.t_max, true);
    return sphere_area(P.N) * total;
}

DistanceResult minimize_amplitude(const std::function<double(double)>& objective, double scale) {
    DistanceResult r;
    const double step = std::pow(10.0, 0.1);
    std::vector<double> as;
    for (int k = 60; k >= -60; --k) as.push_back(-scale * std::pow(10.0, k / 10.0));
    as.push_back(0.0);
    for (int k = -60; k <= 60; ++k) as.push_back(scale * std::pow(10.0, k / 10.0));
    std::vector<double> vals(as.size());
    parallel_for(as.size(), [&](std::size_t i) { vals[i] = objective(as[i]); });
    const std::size_t i = std::min_element(vals.begin(), vals.end()) - vals.begin();
    double lo = as[i == 0 ? 0 : i - 1];
    double hi = as[std::min(as.size() - 1, i + 1)];
    r.bracket = {lo, hi};
    auto neg = [&](double a) { return -objective(a); };
    const auto g = golden_max(neg, lo, hi, 1e-9 * std::max(scale, std::abs(as[i])));
    if (-g.second < vals[i]) {
        r.minimizer_a = g.first;
        r.objective = -g.second;
    } else {
        r.minimizer_a = as[i];
        r.objective = vals[i];
    }
    r.scan_resolution = step;
    return r;
}

std::pair<double, double> brute_scan(const std::function<double(double)>& objective, double lo, double hi, int m) {
    double best_a = lo, best_v = kInf;
    for (int pass = 0; pass < 3; ++pass) {
        std::vector<double> vals(m);
        parallel_for(m, [&](std::size_t i) { vals[i] = objective(lo + (hi - lo) * i / (m - 1)); });
        const int i = std::min_element(vals.begin(), vals.end()) - vals.begin();
        if (vals[i] < best_v) {
            best_v = vals[i];
            best_a = lo + (hi - lo) * i / (m - 1);
        }
        const double h = (hi - lo) / (m - 1);
        lo = best_a - h;
        hi = best_a + h;
    }
    return {best_a, best_v};
}

namespace {

// inf over a of ||w - a e^{g t}||_{L^{r,inf}} / den, with the amplitude map a -> out(a).
DistanceResult amplitude_distance(const RadialProfile& w, int N, double g, double r, double den,
                                  double (*out)(double, double), double out_arg) {
    DistanceResult res;
    res.denominator = den;
    if (!(den > 0.0) || !std::isfinite(den)) {
        res.defined = false;
        res.value = kNaN;
        return res;
    }
    const double unit = sphere_area(N) / N;
    const double scale = weak_norm(LevelSets(w, N), r) / std::pow(unit, 1.0 / r);
    auto obj = [&](double a) { return weak_norm(LevelSets(w, N, a, g), r); };
    res = minimize_amplitude(obj, scale > 0.0 && std::isfinite(scale) ? scale : 1.0);
    res.denominator = den;
    res.value = res.objective / den;
    res.minimizer_a = out(res.minimizer_a, out_arg);
    res.bracket = {out(res.bracket.first, out_arg), out(res.bracket.second, out_arg)};
    return res;
}

double identity_map(double a, double) { return a; }
double sign_power_map(double a, double b) { return sgn_pow(a, b); }
double divide_map(double a, double K) { return a / K; }

}  // namespace

DistanceResult distance_dsp(const RadialProfile& u, const Params& P) {
    if (!(P.p >= 2.0)) throw DomainError("d_{s,p}: need p >= 2");
    const double ps = P.p_star();
    return amplitude_distance(u, P.N, -P.gamma(), ps, lorentz_norm(u, P.N, ps, P.p), identity_map, 0.0);
}

DistanceResult distance_Dsp(const RadialProfile& u, const Params& P) {
    if (!(P.p > 1.0 && P.p < 2.0)) throw DomainError("D_{s,p}: need 1 < p < 2");
    const double b = 0.5 * P.p;
    const double den = std::pow(lorentz_norm(u, P.N, P.p_star(), P.p), b);
    const RadialProfile w = sign_power(u, b);
    return amplitude_distance(w, P.N, -P.gamma() * b, P.q_exp(), den, sign_power_map, 1.0 / b);
}

DistanceResult distance_local(const RadialProfile& u, int N, double p) {
    if (!(p > 1.0 && p < N)) throw DomainError("d_p: need 1 < p < N");
    const Params P = make_params(N, 1.0, p);
    const double ps = P.p_star();
    return amplitude_distance(u, N, -P.gamma(), ps, lorentz_norm(u, N, ps, p), identity_map, 0.0);
}

DistanceResult distance_pullback(const RadialProfile& u, int N, double s) {
    if (N < 3) throw DomainError("pullback distance: need N >= 3");
    const Params P = make_params(N, s, 2.0);
    const double K = constant_K(P);
    const RadialProfile Tu = transform_T(u, N, s).profile;
    const double r = 2.0 * N / (N - 2.0);
    return amplitude_distance(Tu, N, -0.5 * (N - 2.0), r, lorentz_norm(Tu, N, r, 2.0), divide_map, K);
}

}  // namespace hardylab
