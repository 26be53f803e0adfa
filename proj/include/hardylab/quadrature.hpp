#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <vector>

namespace hardylab {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
};

/// Adaptive 15-point Gauss-Kronrod on [a,b].
template <class F>
QuadResult integrate_gk(F&& f, double a, double b, double rel_tol = 1e-13, unsigned max_depth = 12) {
    if (a == b) return {};
    // the library's local error test is unscaled, so hand it the unit interval
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    auto g = [&](double x) { return half * f(mid + half * x); };
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(g, -1.0, 1.0, max_depth, rel_tol,
                                                                                   &err);
    return {v, std::abs(err)};
}

/// Sums adaptive Gauss-Kronrod over consecutive panels [breaks[i], breaks[i+1]].
template <class F>
QuadResult integrate_panels(F&& f, const std::vector<double>& breaks, double rel_tol = 1e-13,
                            unsigned max_depth = 12) {
    QuadResult out;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const QuadResult r = integrate_gk(f, breaks[i], breaks[i + 1], rel_tol, max_depth);
        out.value += r.value;
        out.error += r.error;
    }
    return out;
}

/// Tanh-sinh on [a,b]; f receives (x, distance to the nearer endpoint).
template <class F>
QuadResult integrate_ts(F&& f, double a, double b, double rel_tol = 1e-12) {
    if (a == b) return {};
    static thread_local boost::math::quadrature::tanh_sinh<double> ts(12);
    double err = 0.0;
    double l1 = 0.0;
    const double v = ts.integrate(f, a, b, rel_tol, &err, &l1);
    return {v, err};
}

/// Points a < a+h0 < a+h0*ratio < ... < b, dense toward a.
std::vector<double> graded_toward_left(double a, double b, double h0, double ratio = 2.0);
/// Mirror of graded_toward_left, dense toward b.
std::vector<double> graded_toward_right(double a, double b, double h0, double ratio = 2.0);
/// Dense toward both ends of [a,b].
std::vector<double> graded_both(double a, double b, double h0, double ratio = 2.0);

/// Fixed Gauss-Kronrod nodes on a panel partition. wg carries the embedded
/// 7-point Gauss weights (zero on Kronrod-only nodes) for error estimates.
struct NodeSet {
    std::vector<double> x;
    std::vector<double> wk;
    std::vector<double> wg;

    static NodeSet from_breaks(const std::vector<double>& breaks);
    std::size_t size() const { return x.size(); }
};

/// Fixed Gauss-Legendre rule with n points mapped to [0,1].
struct UnitRule {
    std::vector<double> x;
    std::vector<double> w;
};
const UnitRule& gauss_legendre_unit(int n);

}  // namespace hardylab
