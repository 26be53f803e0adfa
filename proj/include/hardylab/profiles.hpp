#pragma once

#include "hardylab/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace hardylab {

/// Uniform grid in t = ln r.
struct GridSpec {
    double t_min = -12.0;
    double t_max = 12.0;
    int n = 2048;

    double dt() const { return (t_max - t_min) / (n - 1); }
    double t(int j) const { return t_min + j * dt(); }
    void validate() const;
};

/// c * r^g
struct PowerTerm {
    double c = 0.0;
    double g = 0.0;
};

/// Sum of power laws used past one end of the grid. Empty means zero, which is
/// also how super-polynomial decay is recorded.
struct Tail {
    std::vector<PowerTerm> terms;

    bool zero() const { return terms.empty(); }
    double value(double t) const;
    double slope(double t) const;  ///< d/dt
    /// Exponent that dominates toward the outer end (max) or the origin (min);
    /// -inf / +inf for an empty tail.
    double leading(bool outer) const;
    /// Merges equal exponents and drops vanishing coefficients.
    Tail normalized() const;
};

/// Radial function sampled as u(e^{t_j}) with d/dt slopes, C^1 cubic Hermite in t.
struct RadialProfile {
    GridSpec grid;
    std::vector<double> values;
    std::vector<double> slopes;
    Tail inner;
    Tail outer;
    std::string label;
    /// Hard cutoff: u = 0 outside [support_lo, support_hi] in t.
    double support_lo = -std::numeric_limits<double>::infinity();
    double support_hi = std::numeric_limits<double>::infinity();

    bool masked() const { return std::isfinite(support_lo) || std::isfinite(support_hi); }
    /// Value at log-radius t.
    double at(double t) const;
    /// d/dt at log-radius t.
    double slope_at(double t) const;
    /// Value in cell k at local coordinate f in [0,1); k may lie outside the grid.
    double at_cell(int k, double f) const;
    /// u(t_j + h) - u(t_j) with h = (m + f) dt, accurate for small h.
    double increment(int j, int m, double f) const;
    /// Value and d/dt of the cubic on grid cell k in [0, n-2] at local f.
    void cell_eval(int k, double f, double& v, double& dv) const;

    /// Hardy potential int |u|^p |x|^{-sp} is finite per the tails.
    bool hardy_finite(int N, double s, double p) const;
    /// Lorentz L^{p,q} quasi-norm finite per the tails (q = inf for the weak norm).
    bool lorentz_finite(int N, double p, double q) const;
};

double evaluate(const RadialProfile& u, double r);
double derivative(const RadialProfile& u, double r);

RadialProfile make_extremizer(const Params& P, double a, const GridSpec& grid = {});
RadialProfile make_truncated_extremizer(const Params& P, double a, double r_in, double r_out, double ramp,
                                        const GridSpec& grid = {});
RadialProfile make_gaussian(double sigma, const GridSpec& grid = {});
RadialProfile make_cylinder_gaussian(int N, double weight, double A, double alpha, const GridSpec& grid = {});
/// c r^g on the whole axis.
RadialProfile make_power(double c, double g, const GridSpec& grid = {});
/// Samples with monotonicity-limited slopes (Fritsch-Carlson) and zero tails.
RadialProfile from_samples(const GridSpec& grid, std::vector<double> values, std::string label = "samples");

/// Zeroes samples outside a hard cutoff and drops it.
RadialProfile materialized(const RadialProfile& u);
RadialProfile scaled(const RadialProfile& u, double c);
/// cu*u + cw*w on a shared grid.
RadialProfile combine(const RadialProfile& u, double cu, const RadialProfile& w, double cw);
/// u(x / lambda), exact: the grid is translated by ln lambda.
RadialProfile dilate(const RadialProfile& u, double lambda);
/// Resamples u onto another grid.
RadialProfile resample(const RadialProfile& u, const GridSpec& grid);
RadialProfile positive_part(const RadialProfile& u);
RadialProfile negative_part(const RadialProfile& u);
/// Samplewise x -> |x|^b sgn x.
RadialProfile sign_power(const RadialProfile& u, double b);

/// int |sum c e^{gt}|^p e^{kappa t} dt over (-inf, edge] (outer = false) or
/// [edge, inf). +inf when the integral diverges.
double tail_power_integral(const Tail& tail, double p, double kappa, double edge, bool outer);

/// int g(t, u, du/dt) dt over the grid window, Gauss-Legendre per cell,
/// honoring a hard cutoff.
template <class G>
double integrate_grid(const RadialProfile& u, G&& g, int order = 8);

}  // namespace hardylab

#include "hardylab/quadrature.hpp"

template <class G>
double hardylab::integrate_grid(const RadialProfile& u, G&& g, int order) {
    const UnitRule& rule = gauss_legendre_unit(order);
    const double dt = u.grid.dt();
    double total = 0.0;
    for (int k = 0; k + 1 < u.grid.n; ++k) {
        const double t0 = u.grid.t(k);
        double a = 0.0, b = 1.0;
        if (u.masked()) {
            a = std::max(a, (u.support_lo - t0) / dt);
            b = std::min(b, (u.support_hi - t0) / dt);
            if (!(b > a)) continue;
        }
        double cell = 0.0;
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            const double f = a + (b - a) * rule.x[i];
            double v, dv;
            u.cell_eval(k, f, v, dv);
            cell += rule.w[i] * g(t0 + f * dt, v, dv);
        }
        total += cell * (b - a) * dt;
    }
    return total;
}
