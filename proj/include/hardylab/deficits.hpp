#pragma once

#include "hardylab/profiles.hpp"
#include "hardylab/quadrature.hpp"

namespace hardylab {

struct DeficitReport {
    double energy = 0.0;
    double hardy = 0.0;
    double sharp_constant = 0.0;
    double deficit = 0.0;
    double remainder = 0.0;  ///< 0 unless requested
    double quad_error = 0.0;
};

/// v = u r^{(N-sp)/p}, tails shifted accordingly.
RadialProfile ground_state_ratio(const RadialProfile& u, const Params& P);

/// Weight W(r, rho) of the p < 2 remainder.
double minmax_weight(const Params& P, double r, double rho);

/// [u]^p, the Gagliardo double integral, with an error estimate. +inf if divergent.
QuadResult gagliardo_seminorm(const RadialProfile& u, const Params& P);
/// Ground-state remainder (p >= 2).
QuadResult weighted_remainder_eps(const RadialProfile& u, const Params& P);
/// Squared sign-power remainder with the min/max weight (1 < p < 2).
QuadResult weighted_remainder_eps_w(const RadialProfile& u, const Params& P);

enum class RemainderKind { None, Eps, EpsW };
DeficitReport fractional_deficit(const RadialProfile& u, const Params& P, RemainderKind rem = RemainderKind::None);

/// |S^{N-1}| int |u'(r)|^p r^{N-1} dr. Sharp cutoffs are rejected.
double local_dirichlet_energy(const RadialProfile& u, int N, double p);
DeficitReport local_deficit(const RadialProfile& u, int N, double p, bool with_remainder = false);
/// int |grad v|^p |x|^{-(N-p)} dx with v = u |x|^{(N-p)/p}.
double local_remainder(const RadialProfile& u, int N, double p);
/// Weighted form used for 1 < p < 2: (p(p-1)/2) |S| int v_t^2 (gamma |v| + |v_t|)^{p-2} dt.
double local_weighted_remainder(const RadialProfile& u, int N, double p);

}  // namespace hardylab
