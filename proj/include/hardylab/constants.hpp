#pragma once

#include "hardylab/quadrature.hpp"
#include "hardylab/specfun.hpp"

#include <vector>

namespace hardylab {

struct ConstantSet {
    Params params;
    double frac_sharp = 0.0;
    double fourier_sharp = 0.0;
    double cp = 0.0;
    double cp_star = 0.0;
    double K = 0.0;
    double local_sharp = 0.0;
    double kappa = 0.0;
    double quad_error = 0.0;
};

/// Angular kernel Phi_{N,s,p}(r) for r in (0,1).
double angular_kernel_phi(const Params& P, double r);
/// Same kernel with 1 - r passed separately so r -> 1 keeps full precision.
/// Accepts r = 0 (the limit |S^{N-1}|).
double phi_kernel(int N, double sp, double r, double one_minus_r);

QuadResult sharp_constant_frac(const Params& P);
double remainder_constant_cp(double p);
double remainder_constant_cp_star(double p);
/// Constant p - 1 usable in place of c*_p for nonnegative functions.
double remainder_constant_cp_star_nonneg(double p);
double sharp_constant_local(int N, double p);

struct ElResidual {
    double residual = 0.0;  ///< |PV - C| / C
    double pv_value = 0.0;
    double quad_error = 0.0;
    bool converged = true;
};
ElResidual el_residual(const Params& P);

/// Gagliardo-to-Fourier energy ratio of the Gaussian of width sigma (p = 2).
double conversion_kappa(int N, double s, double sigma = 1.0);

/// Builds every entry; kappa is filled only for p = 2 and s < 1.
ConstantSet constant_set(const Params& P);

/// h-quadrature nodes (h = log of the radius ratio) with Phi(e^{-h}) cached,
/// shared by every double integral of a given (N, sp).
struct KernelTable {
    int N = 0;
    double sp = 0.0;
    NodeSet nodes;
    std::vector<double> phi;
    double h_first = 0.0;  ///< integrand below this is estimated, not sampled
    double h_max = 0.0;    ///< past this a closed-form tail is added
    double phi_zero = 0.0; ///< Phi(0) = |S^{N-1}|
};
const KernelTable& kernel_table(int N, double sp);

}  // namespace hardylab
