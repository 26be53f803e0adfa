#pragma once

#include <complex>
#include <stdexcept>

namespace hardylab {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Problem triple (N, s, p) with the exponents derived from it.
/// s == 1 means the local (gradient) problem.
struct Params {
    int N = 3;
    double s = 0.5;
    double p = 2.0;

    double sp() const { return s * p; }
    /// Np/(N - sp)
    double p_star() const { return N * p / (N - sp()); }
    /// 2N/(N - sp)
    double q_exp() const { return 2.0 * N / (N - sp()); }
    /// Decay rate of the virtual extremizer, (N - sp)/p.
    double gamma() const { return (N - sp()) / p; }
    double alpha_exp() const;
    bool local() const { return s == 1.0; }
};

/// Throws DomainError unless N >= 1, 0 < s <= 1, p >= 1 and sp < N.
Params make_params(int N, double s, double p);

double sphere_area(int n);
double cylinder_eigenvalue(int N, int ell);

std::complex<double> lgamma_complex(std::complex<double> z);
double trigamma(double x);

double frac_hardy_constant_fourier(const Params& P);
double symbol_P(const Params& P, double xi, int ell);
double multiplier_m(const Params& P, double xi, int ell);
double constant_K(const Params& P);

}  // namespace hardylab
