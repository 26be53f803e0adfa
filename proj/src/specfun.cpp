#include "hardylab/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace hardylab {

namespace {

using cd = std::complex<double>;

// Lanczos g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cd lgamma_lanczos(cd z) {
    z -= 1.0;
    cd a = kLanczos[0];
    for (int k = 1; k < 9; ++k) a += kLanczos[k] / (z + double(k));
    const cd t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

// Re log Gamma difference lnG(a + iy) - lnG(b + iy).
double re_log_ratio(double a, double b, double y) {
    return (lgamma_complex(cd(a, y)) - lgamma_complex(cd(b, y))).real();
}

}  // namespace

double Params::alpha_exp() const {
    if (local()) return std::max(4.0, 2.0 * p);
    return p >= 2.0 ? 2.0 * p : 4.0;
}

Params make_params(int N, double s, double p) {
    if (N < 1) throw DomainError("N must be >= 1");
    if (!(s > 0.0 && s <= 1.0)) throw DomainError("s must lie in (0,1]");
    if (!(p >= 1.0)) throw DomainError("p must be >= 1");
    if (!(s * p < N)) throw DomainError("need sp < N");
    return Params{N, s, p};
}

double sphere_area(int n) {
    if (n < 1) throw DomainError("sphere_area: n must be >= 1");
    return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

double cylinder_eigenvalue(int N, int ell) {
    if (N < 2 || ell < 0) throw DomainError("cylinder_eigenvalue: need N >= 2, ell >= 0");
    return double(ell) * double(ell + N - 2);
}

cd lgamma_complex(cd z) {
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        const cd s = std::sin(std::numbers::pi * z);
        return std::log(std::numbers::pi) - std::log(s) - lgamma_lanczos(1.0 - z);
    }
    return lgamma_lanczos(z);
}

double trigamma(double x) {
    if (!(x > 0.0)) throw DomainError("trigamma: x must be positive");
    double acc = 0.0;
    while (x < 10.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    const double r = 1.0 / x;
    const double r2 = r * r;
    // Bernoulli tail: B_{2k} / x^{2k+1}
    double series = r2 * (7.0 / 6.0);
    series = r2 * (-691.0 / 2730.0 + series);
    series = r2 * (5.0 / 66.0 + series);
    series = r2 * (-1.0 / 30.0 + series);
    series = r2 * (1.0 / 42.0 + series);
    series = r2 * (-1.0 / 30.0 + series);
    series = r2 * (1.0 / 6.0 + series);
    return acc + r + 0.5 * r2 + r * series;
}

double frac_hardy_constant_fourier(const Params& P) {
    if (!(P.N > 2.0 * P.s)) throw DomainError("C_{N,s}: need N > 2s");
    const double a = (P.N + 2.0 * P.s) / 4.0;
    const double b = (P.N - 2.0 * P.s) / 4.0;
    return std::exp(2.0 * P.s * std::log(2.0) + 2.0 * (std::lgamma(a) - std::lgamma(b)));
}

double symbol_P(const Params& P, double xi, int ell) {
    if (P.N < 3) throw DomainError("symbol_P: need N >= 3");
    if (ell < 0) throw DomainError("symbol_P: ell must be >= 0");
    const double y = 0.5 * std::abs(xi);
    const double a = (P.N + 2.0 * P.s + 2.0 * ell) / 4.0;
    const double b = (P.N - 2.0 * P.s + 2.0 * ell) / 4.0;
    const double a0 = (P.N + 2.0 * P.s) / 4.0;
    const double b0 = (P.N - 2.0 * P.s) / 4.0;
    const double d = re_log_ratio(a, b, y) - re_log_ratio(a0, b0, 0.0);
    return frac_hardy_constant_fourier(P) * std::expm1(2.0 * d);
}

double multiplier_m(const Params& P, double xi, int ell) {
    if (xi == 0.0 && ell == 0) return constant_K(P);
    return std::sqrt(symbol_P(P, xi, ell) / (xi * xi + cylinder_eigenvalue(P.N, ell)));
}

double constant_K(const Params& P) {
    if (!(P.N > 2.0 * P.s)) throw DomainError("K_{N,s}: need N > 2s");
    const double d = trigamma((P.N - 2.0 * P.s) / 4.0) - trigamma((P.N + 2.0 * P.s) / 4.0);
    return 0.5 * std::sqrt(d) * std::sqrt(frac_hardy_constant_fourier(P));
}

}  // namespace hardylab
