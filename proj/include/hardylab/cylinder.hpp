#pragma once

#include "hardylab/profiles.hpp"

#include <complex>
#include <vector>

namespace hardylab {

using cplx = std::complex<double>;

/// One spherical-harmonic channel (ell, m) sampled on the t-grid or on the
/// matching frequency grid.
struct Mode {
    int ell = 0;
    int m = 1;
    std::vector<cplx> data;
};

/// Function on the cylinder R x S^{N-1}. The radial mode (0, 1) carries the
/// factor sqrt|S^{N-1}|, so sum_modes int |phi|^2 dt is the weighted L^2 mass.
struct CylinderSignal {
    GridSpec grid;
    int N = 3;
    double weight = 1.0;
    std::vector<Mode> modes;
    double leak = 0.0;  ///< estimated mass fraction outside the window

    double mass() const;  ///< sum_j |phi_j|^2 dt over all modes
};

/// Unitary DFT of a CylinderSignal: hat phi_k = dt/sqrt(2 pi) sum_j phi_j e^{-i xi_k t_j},
/// frequencies in FFT order with spacing 2 pi / (n dt).
struct ModeSpectrum {
    GridSpec grid;
    int N = 3;
    double weight = 1.0;
    std::vector<double> xi;
    std::vector<Mode> modes;
    double dxi() const;
    double mass() const;  ///< sum_k |hat phi_k|^2 dxi
};

enum class Direction { Forward, Inverse };

/// Mass fraction above which a window leak is reported.
inline constexpr double kLeakThreshold = 1e-8;

CylinderSignal lift(const RadialProfile& u, int N, double weight);
/// Back to a radial profile (zero tails); slopes from the spectral derivative.
RadialProfile unlift(const CylinderSignal& phi, int N, double weight);
/// Synthetic single-mode signal for exercising ell > 0.
CylinderSignal mode_signal(const GridSpec& grid, int N, double weight, int ell, int m, const std::vector<cplx>& data);

ModeSpectrum spectrum(const CylinderSignal& phi);
CylinderSignal inverse_spectrum(const ModeSpectrum& S);
/// Multiplies by the Gamma-ratio multiplier (or its reciprocal); the (0,0) bin uses K.
ModeSpectrum apply_multiplier(const ModeSpectrum& S, int N, double s, Direction dir);

struct TransformResult {
    RadialProfile profile;
    double leak = 0.0;           ///< window leak of the input lift
    double amplification = 1.0;  ///< output/input mass ratio of the multiplier step, square-rooted
};
TransformResult transform_T(const RadialProfile& u, int N, double s);
TransformResult inverse_transform_T(const RadialProfile& u, int N, double s);

/// sum (xi^2 + mu_ell) |hat phi|^2 dxi
double spectral_deficit_local(const CylinderSignal& phi);
double spectral_deficit_local(const ModeSpectrum& S);
/// sum P_s(xi, ell) |hat phi|^2 dxi
double spectral_deficit_fractional(const CylinderSignal& phi, double s);
double spectral_deficit_fractional(const ModeSpectrum& S, double s);

/// Largest sampled multiplier value over the spectrum's bins and ell <= ell_max.
double multiplier_sup(const ModeSpectrum& S, double s, int ell_max);

}  // namespace hardylab
