#pragma once

#include "hardylab/cylinder.hpp"

#include <vector>

namespace hardylab {

struct UncertaintyReport {
    double deficit = 0.0;   ///< Fourier-form fractional deficit
    double mass = 0.0;      ///< M_T
    double variance = 0.0;  ///< V_T, about t = 0
    double ratio = 0.0;     ///< deficit * variance / mass^2
    double sharp_gap = 0.0; ///< ratio - 1/4
    double centroid = 0.0;           ///< t-centroid of |T[u]|^2 on the cylinder
    double variance_centered = 0.0;  ///< V_T about the centroid
    double ratio_centered = 0.0;
    double leak = 0.0;
};

double transformed_mass(const RadialProfile& u, int N, double s);
double transformed_variance(const RadialProfile& u, int N, double s);
UncertaintyReport uncertainty_report(const RadialProfile& u, int N, double s);

/// Cylinder state (1 - t^2/R^2)_+^{alpha R^2}, which tends to e^{-alpha t^2}.
std::vector<double> windowed_gaussian_state(const GridSpec& grid, double alpha, double R);
/// Profile whose transform is the given radial cylinder state (lift weight 1).
RadialProfile pullback_of_state(const GridSpec& grid, int N, double s, const std::vector<double>& state);

struct SharpnessRow {
    double R = 0.0;
    double alpha = 0.0;
    double ratio = 0.0;
    double gap = 0.0;
};
std::vector<SharpnessRow> gaussian_sharpness_scan(int N, double s, double alpha, const std::vector<double>& windows,
                                                  const GridSpec& grid = {});

}  // namespace hardylab
