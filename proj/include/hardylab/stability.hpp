#pragma once

#include "hardylab/norms.hpp"

#include <string>
#include <vector>

namespace hardylab {

enum class Regime { FracPGe2, FracPLt2, Local, PullbackP2 };

Regime parse_regime(const std::string& name);
std::string regime_name(Regime r);
/// Power of the distance in each stability estimate.
double stability_exponent(Regime r, double p);

struct StabilityReport {
    Params params;
    Regime regime = Regime::FracPGe2;
    double deficit = 0.0;
    double hardy = 0.0;  ///< Hardy potential, or the transformed mass in the pullback regime
    DistanceResult distance;
    double exponent = 0.0;
    double ratio = 0.0;  ///< deficit / (distance^exponent * hardy); NaN when undefined
    double quad_error = 0.0;
    std::string error;   ///< set when the row could not be evaluated
};

StabilityReport stability_report(const RadialProfile& u, const Params& P, Regime regime);

enum class Family { Window, Perturb, Gauss };
Family parse_family(const std::string& name);
std::string family_name(Family f);
/// Family member at parameter x: window log-width L, perturbation size eps, or Gaussian sigma.
RadialProfile family_member(Family f, double x, const Params& P, const GridSpec& grid = {});

struct ScanTable {
    std::vector<double> param;
    std::vector<StabilityReport> rows;
    double floor = 0.0;  ///< smallest finite ratio
};
ScanTable family_scan(Family f, const std::vector<double>& values, const Params& P, Regime regime,
                      const GridSpec& grid = {});

}  // namespace hardylab
