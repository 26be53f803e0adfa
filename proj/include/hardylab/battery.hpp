#pragma once

#include "hardylab/profiles.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hardylab {

std::vector<std::string> preset_names();
/// Named test profile. alpha only affects "cyl-gauss".
RadialProfile make_preset(const std::string& name, const Params& P, const GridSpec& grid = {}, double alpha = 1.0);

struct Check {
    std::string name;
    double value = 0.0;      ///< observed discrepancy or margin
    double tolerance = 0.0;
    bool pass = false;
};

struct BatteryResult {
    std::vector<Check> checks;
    bool all_pass() const;
    int failures() const;
};

/// Invariant battery: nonnegativity, homogeneity, dilation covariance,
/// subadditivity, Plancherel and round trips, two-route Lorentz norms,
/// and the uncertainty floor. seed permutes the member order.
BatteryResult run_battery(const GridSpec& grid = {}, std::uint64_t seed = 0);

}  // namespace hardylab
