#pragma once

#include "hardylab/profiles.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace hardylab {

/// Level-set index of |u - a e^{g t}| on the whole log-radius axis: grid cells
/// split into monotone pieces, sampled tail transition zones, and closed-form
/// far tails. With a = 0 this is just |u|.
class LevelSets {
public:
    LevelSets(const RadialProfile& u, int N, double a = 0.0, double g = 0.0);

    /// |{x : |f(x)| > lambda}|, possibly +inf. lambda = 0 gives the support measure.
    double measure_above(double lambda) const;
    /// Largest |f| over the non-asymptotic pieces.
    double top() const { return top_; }
    /// Largest |f| on the sampled grid window, tails excluded.
    double body_top() const { return body_top_; }
    /// sup |f|, +inf if the inner tail blows up.
    double sup() const { return sup_; }
    /// Values of |f| at local extrema and jumps, descending.
    const std::vector<double>& critical_values() const { return critical_; }
    /// Limits of lambda * mu(lambda)^{1/p} as lambda -> 0 and lambda -> inf.
    std::pair<double, double> weak_limits(double p) const;

private:
    enum Kind { Cell, Bare, NearIn, NearOut };
    struct Piece {
        double ta, tb, fa, fb;
        Kind kind;
        int cell;
    };
    struct Far {
        bool present = false;
        double edge = 0.0;
        double c = 0.0;
        double g = 0.0;
    };

    double signed_value(Kind kind, int cell, double t) const;
    double signed_slope(Kind kind, int cell, double t) const;
    void add_monotone(Kind kind, int cell, double t0, double t1, int samples);
    double crossing(const Piece& pc, double lambda) const;
    double far_measure(const Far& fz, bool inner, double lambda) const;
    double ball(double ta, double tb) const;
    void build_index();

    const RadialProfile* u_;
    int N_;
    double a_, g_;
    double unit_;  // |S^{N-1}| / N
    Tail tin_, tout_;
    std::vector<Piece> pieces_;
    Far far_in_, far_out_;
    double top_ = 0.0;
    double body_top_ = 0.0;
    double sup_ = 0.0;
    std::vector<double> critical_;
    // pieces sorted by min |f| descending, with running ball sums
    std::vector<double> lo_desc_, full_sum_;
    // octave buckets of pieces whose value range crosses the bucket
    int bucket_min_ = 0;
    std::vector<std::vector<int>> buckets_;
};

/// Weak quasi-norm sup lambda mu(lambda)^{1/p} from a level-set index.
double weak_norm(const LevelSets& ls, double p);

double distribution_function(const RadialProfile& u, double lambda, int N);

/// Lorentz L^{p,q} quasi-norm through the layer-cake formula; q = inf gives the
/// weak (Marcinkiewicz) norm. +inf when the tails make it diverge.
double lorentz_norm(const RadialProfile& u, int N, double p, double q);
/// Same quantity through the decreasing rearrangement f*.
double lorentz_norm_rearranged(const RadialProfile& u, int N, double p, double q);
/// f*(tau)
double decreasing_rearrangement(const LevelSets& ls, double tau);

/// int |u|^p |x|^{-sp} dx; s = 1 gives the local potential. +inf on divergence.
double hardy_potential(const RadialProfile& u, const Params& P);

struct DistanceResult {
    double value = 0.0;
    double minimizer_a = 0.0;
    std::pair<double, double> bracket{0.0, 0.0};
    double scan_resolution = 0.0;  ///< ratio between neighboring scanned |a|
    double objective = 0.0;        ///< numerator at the minimizer
    double denominator = 0.0;
    bool defined = true;           ///< false when the denominator is 0 or inf
};

/// inf_a ||u - omega_a||_{L^{p*,inf}} / ||u||_{L^{p*,p}}, p >= 2.
DistanceResult distance_dsp(const RadialProfile& u, const Params& P);
/// Sign-power distance for 1 < p < 2.
DistanceResult distance_Dsp(const RadialProfile& u, const Params& P);
/// Local distance with a |x|^{-(N-p)/p}.
DistanceResult distance_local(const RadialProfile& u, int N, double p);
/// Pullback distance through T (p = 2).
DistanceResult distance_pullback(const RadialProfile& u, int N, double s);

/// Generic amplitude search: minimizes objective(a) over a in R given the
/// amplitude scale of the reference family.
DistanceResult minimize_amplitude(const std::function<double(double)>& objective, double scale);

/// Brute-force scan of objective over a uniform grid of m amplitudes in [lo, hi],
/// then again around the best sample; returns (best a, best value).
std::pair<double, double> brute_scan(const std::function<double(double)>& objective, double lo, double hi,
                                     int m = 2000);

}  // namespace hardylab
