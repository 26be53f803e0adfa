#include "hardylab/uncertainty.hpp"

#include "hardylab/parallel.hpp"

#include <cmath>

namespace hardylab {

namespace {

void require_dim(int N) {
    if (N < 4) throw DomainError("uncertainty: the logarithmic variance needs N >= 4");
}

struct Transformed {
    ModeSpectrum in;
    CylinderSignal out;
    double leak = 0.0;
};

Transformed transformed(const RadialProfile& u, int N, double s) {
    const CylinderSignal phi = lift(u, N, s);
    Transformed r;
    r.in = spectrum(phi);
    r.out = inverse_spectrum(apply_multiplier(r.in, N, s, Direction::Forward));
    r.leak = phi.leak;
    return r;
}

double moment(const CylinderSignal& psi, int k, double c) {
    double m = 0.0;
    for (const Mode& md : psi.modes)
        for (int j = 0; j < psi.grid.n; ++j) m += std::pow(psi.grid.t(j) - c, k) * std::norm(md.data[j]);
    return m * psi.grid.dt();
}

}  // namespace

double transformed_mass(const RadialProfile& u, int N, double s) {
    require_dim(N);
    return transformed(u, N, s).out.mass();
}

double transformed_variance(const RadialProfile& u, int N, double s) {
    require_dim(N);
    return moment(transformed(u, N, s).out, 2, 0.0);
}

UncertaintyReport uncertainty_report(const RadialProfile& u, int N, double s) {
    require_dim(N);
    const Transformed T = transformed(u, N, s);
    UncertaintyReport r;
    r.mass = T.out.mass();
    if (!(r.mass > 0.0)) throw DomainError("uncertainty: zero transformed mass");
    r.deficit = spectral_deficit_fractional(T.in, s);
    r.variance = moment(T.out, 2, 0.0);
    r.ratio = r.deficit * r.variance / (r.mass * r.mass);
    r.sharp_gap = r.ratio - 0.25;
    r.centroid = moment(T.out, 1, 0.0) / r.mass;
    r.variance_centered = moment(T.out, 2, r.centroid);
    r.ratio_centered = r.deficit * r.variance_centered / (r.mass * r.mass);
    r.leak = T.leak;
    return r;
}

std::vector<double> windowed_gaussian_state(const GridSpec& grid, double alpha, double R) {
    if (!(alpha > 0.0 && R > 0.0)) throw DomainError("windowed state: need alpha, R > 0");
    std::vector<double> v(grid.n);
    const double e = alpha * R * R;
    for (int j = 0; j < grid.n; ++j) {
        const double x = 1.0 - std::pow(grid.t(j) / R, 2);
        v[j] = x > 0.0 ? std::exp(e * std::log(x)) : 0.0;
    }
    return v;
}

RadialProfile pullback_of_state(const GridSpec& grid, int N, double s, const std::vector<double>& state) {
    std::vector<cplx> data(state.begin(), state.end());
    const double root = std::sqrt(sphere_area(N));
    for (auto& z : data) z *= root;
    const CylinderSignal psi = mode_signal(grid, N, 1.0, 0, 1, data);
    const ModeSpectrum S = apply_multiplier(spectrum(psi), N, s, Direction::Inverse);
    RadialProfile u = unlift(inverse_spectrum(S), N, s);
    u.label = "pullback";
    return u;
}

std::vector<SharpnessRow> gaussian_sharpness_scan(int N, double s, double alpha, const std::vector<double>& windows,
                                                  const GridSpec& grid) {
    require_dim(N);
    std::vector<SharpnessRow> rows(windows.size());
    parallel_for(windows.size(), [&](std::size_t i) {
        const double R = windows[i];
        const RadialProfile u = pullback_of_state(grid, N, s, windowed_gaussian_state(grid, alpha, R));
        const UncertaintyReport rep = uncertainty_report(u, N, s);
        rows[i] = {R, alpha, rep.ratio, rep.sharp_gap};
    });
    return rows;
}

}  // namespace hardylab
