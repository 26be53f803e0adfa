#include "hardylab/cylinder.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <mutex>
#include <numbers>

namespace hardylab {

namespace {

std::mutex& plan_mutex() {
    static std::mutex mu;
    return mu;
}

// In-place unnormalized DFT with sign -1 (forward) or +1 (backward).
void dft(std::vector<cplx>& x, int sign) {
    const int n = static_cast<int>(x.size());
    fftw_complex* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    fftw_plan plan;
    {
        std::lock_guard lk(plan_mutex());
        plan = fftw_plan_dft_1d(n, buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    std::memcpy(buf, x.data(), sizeof(fftw_complex) * n);
    fftw_execute(plan);
    std::memcpy(static_cast<void*>(x.data()), buf, sizeof(fftw_complex) * n);
    {
        std::lock_guard lk(plan_mutex());
        fftw_destroy_plan(plan);
    }
    fftw_free(buf);
}

std::vector<double> frequencies(const GridSpec& g) {
    const int n = g.n;
    const double dxi = 2.0 * std::numbers::pi / (n * g.dt());
    std::vector<double> xi(n);
    for (int k = 0; k < n; ++k) xi[k] = (k < (n + 1) / 2 ? k : k - n) * dxi;
    return xi;
}

const Mode* radial_mode(const std::vector<Mode>& modes) {
    const Mode* r = nullptr;
    for (const Mode& md : modes) {
        if (md.ell == 0 && md.m == 1) {
            r = &md;
            continue;
        }
        for (const cplx& z : md.data)
            if (z != 0.0) throw DomainError("unlift: non-radial modes are not supported");
    }
    if (!r) throw DomainError("unlift: signal has no radial mode");
    return r;
}

}  // namespace

double CylinderSignal::mass() const {
    double m = 0.0;
    for (const Mode& md : modes)
        for (const cplx& z : md.data) m += std::norm(z);
    return m * grid.dt();
}

double ModeSpectrum::dxi() const { return 2.0 * std::numbers::pi / (grid.n * grid.dt()); }

double ModeSpectrum::mass() const {
    double m = 0.0;
    for (const Mode& md : modes)
        for (const cplx& z : md.data) m += std::norm(z);
    return m * dxi();
}

CylinderSignal lift(const RadialProfile& u, int N, double weight) {
    if (N < 3) throw DomainError("lift: need N >= 3");
    CylinderSignal phi;
    phi.grid = u.grid;
    phi.N = N;
    phi.weight = weight;
    const double c = 0.5 * (N - 2.0 * weight);
    const double root = std::sqrt(sphere_area(N));
    Mode md;
    md.data.resize(u.grid.n);
    for (int j = 0; j < u.grid.n; ++j) {
        const double t = u.grid.t(j);
        const bool off = u.masked() && (t < u.support_lo || t > u.support_hi);
        md.data[j] = off ? 0.0 : root * std::exp(c * t) * u.values[j];
    }
    phi.modes.push_back(std::move(md));
    const double kappa = N - 2.0 * weight;
    double outside = 0.0;
    if (!std::isfinite(u.support_lo)) outside += tail_power_integral(u.inner, 2.0, kappa, u.grid.t_min, false);
    if (!std::isfinite(u.support_hi)) outside += tail_power_integral(u.outer, 2.0, kappa, u.grid.t_max, true);
    outside *= sphere_area(N);
    const double inside = phi.mass();
    phi.leak = std::isfinite(outside) ? (outside > 0.0 ? outside / (inside + outside) : 0.0)
                                      : std::numeric_limits<double>::infinity();
    return phi;
}

RadialProfile unlift(const CylinderSignal& phi, int N, double weight) {
    if (N < 3) throw DomainError("unlift: need N >= 3");
    const Mode* md = radial_mode(phi.modes);
    const GridSpec& g = phi.grid;
    const int n = g.n;
    // d/dt by the spectral derivative, Nyquist bin dropped
    std::vector<cplx> d = md->data;
    dft(d, -1);
    const std::vector<double> xi = frequencies(g);
    for (int k = 0; k < n; ++k) d[k] *= (2 * k == n) ? cplx(0.0) : cplx(0.0, xi[k]) / double(n);
    dft(d, +1);

    RadialProfile u;
    u.grid = g;
    u.label = "unlift";
    u.values.resize(n);
    u.slopes.resize(n);
    const double c = 0.5 * (N - 2.0 * weight);
    const double root = std::sqrt(sphere_area(N));
    for (int j = 0; j < n; ++j) {
        const double e = std::exp(-c * g.t(j)) / root;
        const double v = md->data[j].real();
        u.values[j] = e * v;
        u.slopes[j] = e * (d[j].real() - c * v);
    }
    return u;
}

CylinderSignal mode_signal(const GridSpec& grid, int N, double weight, int ell, int m,
                           const std::vector<cplx>& data) {
    if (static_cast<int>(data.size()) != grid.n) throw DomainError("mode_signal: size mismatch");
    CylinderSignal phi;
    phi.grid = grid;
    phi.N = N;
    phi.weight = weight;
    phi.modes.push_back({ell, m, data});
    return phi;
}

ModeSpectrum spectrum(const CylinderSignal& phi) {
    ModeSpectrum S;
    S.grid = phi.grid;
    S.N = phi.N;
    S.weight = phi.weight;
    S.xi = frequencies(phi.grid);
    const double dt = phi.grid.dt();
    const double t0 = phi.grid.t_min;
    const double scale = dt / std::sqrt(2.0 * std::numbers::pi);
    for (const Mode& md : phi.modes) {
        Mode out{md.ell, md.m, md.data};
        dft(out.data, -1);
        for (std::size_t k = 0; k < out.data.size(); ++k) out.data[k] *= scale * std::polar(1.0, -S.xi[k] * t0);
        S.modes.push_back(std::move(out));
    }
    return S;
}

CylinderSignal inverse_spectrum(const ModeSpectrum& S) {
    CylinderSignal phi;
    phi.grid = S.grid;
    phi.N = S.N;
    phi.weight = S.weight;
    const int n = S.grid.n;
    const double dt = S.grid.dt();
    const double t0 = S.grid.t_min;
    const double scale = std::sqrt(2.0 * std::numbers::pi) / (dt * n);
    for (const Mode& md : S.modes) {
        Mode out{md.ell, md.m, md.data};
        for (int k = 0; k < n; ++k) out.data[k] *= std::polar(1.0, S.xi[k] * t0);
        dft(out.data, +1);
        for (auto& z : out.data) z *= scale;
        phi.modes.push_back(std::move(out));
    }
    return phi;
}

ModeSpectrum apply_multiplier(const ModeSpectrum& S, int N, double s, Direction dir) {
    const Params P = make_params(N, s, 2.0);
    ModeSpectrum out = S;
    for (Mode& md : out.modes) {
        for (std::size_t k = 0; k < md.data.size(); ++k) {
            const double m = multiplier_m(P, S.xi[k], md.ell);
            md.data[k] *= dir == Direction::Forward ? m : 1.0 / m;
        }
    }
    return out;
}

namespace {

TransformResult chain(const RadialProfile& u, int N, double s, double w_in, double w_out, Direction dir) {
    const CylinderSignal phi = lift(u, N, w_in);
    const ModeSpectrum S = spectrum(phi);
    const ModeSpectrum M = apply_multiplier(S, N, s, dir);
    TransformResult r;
    r.leak = phi.leak;
    const double m_in = S.mass();
    r.amplification = m_in > 0.0 ? std::sqrt(M.mass() / m_in) : 1.0;
    r.profile = unlift(inverse_spectrum(M), N, w_out);
    r.profile.label = (dir == Direction::Forward ? "T[" : "Tinv[") + u.label + "]";
    return r;
}

}  // namespace

TransformResult transform_T(const RadialProfile& u, int N, double s) {
    return chain(u, N, s, s, 1.0, Direction::Forward);
}

TransformResult inverse_transform_T(const RadialProfile& u, int N, double s) {
    return chain(u, N, s, 1.0, s, Direction::Inverse);
}

double spectral_deficit_local(const ModeSpectrum& S) {
    double total = 0.0;
    for (const Mode& md : S.modes) {
        const double mu = cylinder_eigenvalue(S.N, md.ell);
        for (std::size_t k = 0; k < md.data.size(); ++k) total += (S.xi[k] * S.xi[k] + mu) * std::norm(md.data[k]);
    }
    return total * S.dxi();
}

double spectral_deficit_local(const CylinderSignal& phi) { return spectral_deficit_local(spectrum(phi)); }

double spectral_deficit_fractional(const ModeSpectrum& S, double s) {
    const Params P = make_params(S.N, s, 2.0);
    double total = 0.0;
    for (const Mode& md : S.modes) {
        for (std::size_t k = 0; k < md.data.size(); ++k) total += symbol_P(P, S.xi[k], md.ell) * std::norm(md.data[k]);
    }
    return total * S.dxi();
}

double spectral_deficit_fractional(const CylinderSignal& phi, double s) {
    return spectral_deficit_fractional(spectrum(phi), s);
}

double multiplier_sup(const ModeSpectrum& S, double s, int ell_max) {
    const Params P = make_params(S.N, s, 2.0);
    double best = 0.0;
    for (int ell = 0; ell <= ell_max; ++ell)
        for (double xi : S.xi) best = std::max(best, multiplier_m(P, xi, ell));
    return best;
}

}  // namespace hardylab
