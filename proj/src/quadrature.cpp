#include "hardylab/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <stdexcept>

namespace hardylab {

std::vector<double> graded_toward_left(double a, double b, double h0, double ratio) {
    std::vector<double> out{a};
    double h = h0;
    while (a + h < b) {
        out.push_back(a + h);
        h *= ratio;
    }
    out.push_back(b);
    return out;
}

std::vector<double> graded_toward_right(double a, double b, double h0, double ratio) {
    std::vector<double> left = graded_toward_left(0.0, b - a, h0, ratio);
    std::vector<double> out;
    out.reserve(left.size());
    for (auto it = left.rbegin(); it != left.rend(); ++it) out.push_back(b - *it);
    out.front() = a;
    return out;
}

std::vector<double> graded_both(double a, double b, double h0, double ratio) {
    const double m = 0.5 * (a + b);
    std::vector<double> out = graded_toward_left(a, m, h0, ratio);
    std::vector<double> right = graded_toward_right(m, b, h0, ratio);
    out.insert(out.end(), right.begin() + 1, right.end());
    return out;
}

NodeSet NodeSet::from_breaks(const std::vector<double>& breaks) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    const auto& ax = GK::abscissa();
    const auto& wk = GK::weights();
    const auto& wg = boost::math::quadrature::gauss<double, 7>::weights();
    NodeSet ns;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double c = 0.5 * (breaks[i] + breaks[i + 1]);
        const double h = 0.5 * (breaks[i + 1] - breaks[i]);
        // even indices of the Kronrod abscissae are the Gauss nodes
        for (std::size_t k = 0; k < ax.size(); ++k) {
            const bool gauss = (k % 2 == 0);
            const double gw = gauss ? wg[k / 2] : 0.0;
            if (k == 0) {
                ns.x.push_back(c);
                ns.wk.push_back(h * wk[0]);
                ns.wg.push_back(h * gw);
            } else {
                ns.x.push_back(c - h * ax[k]);
                ns.wk.push_back(h * wk[k]);
                ns.wg.push_back(h * gw);
                ns.x.push_back(c + h * ax[k]);
                ns.wk.push_back(h * wk[k]);
                ns.wg.push_back(h * gw);
            }
        }
    }
    return ns;
}

namespace {

template <int M>
UnitRule make_unit_rule() {
    using G = boost::math::quadrature::gauss<double, M>;
    const auto& ax = G::abscissa();
    const auto& w = G::weights();
    UnitRule r;
    for (std::size_t k = 0; k < ax.size(); ++k) {
        if (ax[k] == 0.0) {
            r.x.push_back(0.5);
            r.w.push_back(0.5 * w[k]);
        } else {
            r.x.push_back(0.5 - 0.5 * ax[k]);
            r.w.push_back(0.5 * w[k]);
            r.x.push_back(0.5 + 0.5 * ax[k]);
            r.w.push_back(0.5 * w[k]);
        }
    }
    std::vector<std::size_t> idx(r.x.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto i, auto j) { return r.x[i] < r.x[j]; });
    UnitRule s;
    for (auto i : idx) {
        s.x.push_back(r.x[i]);
        s.w.push_back(r.w[i]);
    }
    return s;
}

}  // namespace

const UnitRule& gauss_legendre_unit(int n) {
    static const UnitRule r4 = make_unit_rule<4>();
    static const UnitRule r6 = make_unit_rule<6>();
    static const UnitRule r8 = make_unit_rule<8>();
    static const UnitRule r10 = make_unit_rule<10>();
    switch (n) {
        case 4: return r4;
        case 6: return r6;
        case 8: return r8;
        case 10: return r10;
        default: throw std::invalid_argument("gauss_legendre_unit: unsupported order");
    }
}

}  // namespace hardylab
