#pragma once

#include "lvspread/equilibria.hpp"
#include "lvspread/model.hpp"
#include "lvspread/spectral.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace fixtures {

using lvspread::Density2;
using lvspread::Mat2;
using lvspread::ModelParams;
using lvspread::MutationScaling;
using lvspread::Vec2;

// Parameter set of the front-profile figure.
inline ModelParams p1() {
    return {0.3, 1.5, 1.1, 0.2, 1.0 / 1.2, 1.0, 0.8, 0.7, 0.001, 0.00025};
}

// Weak cross-competition variant where the lower-bound construction applies.
inline ModelParams p2() {
    auto p = p1();
    p.m_ee = p.m_dd = 1.0;
    p.m_ed = p.m_de = 0.1;
    return p;
}

inline MutationScaling p1_scaling() { return {1.0, 0.001, 0.00025}; }

inline ModelParams with_mu(ModelParams p, double mu, double e = 0.001, double d = 0.00025) {
    p.mu_e = mu * e;
    p.mu_d = mu * d;
    return p;
}

inline ModelParams without_mutation(ModelParams p) { return with_mu(p, 0.0); }

// Central-difference Jacobian of an arbitrary 2D map.
inline Mat2 fd_jacobian(const std::function<Vec2(Density2)>& F, Density2 n, double h) {
    const Vec2 de = (1.0 / (2 * h)) * (F({n.n_e + h, n.n_d}) - F({n.n_e - h, n.n_d}));
    const Vec2 dd = (1.0 / (2 * h)) * (F({n.n_e, n.n_d + h}) - F({n.n_e, n.n_d - h}));
    return {de.e, dd.e, de.d, dd.d};
}

inline double rel_err(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

// Dense log-grid minimum of an arbitrary scalar function, with local
// grid refinement; independent of the library's golden-section search.
inline std::pair<double, double> dense_min(const std::function<double(double)>& f, double lo,
                                           double hi, int n = 20001) {
    double best_x = lo, best = f(lo);
    for (int pass = 0; pass < 4; ++pass) {
        const double llo = std::log(lo), lhi = std::log(hi);
        int best_i = 0;
        for (int i = 0; i < n; ++i) {
            const double x = std::exp(llo + (lhi - llo) * i / (n - 1));
            const double v = f(x);
            if (v < best) {
                best = v;
                best_x = x;
                best_i = i;
            }
        }
        (void)best_i;
        const double step = (lhi - llo) / (n - 1);
        lo = std::exp(std::log(best_x) - 2 * step);
        hi = std::exp(std::log(best_x) + 2 * step);
        n = 2001;
    }
    return {best_x, best};
}

// Largest eigenvalue of a real 2x2 matrix with real spectrum via the
// characteristic polynomial, written independently of the library.
inline double dominant_eigenvalue(const Mat2& m) {
    const double tr = m.a11 + m.a22;
    const double det = m.a11 * m.a22 - m.a12 * m.a21;
    const double disc = tr * tr / 4 - det;
    return tr / 2 + std::sqrt(std::max(disc, 0.0));
}

inline std::mt19937_64 rng(std::uint64_t seed = 20240601) { return std::mt19937_64(seed); }

} // namespace fixtures
