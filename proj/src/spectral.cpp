#include "lvspread/spectral.hpp"

#include "lvspread/errors.hpp"
#include "lvspread/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lvspread {

namespace {

double envelope_eta(const ModelParams& p, double beta) {
    return std::max(beta * p.D_e + p.r_e / beta, beta * p.D_d + p.r_d / beta);
}

// Golden-section search on [lo, hi] for a unimodal function; returns the best
// abscissa evaluated.
template <class F>
std::pair<double, double> golden_section(F&& f, double lo, double hi, double rel_tol) {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - g * (hi - lo);
    double x2 = lo + g * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > rel_tol * 0.5 * (hi + lo)) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        }
        if (x1 >= x2) // bracket collapsed to rounding
            break;
    }
    const double xm = 0.5 * (lo + hi);
    const double fm = f(xm);
    std::pair<double, double> best{xm, fm};
    if (f1 < best.second)
        best = {x1, f1};
    if (f2 < best.second)
        best = {x2, f2};
    return best;
}

// d(eta)/d(beta) of the closed-form PF eigenvalue of H_beta.
double pf_eta_slope(const ModelParams& p, double beta) {
    const double b2 = beta * beta;
    const Mat2 H = h_matrix(p, beta);
    const double d11 = p.D_e - (p.r_e - p.mu_e) / b2;
    const double d22 = p.D_d - (p.r_d - p.mu_d) / b2;
    const double prod = H.a12 * H.a21;
    const double half_gap = 0.5 * (H.a11 - H.a22);
    const double s = std::sqrt(half_gap * half_gap + prod);
    return 0.5 * (d11 + d22) + (half_gap * 0.5 * (d11 - d22) - prod / beta) / s;
}

// Bisection on the slope sign. Golden section pins the argmin only to about
// sqrt(machine epsilon); the eigenvector near a diagonal crossing needs more.
double slope_root(const ModelParams& p, double lo, double hi) {
    if (!(pf_eta_slope(p, lo) < 0.0) || !(pf_eta_slope(p, hi) > 0.0))
        return std::nan("");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        (pf_eta_slope(p, mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

struct Refined {
    double beta, eta, lo, hi;
};

template <class F>
Refined scan_and_refine(F&& f, const MinimizeOptions& opt) {
    if (opt.scan_points < 3 || !(opt.beta_lo > 0.0) || !(opt.beta_hi > opt.beta_lo))
        throw ValidationError("min_speed: invalid scan options");
    const auto grid = logspace(opt.beta_lo, opt.beta_hi, opt.scan_points);
    std::size_t best = 0;
    double best_val = f(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double v = f(grid[i]);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    if (best == 0 || best + 1 == grid.size())
        throw NumericalError("min_speed: minimum on the scan boundary (bracket failure)");
    const auto [beta, eta] = golden_section(f, grid[best - 1], grid[best + 1], opt.rel_tol);
    return {beta, eta, grid[best - 1], grid[best + 1]};
}

} // namespace

Mat2 h_matrix(const ModelParams& p, double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw ValidationError("h_matrix: beta must be > 0");
    return {beta * p.D_e + (p.r_e - p.mu_e) / beta, p.mu_d / beta, p.mu_e / beta,
            beta * p.D_d + (p.r_d - p.mu_d) / beta};
}

PfEigen pf_eigenpair(const Mat2& H) {
    if (H.a12 < 0.0 || H.a21 < 0.0)
        throw ValidationError("pf_eigenpair: off-diagonal entries must be non-negative");
    if (H.a12 == 0.0 && H.a21 == 0.0)
        throw ValidationError("pf_eigenpair: reducible matrix (both off-diagonals zero)");

    const double half_gap = 0.5 * (H.a11 - H.a22);
    const double s = std::sqrt(half_gap * half_gap + H.a12 * H.a21);
    // The dominant eigenvalue never lies below either diagonal entry; clamp rounding.
    const double eta = std::max(0.5 * (H.a11 + H.a22) + s, std::max(H.a11, H.a22));

    // Pick the eigenvector form that avoids cancellation in eta - h_ii.
    Vec2 q = half_gap >= 0.0 ? Vec2{s + half_gap, H.a21} : Vec2{H.a12, s - half_gap};
    if (q.norm() == 0.0)
        q = {H.a12, s - half_gap};
    const double n = q.norm();
    return {eta, {q.e / n, q.d / n}};
}

DispersionPoint dispersion(const ModelParams& p, double beta) {
    if (!(beta > 0.0))
        throw ValidationError("dispersion: beta must be > 0");
    if (!p.has_mutation())
        return {beta, envelope_eta(p, beta), std::nullopt};
    const auto pf = pf_eigenpair(h_matrix(p, beta));
    return {beta, pf.eta, pf.q};
}

std::vector<DispersionPoint> dispersion_scan(const ModelParams& p, const std::vector<double>& betas) {
    std::vector<DispersionPoint> out;
    out.reserve(betas.size());
    for (double b : betas)
        out.push_back(dispersion(p, b));
    return out;
}

SpeedPoint min_speed(const ModelParams& p, const MinimizeOptions& opt) {
    p.validate();
    if (!(p.mu_e < p.r_e) || !(p.mu_d < p.r_d))
        throw ValidationError("min_speed: requires mu_e < r_e and mu_d < r_d");
    const auto r = scan_and_refine([&](double b) { return dispersion(p, b).eta; }, opt);
    double beta = r.beta, eta = r.eta;
    if (p.has_mutation()) {
        const double root = slope_root(p, r.lo, r.hi);
        if (std::isfinite(root)) {
            const double eta_root = dispersion(p, root).eta;
            if (eta_root <= eta + 4.0 * std::numeric_limits<double>::epsilon() * eta) {
                beta = root;
                eta = eta_root;
            }
        }
    }
    return {eta, beta, dispersion(p, beta).q, 0.0};
}

SpeedPoint envelope_min_speed(const ModelParams& p) {
    p.validate();
    MinimizeOptions opt;
    opt.rel_tol = 1e-15;
    const auto r = scan_and_refine([&](double b) { return envelope_eta(p, b); }, opt);
    return {r.eta, r.beta, std::nullopt, 0.0};
}

SpeedLimits speed_limits(const ModelParams& p) {
    p.validate();
    SpeedLimits out{2.0 * std::sqrt(p.r_e * p.D_e), 2.0 * std::sqrt(p.r_d * p.D_d), std::nullopt};
    const double radicand = (p.r_e - p.r_d) * (p.D_d - p.D_e);
    if (radicand > 0.0)
        out.v_f = std::abs(p.r_e * p.D_d - p.r_d * p.D_e) / std::sqrt(radicand);
    return out;
}

std::string_view to_string(Regime r) {
    switch (r) {
    case Regime::Establisher: return "establisher";
    case Regime::Disperser: return "disperser";
    case Regime::Anomalous: return "anomalous";
    }
    return "?";
}

Regime classify_regime(const ModelParams& p) {
    p.validate();
    if (!(p.r_e > p.r_d) || !(p.D_d > p.D_e))
        throw ValidationError("classify_regime: requires r_e > r_d and D_d > D_e");
    if (p.D_d / p.D_e + p.r_d / p.r_e > 2.0 && p.D_e / p.D_d + p.r_e / p.r_d > 2.0)
        return Regime::Anomalous;
    const auto v = speed_limits(p);
    return v.v_e >= v.v_d ? Regime::Establisher : Regime::Disperser;
}

double limiting_speed(const ModelParams& p) {
    const auto v = speed_limits(p);
    if (classify_regime(p) == Regime::Anomalous)
        return *v.v_f;
    return std::max(v.v_e, v.v_d);
}

LimitSummary limit_summary(const ModelParams& p, const MutationScaling& s) {
    s.validate();
    if (classify_regime(p) != Regime::Anomalous)
        throw ValidationError("limit_summary: parameters are not in the anomalous-speed regime");

    LimitSummary out;
    const auto v = speed_limits(p);
    out.v_e = v.v_e;
    out.v_d = v.v_d;
    out.v_f = *v.v_f;

    const double bs = std::sqrt((p.r_e - p.r_d) / (p.D_d - p.D_e));
    out.beta_star = bs;
    out.eta_0 = bs * p.D_d + p.r_d / bs;
    out.eta_0_alt = bs * p.D_e + p.r_e / bs;
    out.a = bs * bs * p.D_d - p.r_d;
    out.b = p.r_e - bs * bs * p.D_e;
    const double a = out.a, b = out.b, e = s.e, d = s.d;
    out.q_ratio = std::sqrt(b * e / (a * d));
    const double q = out.q_ratio;

    // Unknowns (beta'(0), eta'(0)): establisher row of the leading-edge
    // expansion and the stationarity condition d(lambda)/d(beta) = 0.
    const Mat2 sys{bs * (p.D_e - p.r_e / (bs * bs)), -bs,
                   2.0 * bs * (b * p.D_d - a * p.D_e) + out.eta_0 * (a - b), bs * (a - b)};
    if (std::abs(sys.det()) <= 1e-300)
        throw NumericalError("limit_summary: singular derivative system");
    const Vec2 x = solve(sys, {e - d * q, b * d - a * e});
    out.beta_prime_0 = x.e;
    out.eta_prime_0 = x.d;

    out.residual_disperser_row =
        bs * (p.D_d * x.e - p.r_d * x.e / (bs * bs) - x.d) * q - d * q + e;
    return out;
}

double q_ratio_from_ratios(double r, double D, double m) {
    if (!(r > 0.0) || !(D > 0.0) || !(m > 0.0))
        throw ValidationError("q_ratio_from_ratios: r, D, m must be > 0");
    const double num = 2.0 * D - r * D - 1.0;
    const double den = 2.0 * r - r * D - 1.0;
    if (!(num < 0.0) || !(den < 0.0))
        throw ValidationError("q_ratio_from_ratios: (r, D) outside the anomalous-speed zone");
    return std::sqrt(num / den * m);
}

MuCurve mu_curve(const ModelParams& base, const MutationScaling& s,
                 const std::vector<double>& mu_grid, int jobs) {
    s.validate();
    for (std::size_t i = 0; i < mu_grid.size(); ++i) {
        if (!(mu_grid[i] > 0.0) || (i > 0 && !(mu_grid[i] > mu_grid[i - 1])))
            throw ValidationError("mu_curve: grid must be positive and strictly ascending");
    }
    auto at = [&](double mu) {
        MutationScaling sm = s;
        sm.mu = mu;
        return min_speed(sm.apply(base));
    };

    MuCurve out;
    out.rows.resize(mu_grid.size());
    parallel_for(mu_grid.size(), jobs, [&](std::size_t i) {
        const double mu = mu_grid[i];
        const double h = kMuCurveRelStep * mu;
        const auto mid = at(mu);
        const auto up = at(mu + h);
        const auto dn = at(mu - h);
        out.rows[i] = {mu,
                       mid.c_star,
                       mid.beta_min,
                       *mid.q_ratio(),
                       (up.c_star - dn.c_star) / (2.0 * h),
                       (up.beta_min - dn.beta_min) / (2.0 * h)};
    });
    return out;
}

std::vector<double> logspace(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2)
        throw ValidationError("logspace: need 0 < lo < hi and n >= 2");
    std::vector<double> out(static_cast<std::size_t>(n));
    const double a = std::log10(lo), b = std::log10(hi);
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * i / (n - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

} // namespace lvspread
