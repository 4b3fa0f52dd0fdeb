#pragma once

#include "lvspread/linalg2.hpp"
#include "lvspread/model.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace lvspread {

/// H_beta = beta * diag(D) + f'(0) / beta. Requires beta > 0.
Mat2 h_matrix(const ModelParams& p, double beta);

struct PfEigen {
    double eta = 0.0;
    Vec2 q; // unit Euclidean norm, non-negative

    double q_ratio() const { return q.d / q.e; }
};

/// Dominant eigenpair of a 2x2 matrix with non-negative off-diagonals, in
/// closed form. Throws ValidationError for negative off-diagonals or when
/// both vanish (reducible: use the envelope instead).
PfEigen pf_eigenpair(const Mat2& H);

struct DispersionPoint {
    double beta = 0.0;
    double eta = 0.0;
    std::optional<Vec2> q; // absent in envelope mode (no mutation)

    bool envelope() const { return !q.has_value(); }
};

/// PF eigenvalue of H_beta, or the larger diagonal entry when there is no
/// mutation.
DispersionPoint dispersion(const ModelParams& p, double beta);

struct MinimizeOptions {
    int scan_points = 200;
    double beta_lo = 1e-3;
    double beta_hi = 1e3;
    double rel_tol = 1e-10; // final relative bracket width
};

struct SpeedPoint {
    double c_star = 0.0;
    double beta_min = 0.0;
    std::optional<Vec2> q;
    double mu = 0.0;

    std::optional<double> q_ratio() const {
        if (!q)
            return std::nullopt;
        return q->d / q->e;
    }
};

/// c* = inf over beta of dispersion(p, beta): log-spaced scan, then golden
/// section inside the bracket around the best scan point.
SpeedPoint min_speed(const ModelParams& p, const MinimizeOptions& opt = {});

/// Minimum of the mutation-free envelope max(beta D_e + r_e/beta,
/// beta D_d + r_d/beta), refined to near machine precision.
SpeedPoint envelope_min_speed(const ModelParams& p);

std::vector<DispersionPoint> dispersion_scan(const ModelParams& p, const std::vector<double>& betas);

struct SpeedLimits {
    double v_e = 0.0;
    double v_d = 0.0;
    std::optional<double> v_f; // absent when (r_e - r_d)(D_d - D_e) <= 0
};

SpeedLimits speed_limits(const ModelParams& p);

enum class Regime { Establisher, Disperser, Anomalous };
std::string_view to_string(Regime r);

/// Requires r_e > r_d and D_d > D_e.
Regime classify_regime(const ModelParams& p);

/// Limiting speed as mutation vanishes: v_f in the anomalous zone, otherwise
/// max(v_e, v_d).
double limiting_speed(const ModelParams& p);

struct LimitSummary {
    double beta_star = 0.0;
    double eta_0 = 0.0;     // beta* D_d + r_d / beta*
    double eta_0_alt = 0.0; // beta* D_e + r_e / beta*
    double v_e = 0.0, v_d = 0.0, v_f = 0.0;
    double a = 0.0, b = 0.0;
    double q_ratio = 0.0;
    double eta_prime_0 = 0.0;
    double beta_prime_0 = 0.0;
    double residual_disperser_row = 0.0; // leftover of the second leading-edge equation
    Regime regime = Regime::Anomalous;
};

/// Small-mutation limit of the minimal speed, its decay rate and the
/// leading-edge composition. The rates (e, d) come from `s`; p's own
/// mutation rates are ignored. Requires the anomalous regime.
LimitSummary limit_summary(const ModelParams& p, const MutationScaling& s);

/// Leading-edge ratio from r = r_d/r_e, D = D_e/D_d, m = e/d.
double q_ratio_from_ratios(double r, double D, double m);

struct MuCurveRow {
    double mu = 0.0;
    double eta = 0.0;
    double beta = 0.0;
    double q_ratio = 0.0;
    double eta_prime = 0.0;
    double beta_prime = 0.0;
};

struct MuCurve {
    std::vector<MuCurveRow> rows;
};

/// Relative half-step of the per-row central differences in mu_curve.
inline constexpr double kMuCurveRelStep = 0.1;

/// min_speed at each mu of an ascending positive grid with derivative
/// columns from central differences at mu * (1 +- kMuCurveRelStep).
MuCurve mu_curve(const ModelParams& base, const MutationScaling& s,
                 const std::vector<double>& mu_grid, int jobs = 1);

/// n points spaced evenly in log10 between lo and hi inclusive.
std::vector<double> logspace(double lo, double hi, int n);

} // namespace lvspread
