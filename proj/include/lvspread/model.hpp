#pragma once

#include "lvspread/linalg2.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace lvspread {

/// Rates and coefficients of the two-morph Lotka-Volterra system with linear
/// mutation. Index `e` is the establisher, `d` the disperser.
///
/// Diffusivities, growth rates and intra-morph competition must be strictly
/// positive. Inter-morph competition and mutation may be zero so that the
/// decoupled (Fisher) and mutation-free limits stay representable.
struct ModelParams {
    double D_e = 0.0, D_d = 0.0;   // diffusivity
    double r_e = 0.0, r_d = 0.0;   // growth rate
    double m_ee = 0.0, m_dd = 0.0; // intra-morph competition
    double m_ed = 0.0, m_de = 0.0; // inter-morph competition
    double mu_e = 0.0, mu_d = 0.0; // mutation e->d, d->e

    /// Throws ValidationError naming the first offending field.
    void validate() const;
    /// Copy of *this after validate().
    ModelParams validated() const;

    bool has_mutation() const { return mu_e > 0.0 || mu_d > 0.0; }

    /// (name, value) for each of the ten fields in canonical order.
    std::vector<std::pair<std::string_view, double>> fields() const;
};

/// mu_e = mu * e, mu_d = mu * d.
struct MutationScaling {
    double mu = 0.0;
    double e = 0.0;
    double d = 0.0;

    void validate() const;
    ModelParams apply(ModelParams base) const;
    /// M = [[-e, d], [e, -d]].
    Mat2 matrix() const { return {-e, d, e, -d}; }
};

struct Density2 {
    double n_e = 0.0;
    double n_d = 0.0;

    constexpr Vec2 vec() const { return {n_e, n_d}; }
    static constexpr Density2 from(Vec2 v) { return {v.e, v.d}; }
    friend constexpr bool operator==(Density2, Density2) = default;
};

// Reaction terms ------------------------------------------------------------

Vec2 reaction_f(const ModelParams& p, Density2 n);
/// f without mutation.
Vec2 reaction_g(const ModelParams& p, Density2 n);
/// f with the inter-morph competition switched off; cooperative upper bound.
Vec2 reaction_f_plus(const ModelParams& p, Density2 n);
/// Cooperative lower bound: the cross-competition density is blended towards
/// the density bound N once the off-diagonal Jacobian entry would go negative.
Vec2 reaction_f_minus(const ModelParams& p, Density2 n);
/// f_minus with the cutoffs fully switched (cross density pinned at N).
Vec2 reaction_f_minus_star(const ModelParams& p, Density2 n);

Mat2 jacobian_f(const ModelParams& p, Density2 n);
Mat2 jacobian_g(const ModelParams& p, Density2 n);
Mat2 jacobian_f_plus(const ModelParams& p, Density2 n);
Mat2 jacobian_f_minus_star(const ModelParams& p, Density2 n);

/// Smooth non-increasing cutoff: 1 on [0, lo], 0 on [hi, inf), quintic
/// smoothstep in between (C2). Requires 0 < lo < hi.
double cutoff_gamma(double x, double lo, double hi);

struct CutoffBrackets {
    double d_lo, d_hi; // gamma_d acts on n_e
    double e_lo, e_hi; // gamma_e acts on n_d
};
/// Switching thresholds of reaction_f_minus. Requires m_ed, m_de, mu_e, mu_d > 0.
CutoffBrackets cutoff_brackets(const ModelParams& p);

struct DensityBounds {
    double N_e = 0.0;
    double N_d = 0.0;
};
/// Closed-form upper bounds on the positive equilibrium of f_plus.
DensityBounds density_bounds(const ModelParams& p);

// Conditions ------------------------------------------------------------------

/// A predicate evaluated with a signed margin; `holds == (margin > 0)`.
struct Condition {
    bool holds = false;
    double margin = 0.0;
};

struct ConditionReport {
    Condition parms_rD;   // r_e > r_d, D_d > D_e
    Condition compe;      // m_dd > m_ed, m_ee > m_de
    Condition asymproot;  // nullcline shape of f (small mutation)
    Condition fastersp;   // anomalous-speed zone
    Condition intersmall; // m_ed < 1/N_d, m_de < 1/N_e
    Condition musmall;    // mutation small enough for the lower bound
    Condition rootswitch; // f_minus_star roots lie past the switching points
    double N_e = 0.0;
    double N_d = 0.0;
    bool theorem3_satisfied = false; // intersmall && musmall

    std::vector<std::pair<std::string_view, Condition>> entries() const;
};

ConditionReport check_conditions(const ModelParams& p);

} // namespace lvspread
