#include "lvspread/model.hpp"

#include "lvspread/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lvspread {

namespace {

void require_positive(std::string_view name, double v) {
    if (!std::isfinite(v) || !(v > 0.0))
        throw ValidationError(std::string(name) + " must be finite and > 0, got " + std::to_string(v));
}

void require_non_negative(std::string_view name, double v) {
    if (!std::isfinite(v) || v < 0.0)
        throw ValidationError(std::string(name) + " must be finite and >= 0, got " + std::to_string(v));
}

// Shared Lotka-Volterra form. `cross_d` stands in for n_d in the establisher's
// competition term and `cross_e` for n_e in the disperser's, so f, g, f+ and
// f- all evaluate with the same operation order.
Vec2 lv_form(const ModelParams& p, Density2 n, double m_ed, double cross_d, double m_de,
             double cross_e, double mu_e, double mu_d) {
    return {p.r_e * n.n_e * (1.0 - p.m_ee * n.n_e - m_ed * cross_d) - mu_e * n.n_e + mu_d * n.n_d,
            p.r_d * n.n_d * (1.0 - m_de * cross_e - p.m_dd * n.n_d) + mu_e * n.n_e - mu_d * n.n_d};
}

// mu / (k r m) guarded against 0/0.
double ratio(double mu, double denom) {
    if (mu == 0.0)
        return 0.0;
    if (denom == 0.0)
        return std::numeric_limits<double>::infinity();
    return mu / denom;
}

Condition make_condition(double margin) { return {margin > 0.0, margin}; }

} // namespace

void ModelParams::validate() const {
    require_positive("D_e", D_e);
    require_positive("D_d", D_d);
    require_positive("r_e", r_e);
    require_positive("r_d", r_d);
    require_positive("m_ee", m_ee);
    require_positive("m_dd", m_dd);
    require_non_negative("m_ed", m_ed);
    require_non_negative("m_de", m_de);
    require_non_negative("mu_e", mu_e);
    require_non_negative("mu_d", mu_d);
}

ModelParams ModelParams::validated() const {
    validate();
    return *this;
}

std::vector<std::pair<std::string_view, double>> ModelParams::fields() const {
    return {{"D_e", D_e},   {"D_d", D_d},   {"r_e", r_e},   {"r_d", r_d},   {"m_ee", m_ee},
            {"m_dd", m_dd}, {"m_ed", m_ed}, {"m_de", m_de}, {"mu_e", mu_e}, {"mu_d", mu_d}};
}

void MutationScaling::validate() const {
    require_non_negative("mu", mu);
    require_positive("e", e);
    require_positive("d", d);
}

ModelParams MutationScaling::apply(ModelParams base) const {
    validate();
    base.mu_e = mu * e;
    base.mu_d = mu * d;
    return base;
}

Vec2 reaction_f(const ModelParams& p, Density2 n) {
    return lv_form(p, n, p.m_ed, n.n_d, p.m_de, n.n_e, p.mu_e, p.mu_d);
}

Vec2 reaction_g(const ModelParams& p, Density2 n) {
    return lv_form(p, n, p.m_ed, n.n_d, p.m_de, n.n_e, 0.0, 0.0);
}

Vec2 reaction_f_plus(const ModelParams& p, Density2 n) {
    return lv_form(p, n, 0.0, n.n_d, 0.0, n.n_e, p.mu_e, p.mu_d);
}

Vec2 reaction_f_minus(const ModelParams& p, Density2 n) {
    const auto c = cutoff_brackets(p);
    const auto N = density_bounds(p);
    const double gamma_d = cutoff_gamma(n.n_e, c.d_lo, c.d_hi);
    const double gamma_e = cutoff_gamma(n.n_d, c.e_lo, c.e_hi);
    // gamma == 1 makes h exactly n, so f- and f agree bit-for-bit there.
    const double h_d = gamma_d == 1.0 ? n.n_d : gamma_d * n.n_d + (1.0 - gamma_d) * N.N_d;
    const double h_e = gamma_e == 1.0 ? n.n_e : gamma_e * n.n_e + (1.0 - gamma_e) * N.N_e;
    return lv_form(p, n, p.m_ed, h_d, p.m_de, h_e, p.mu_e, p.mu_d);
}

Vec2 reaction_f_minus_star(const ModelParams& p, Density2 n) {
    const auto N = density_bounds(p);
    return lv_form(p, n, p.m_ed, N.N_d, p.m_de, N.N_e, p.mu_e, p.mu_d);
}

Mat2 jacobian_f(const ModelParams& p, Density2 n) {
    return {p.r_e * (1.0 - 2.0 * p.m_ee * n.n_e - p.m_ed * n.n_d) - p.mu_e,
            p.mu_d - p.r_e * p.m_ed * n.n_e,
            p.mu_e - p.r_d * p.m_de * n.n_d,
            p.r_d * (1.0 - p.m_de * n.n_e - 2.0 * p.m_dd * n.n_d) - p.mu_d};
}

Mat2 jacobian_g(const ModelParams& p, Density2 n) {
    return {p.r_e * (1.0 - 2.0 * p.m_ee * n.n_e - p.m_ed * n.n_d),
            -p.r_e * p.m_ed * n.n_e,
            -p.r_d * p.m_de * n.n_d,
            p.r_d * (1.0 - p.m_de * n.n_e - 2.0 * p.m_dd * n.n_d)};
}

Mat2 jacobian_f_plus(const ModelParams& p, Density2 n) {
    return {p.r_e * (1.0 - 2.0 * p.m_ee * n.n_e) - p.mu_e, p.mu_d, p.mu_e,
            p.r_d * (1.0 - 2.0 * p.m_dd * n.n_d) - p.mu_d};
}

Mat2 jacobian_f_minus_star(const ModelParams& p, Density2 n) {
    const auto N = density_bounds(p);
    return {p.r_e * (1.0 - 2.0 * p.m_ee * n.n_e - p.m_ed * N.N_d) - p.mu_e, p.mu_d, p.mu_e,
            p.r_d * (1.0 - p.m_de * N.N_e - 2.0 * p.m_dd * n.n_d) - p.mu_d};
}

double cutoff_gamma(double x, double lo, double hi) {
    if (!(lo > 0.0) || !(hi > lo))
        throw ValidationError("cutoff_gamma: need 0 < lo < hi");
    if (x <= lo)
        return 1.0;
    if (x >= hi)
        return 0.0;
    const double t = (x - lo) / (hi - lo);
    const double s = t * t * t * (t * (6.0 * t - 15.0) + 10.0);
    return 1.0 - s;
}

CutoffBrackets cutoff_brackets(const ModelParams& p) {
    if (!(p.m_ed > 0.0) || !(p.m_de > 0.0))
        throw ValidationError("reaction_f_minus: thresholds undefined for m_ed = 0 or m_de = 0");
    if (!(p.mu_e > 0.0) || !(p.mu_d > 0.0))
        throw ValidationError("reaction_f_minus: thresholds undefined for mu_e = 0 or mu_d = 0");
    const double td = p.mu_d / (p.r_e * p.m_ed);
    const double te = p.mu_e / (p.r_d * p.m_de);
    return {td / 4.0, td / 2.0, te / 4.0, te / 2.0};
}

DensityBounds density_bounds(const ModelParams& p) {
    const double N_d = (1.0 + std::sqrt(1.0 + p.r_e * p.m_dd / (p.r_d * p.m_ee))) / (2.0 * p.m_dd);
    const double N_e = (1.0 + std::sqrt(1.0 + p.r_d * p.m_ee / (p.r_e * p.m_dd))) / (2.0 * p.m_ee);
    return {N_e, N_d};
}

std::vector<std::pair<std::string_view, Condition>> ConditionReport::entries() const {
    return {{"parms_rD", parms_rD},     {"compe", compe},   {"asymproot", asymproot},
            {"fastersp", fastersp},     {"intersmall", intersmall},
            {"musmall", musmall},       {"rootswitch", rootswitch}};
}

ConditionReport check_conditions(const ModelParams& p) {
    p.validate();
    ConditionReport rep;
    const auto N = density_bounds(p);
    rep.N_e = N.N_e;
    rep.N_d = N.N_d;

    rep.parms_rD = make_condition(std::min(p.r_e - p.r_d, p.D_d - p.D_e));
    rep.compe = make_condition(std::min(p.m_dd - p.m_ed, p.m_ee - p.m_de));
    rep.asymproot = make_condition(
        std::min((p.r_e - p.mu_e) / (p.r_e * p.m_ee) - ratio(p.mu_d, p.r_e * p.m_ed),
                 (p.r_d - p.mu_d) / (p.r_d * p.m_dd) - ratio(p.mu_e, p.r_d * p.m_de)));
    rep.fastersp = make_condition(std::min(p.D_d / p.D_e + p.r_d / p.r_e - 2.0,
                                           p.D_e / p.D_d + p.r_e / p.r_d - 2.0));
    rep.intersmall = make_condition(std::min(1.0 / N.N_d - p.m_ed, 1.0 / N.N_e - p.m_de));

    const double slack_d = 1.0 - p.m_ed * N.N_d;
    const double slack_e = 1.0 - p.m_de * N.N_e;
    const double mu_e_max = std::min(p.r_e * slack_d / 2.0, p.r_d * p.m_de * slack_e / p.m_dd);
    const double mu_d_max = std::min(p.r_d * slack_e / 2.0, p.r_e * p.m_ed * slack_d / p.m_ee);
    rep.musmall = make_condition(std::min(mu_e_max - p.mu_e, mu_d_max - p.mu_d));

    const double root_e = (p.r_e - p.mu_e - p.r_e * p.m_ed * N.N_d) / (p.r_e * p.m_ee);
    const double root_d = (p.r_d - p.mu_d - p.r_d * p.m_de * N.N_e) / (p.r_d * p.m_dd);
    rep.rootswitch = make_condition(std::min(root_e - ratio(p.mu_d, 2.0 * p.r_e * p.m_ed),
                                             root_d - ratio(p.mu_e, 2.0 * p.r_d * p.m_de)));

    rep.theorem3_satisfied = rep.intersmall.holds && rep.musmall.holds;
    return rep;
}

} // namespace lvspread
