#include "lvspread/equilibria.hpp"

#include "lvspread/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lvspread {

namespace {

double residual_tol(const ModelParams& p) { return 1e-9 * (p.r_e + p.r_d); }

Equilibrium make_equilibrium(Density2 n, const Mat2& jac, Vec2 reaction) {
    return {n, classify_kind(n), classify_stability(jac), reaction.norm()};
}

} // namespace

std::string_view to_string(EquilibriumKind k) {
    switch (k) {
    case EquilibriumKind::Extinction: return "extinction";
    case EquilibriumKind::AxisE: return "axis_e";
    case EquilibriumKind::AxisD: return "axis_d";
    case EquilibriumKind::Coexistence: return "coexistence";
    }
    return "?";
}

std::string_view to_string(Stability s) {
    switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Unstable: return "unstable";
    case Stability::Saddle: return "saddle";
    case Stability::Degenerate: return "degenerate";
    }
    return "?";
}

Stability classify_stability(const Mat2& j) {
    const double det = j.det();
    if (std::abs(det) <= 1e-12)
        return Stability::Degenerate;
    if (det < 0.0)
        return Stability::Saddle;
    return j.trace() < 0.0 ? Stability::Stable : Stability::Unstable;
}

EquilibriumKind classify_kind(Density2 n, double tol) {
    const bool has_e = n.n_e > tol;
    const bool has_d = n.n_d > tol;
    if (has_e && has_d)
        return EquilibriumKind::Coexistence;
    if (has_e)
        return EquilibriumKind::AxisE;
    if (has_d)
        return EquilibriumKind::AxisD;
    return EquilibriumKind::Extinction;
}

std::optional<Vec2> newton2(const std::function<Vec2(Vec2)>& F,
                            const std::function<Mat2(Vec2)>& J, Vec2 x, NewtonOptions opt) {
    for (int it = 0; it < opt.max_iter; ++it) {
        const Mat2 jac = J(x);
        const double det = jac.det();
        if (det == 0.0 || !std::isfinite(det))
            return std::nullopt;
        const Vec2 step = solve(jac, F(x));
        x = x - step;
        if (!std::isfinite(x.e) || !std::isfinite(x.d))
            return std::nullopt;
        if (step.norm() <= opt.step_tol)
            return x;
    }
    return std::nullopt;
}

std::vector<Equilibrium> equilibria_of_g(const ModelParams& p) {
    p.validate();
    const double det = p.m_ee * p.m_dd - p.m_ed * p.m_de;
    if (std::abs(det) <= 1e-14 * p.m_ee * p.m_dd)
        throw ValidationError("equilibria_of_g: degenerate competition determinant m_ee*m_dd - m_ed*m_de");

    const Density2 pts[4] = {
        {0.0, 0.0},
        {1.0 / p.m_ee, 0.0},
        {0.0, 1.0 / p.m_dd},
        {(p.m_dd - p.m_ed) / det, (p.m_ee - p.m_de) / det},
    };
    static constexpr EquilibriumKind kinds[4] = {EquilibriumKind::Extinction, EquilibriumKind::AxisE,
                                                 EquilibriumKind::AxisD, EquilibriumKind::Coexistence};
    std::vector<Equilibrium> out;
    out.reserve(4);
    for (int i = 0; i < 4; ++i) {
        auto eq = make_equilibrium(pts[i], jacobian_g(p, pts[i]), reaction_g(p, pts[i]));
        eq.kind = kinds[i];
        out.push_back(eq);
    }
    return out;
}

Vec2 perturbation_theta(const ModelParams& p, const MutationScaling& s, Density2 eq) {
    s.validate();
    if (reaction_g(p, eq).norm() > residual_tol(p))
        throw ValidationError("perturbation_theta: point is not an equilibrium of g");
    const Mat2 jac = jacobian_g(p, eq);
    if (std::abs(jac.det()) <= 1e-12)
        throw ValidationError("perturbation_theta: singular Jacobian of g at the equilibrium");
    return -1.0 * solve(jac, s.matrix() * eq.vec());
}

double SearchBox::diameter() const { return std::hypot(hi_e - lo_e, hi_d - lo_d); }

bool SearchBox::contains(Vec2 x) const {
    return x.e >= lo_e && x.e <= hi_e && x.d >= lo_d && x.d <= hi_d;
}

SearchBox default_search_box(const ModelParams& p) {
    const auto N = density_bounds(p);
    return {-0.05, 1.1 * N.N_e, -0.05, 1.1 * N.N_d};
}

std::vector<Equilibrium> find_equilibria_of_f(const ModelParams& p, const SearchBox& box,
                                              int grid_n) {
    p.validate();
    if (grid_n < 10)
        throw ValidationError("find_equilibria_of_f: grid_n must be >= 10");
    if (!(box.hi_e > box.lo_e) || !(box.hi_d > box.lo_d))
        throw ValidationError("find_equilibria_of_f: empty search box");

    const auto F = [&](Vec2 x) { return reaction_f(p, Density2::from(x)); };
    const auto J = [&](Vec2 x) { return jacobian_f(p, Density2::from(x)); };
    const double dedup = 1e-6 * box.diameter();

    std::vector<Vec2> roots;
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            const Vec2 seed{box.lo_e + (box.hi_e - box.lo_e) * i / (grid_n - 1),
                            box.lo_d + (box.hi_d - box.lo_d) * j / (grid_n - 1)};
            const auto root = newton2(F, J, seed);
            if (!root || !box.contains(*root) || F(*root).norm() > residual_tol(p))
                continue;
            const bool seen = std::any_of(roots.begin(), roots.end(),
                                          [&](Vec2 r) { return (r - *root).norm() <= dedup; });
            if (!seen)
                roots.push_back(*root);
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](Vec2 a, Vec2 b) { return a.e < b.e || (a.e == b.e && a.d < b.d); });

    std::vector<Equilibrium> out;
    out.reserve(roots.size());
    for (Vec2 r : roots)
        out.push_back(make_equilibrium(Density2::from(r), J(r), F(r)));
    return out;
}

Equilibrium coexistence_of_f(const ModelParams& p) {
    for (const auto& eq : find_equilibria_of_f(p, default_search_box(p), 25)) {
        if (eq.kind == EquilibriumKind::Coexistence && eq.stability == Stability::Stable)
            return eq;
    }
    throw NumericalError("coexistence_of_f: no stable coexistence equilibrium found");
}

Density2 k_plus(const ModelParams& p) {
    p.validate();
    if (!(p.mu_e < p.r_e) || !(p.mu_d < p.r_d))
        throw ValidationError("k_plus: requires mu_e < r_e and mu_d < r_d");
    const Vec2 lower{(p.r_e - p.mu_e) / (p.r_e * p.m_ee), (p.r_d - p.mu_d) / (p.r_d * p.m_dd)};
    const auto root = newton2([&](Vec2 x) { return reaction_f_plus(p, Density2::from(x)); },
                              [&](Vec2 x) { return jacobian_f_plus(p, Density2::from(x)); },
                              1.1 * lower);
    if (!root)
        throw NumericalError("k_plus: Newton did not converge in 100 iterations");
    // Mutation only pushes k+ above the logistic roots; equality when mu = 0.
    if (root->e < lower.e - 1e-12 || root->d < lower.d - 1e-12)
        throw NumericalError("k_plus: Newton converged below the nullcline roots");
    return Density2::from(*root);
}

Density2 k_minus(const ModelParams& p) {
    const auto cond = check_conditions(p);
    if (!cond.intersmall.holds)
        throw ConditionError("intersmall", "k_minus: intersmall violated (m_ed < 1/N_d, m_de < 1/N_e), margin " +
                                               std::to_string(cond.intersmall.margin));
    if (!cond.musmall.holds)
        throw ConditionError("musmall", "k_minus: musmall violated (mutation too large for the lower bound), margin " +
                                            std::to_string(cond.musmall.margin));

    const Vec2 roots{(p.r_e - p.mu_e - p.r_e * p.m_ed * cond.N_d) / (p.r_e * p.m_ee),
                     (p.r_d - p.mu_d - p.r_d * p.m_de * cond.N_e) / (p.r_d * p.m_dd)};
    const auto root = newton2([&](Vec2 x) { return reaction_f_minus_star(p, Density2::from(x)); },
                              [&](Vec2 x) { return jacobian_f_minus_star(p, Density2::from(x)); },
                              1.1 * roots);
    if (!root)
        throw NumericalError("k_minus: Newton did not converge in 100 iterations");

    const auto br = cutoff_brackets(p);
    if (!(root->e > br.d_hi) || !(root->d > br.e_hi))
        throw ConditionError("rootswitch", "k_minus: equilibrium of f_minus_star lies inside the cutoff transition");
    const Density2 k = Density2::from(*root);
    if (reaction_f_minus(p, k).norm() > 1e-10)
        throw NumericalError("k_minus: residual of reaction_f_minus exceeds 1e-10");
    return k;
}

} // namespace lvspread
