#pragma once

#include "lvspread/linalg2.hpp"
#include "lvspread/model.hpp"

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace lvspread {

enum class EquilibriumKind { Extinction, AxisE, AxisD, Coexistence };
enum class Stability { Stable, Unstable, Saddle, Degenerate };

std::string_view to_string(EquilibriumKind k);
std::string_view to_string(Stability s);

struct Equilibrium {
    Density2 point;
    EquilibriumKind kind = EquilibriumKind::Extinction;
    Stability stability = Stability::Degenerate;
    double residual = 0.0; // |reaction(point)|_2 under the defining reaction

    bool non_negative(double tol = 1e-12) const { return point.n_e >= -tol && point.n_d >= -tol; }
};

/// Trace/determinant classification; |det| <= 1e-12 is Degenerate.
Stability classify_stability(const Mat2& jacobian);

/// Kind from the sign pattern of the point (components within `tol` of zero
/// or negative count as absent).
EquilibriumKind classify_kind(Density2 n, double tol = 1e-9);

struct NewtonOptions {
    double step_tol = 1e-12;
    int max_iter = 100;
};

/// Plain Newton iteration on a 2D map with an analytic Jacobian. Returns
/// nullopt on a singular Jacobian, non-finite iterate or iteration cap.
std::optional<Vec2> newton2(const std::function<Vec2(Vec2)>& F,
                            const std::function<Mat2(Vec2)>& J, Vec2 x0,
                            NewtonOptions opt = {});

/// The four equilibria of g in the order extinction, (1/m_ee, 0),
/// (0, 1/m_dd), coexistence.
std::vector<Equilibrium> equilibria_of_g(const ModelParams& p);

/// d/dmu of the equilibrium `eq` of g when mutation s.mu * M is switched on:
/// -J_g(eq)^{-1} M eq.
Vec2 perturbation_theta(const ModelParams& p, const MutationScaling& s, Density2 eq);

struct SearchBox {
    double lo_e = 0.0, hi_e = 0.0;
    double lo_d = 0.0, hi_d = 0.0;

    double diameter() const;
    bool contains(Vec2 x) const;
};

/// [-0.05, 1.1 N_e] x [-0.05, 1.1 N_d].
SearchBox default_search_box(const ModelParams& p);

/// Grid-seeded Newton on reaction_f. Roots are kept if they lie in the box
/// and meet the residual bound, deduplicated at 1e-6 * diameter and sorted
/// lexicographically by (n_e, n_d).
std::vector<Equilibrium> find_equilibria_of_f(const ModelParams& p, const SearchBox& box,
                                              int grid_n = 25);

/// The stable positive equilibrium k of f in the default search box.
Equilibrium coexistence_of_f(const ModelParams& p);

/// Positive equilibrium of reaction_f_plus. Requires mu_e < r_e, mu_d < r_d.
Density2 k_plus(const ModelParams& p);

/// Positive equilibrium of reaction_f_minus. Throws ConditionError naming
/// the violated inequality when the lower-bound conditions fail.
Density2 k_minus(const ModelParams& p);

} // namespace lvspread
