#pragma once

#include "lvspread/model.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace lvspread {

/// Uniform grid on [0, L] with nx points.
struct Grid1D {
    double L = 0.0;
    int nx = 0;

    void validate() const;
    double dx() const { return L / (nx - 1); }
    double x(std::size_t i) const { return static_cast<double>(i) * dx(); }
};

struct Boundary {
    enum class Kind { NeumannZeroFlux, Dirichlet };
    Kind kind = Kind::NeumannZeroFlux;
    Density2 left; // pinned value at x = 0 when kind == Dirichlet

    static Boundary neumann() { return {}; }
    static Boundary dirichlet(Density2 left) { return {Kind::Dirichlet, left}; }
};

struct SimConfig {
    double t_end = 200.0;
    double cfl_safety = 0.4;
    Boundary boundary;
    int sample_stride = 0;  // steps between front samples; 0 picks ~0.5 time units
    double threshold = 0.0; // front level on n_e + n_d

    void validate() const;
    /// cfl_safety * dx^2 / (2 max(D_e, D_d)).
    double time_step(const ModelParams& p, const Grid1D& g) const;
};

struct FieldState {
    double t = 0.0;
    std::vector<double> n_e;
    std::vector<double> n_d;
};

struct FrontSample {
    double t = 0.0;
    double x = 0.0;
};

struct FrontTrace {
    double threshold = 0.0;
    std::vector<FrontSample> samples;
    std::size_t missed = 0; // sample times at which no crossing existed

    bool empty() const { return samples.empty(); }
};

struct BoundsReport {
    double min_e = 0.0, max_e = 0.0;
    double min_d = 0.0, max_d = 0.0;
    std::optional<Density2> k_plus; // absent when k_plus is undefined for p
    bool violation = false;         // outside [-1e-10, k_plus + 1e-8]
};

struct SimResult {
    FieldState final_state;
    FrontTrace trace;
    BoundsReport bounds;
    std::size_t steps = 0;
    double dt = 0.0;
};

struct SpeedEstimate {
    double speed = 0.0;
    double stderr_ = 0.0;
    double window = 0.5;
    std::size_t samples_used = 0;
    bool boundary_contaminated = false;
};

/// Step initial data: `left` on x <= x0, zero beyond. Requires 0 < x0 < L.
FieldState heaviside_ic(const Grid1D& grid, double x0, Density2 left);

/// One explicit Euler step of the reaction-diffusion system with the
/// second-order central Laplacian. Refuses dt above the explicit limit.
FieldState step(const ModelParams& p, const FieldState& state, double dx, double dt,
                const Boundary& boundary);

/// Rightmost threshold crossing of n_e + n_d, linearly interpolated.
std::optional<double> track_front(const FieldState& state, const Grid1D& grid, double threshold);

/// Steps to t_end, sampling the front every sample_stride steps and tracking
/// the range of both components. Throws NumericalError on non-finite values.
SimResult simulate(const ModelParams& p, const Grid1D& grid, const SimConfig& cfg,
                   const FieldState& ic);

/// Least-squares slope of the trailing `window` fraction of the trace.
/// Throws ValidationError with fewer than 10 samples in the window.
SpeedEstimate estimate_speed(const FrontTrace& trace, double window, const Grid1D& grid);

enum class VerifyStatus { Pass, Fail, Inconclusive };
std::string_view to_string(VerifyStatus s);

struct VerifyOptions {
    double x0 = 50.0;
    std::optional<Density2> left; // default: coexistence equilibrium of g
    double threshold_frac = 0.1;  // threshold = frac * (left.n_e + left.n_d)
    double window = 0.5;
    double tolerance = 0.03;
};

struct VerifyReport {
    double c_star = 0.0;
    std::optional<SpeedEstimate> measured;
    double rel_discrepancy = 0.0;
    double tolerance = 0.0;
    VerifyStatus status = VerifyStatus::Inconclusive;
    BoundsReport bounds;
    std::string note;
};

/// Simulates from Heaviside data and compares the measured front speed with
/// the spectral c*. Boundary contamination yields Inconclusive, not Fail.
VerifyReport verify_linear_determinacy(const ModelParams& p, const Grid1D& grid, SimConfig cfg,
                                       const VerifyOptions& opt = {});

/// Default Heaviside level: the coexistence equilibrium of g.
Density2 default_left_level(const ModelParams& p);

} // namespace lvspread
