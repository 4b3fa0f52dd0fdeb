#include "lvspread/pde.hpp"

#include "lvspread/equilibria.hpp"
#include "lvspread/errors.hpp"
#include "lvspread/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lvspread {

namespace {

double max_diffusivity(const ModelParams& p) { return std::max(p.D_e, p.D_d); }

void check_cfl(const ModelParams& p, double dx, double dt) {
    if (!(dt > 0.0) || !(dx > 0.0))
        throw ValidationError("step: dt and dx must be > 0");
    const double limit = dx * dx / (2.0 * max_diffusivity(p));
    if (dt > limit * (1.0 + 1e-12))
        throw ValidationError("step: dt = " + std::to_string(dt) +
                              " violates the explicit diffusion limit " + std::to_string(limit));
}

// out = in + dt * (D u_xx + f(u)). Ghost values mirror the first interior
// point for zero flux; a Dirichlet left end is held at its pinned value.
void advance(const ModelParams& p, const FieldState& in, FieldState& out, double dx, double dt,
             const Boundary& bc) {
    const std::size_t n = in.n_e.size();
    const double ke = p.D_e * dt / (dx * dx);
    const double kd = p.D_d * dt / (dx * dx);
    const double* ue = in.n_e.data();
    const double* ud = in.n_d.data();
    double* oe = out.n_e.data();
    double* od = out.n_d.data();

    auto update = [&](std::size_t i, double le, double re_, double ld, double rd_) {
        const Vec2 f = reaction_f(p, {ue[i], ud[i]});
        oe[i] = ue[i] + ke * (le - 2.0 * ue[i] + re_) + dt * f.e;
        od[i] = ud[i] + kd * (ld - 2.0 * ud[i] + rd_) + dt * f.d;
    };

    if (bc.kind == Boundary::Kind::Dirichlet) {
        oe[0] = bc.left.n_e;
        od[0] = bc.left.n_d;
    } else {
        update(0, ue[1], ue[1], ud[1], ud[1]);
    }
    for (std::size_t i = 1; i + 1 < n; ++i)
        update(i, ue[i - 1], ue[i + 1], ud[i - 1], ud[i + 1]);
    update(n - 1, ue[n - 2], ue[n - 2], ud[n - 2], ud[n - 2]);
    out.t = in.t + dt;
}

void check_state(const FieldState& s, std::size_t nx) {
    if (s.n_e.size() != nx || s.n_d.size() != nx)
        throw ValidationError("simulate: initial state does not match the grid");
}

} // namespace

void Grid1D::validate() const {
    if (!(L > 0.0) || !std::isfinite(L))
        throw ValidationError("Grid1D: L must be > 0");
    if (nx < 16)
        throw ValidationError("Grid1D: nx must be >= 16");
}

void SimConfig::validate() const {
    if (!(t_end > 0.0))
        throw ValidationError("SimConfig: t_end must be > 0");
    if (!(cfl_safety > 0.0) || cfl_safety > 1.0)
        throw ValidationError("SimConfig: cfl_safety must be in (0, 1]");
    if (sample_stride < 0)
        throw ValidationError("SimConfig: sample_stride must be >= 0");
    if (!(threshold > 0.0))
        throw ValidationError("SimConfig: threshold must be > 0");
}

double SimConfig::time_step(const ModelParams& p, const Grid1D& g) const {
    const double dx = g.dx();
    return cfl_safety * dx * dx / (2.0 * max_diffusivity(p));
}

FieldState heaviside_ic(const Grid1D& grid, double x0, Density2 left) {
    grid.validate();
    if (!(x0 > 0.0) || !(x0 < grid.L))
        throw ValidationError("heaviside_ic: x0 must lie in (0, L)");
    FieldState s;
    const auto n = static_cast<std::size_t>(grid.nx);
    s.n_e.assign(n, 0.0);
    s.n_d.assign(n, 0.0);
    for (std::size_t i = 0; i < n && grid.x(i) <= x0; ++i) {
        s.n_e[i] = left.n_e;
        s.n_d[i] = left.n_d;
    }
    return s;
}

FieldState step(const ModelParams& p, const FieldState& state, double dx, double dt,
                const Boundary& boundary) {
    check_cfl(p, dx, dt);
    if (state.n_e.size() < 3 || state.n_d.size() != state.n_e.size())
        throw ValidationError("step: malformed state");
    FieldState out;
    out.n_e.resize(state.n_e.size());
    out.n_d.resize(state.n_d.size());
    advance(p, state, out, dx, dt, boundary);
    return out;
}

std::optional<double> track_front(const FieldState& state, const Grid1D& grid, double threshold) {
    if (!(threshold > 0.0))
        throw ValidationError("track_front: threshold must be > 0");
    const std::size_t n = state.n_e.size();
    for (std::size_t i = n - 1; i-- > 0;) {
        const double s0 = state.n_e[i] + state.n_d[i];
        const double s1 = state.n_e[i + 1] + state.n_d[i + 1];
        if (s0 >= threshold && s1 < threshold)
            return grid.x(i) + (s0 - threshold) / (s0 - s1) * grid.dx();
    }
    return std::nullopt;
}

SimResult simulate(const ModelParams& p, const Grid1D& grid, const SimConfig& cfg,
                   const FieldState& ic) {
    p.validate();
    grid.validate();
    cfg.validate();
    const auto nx = static_cast<std::size_t>(grid.nx);
    check_state(ic, nx);

    const double dx = grid.dx();
    const double dt_max = cfg.time_step(p, grid);
    const auto steps = static_cast<std::size_t>(std::ceil(cfg.t_end / dt_max - 1e-9));
    const double dt = cfg.t_end / static_cast<double>(steps);
    check_cfl(p, dx, dt);
    const std::size_t stride =
        cfg.sample_stride > 0 ? static_cast<std::size_t>(cfg.sample_stride)
                              : std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(0.5 / dt)));

    SimResult res;
    res.steps = steps;
    res.dt = dt;
    res.trace.threshold = cfg.threshold;
    try {
        res.bounds.k_plus = k_plus(p);
    } catch (const std::exception&) {
        res.bounds.k_plus.reset();
    }

    constexpr double inf = std::numeric_limits<double>::infinity();
    res.bounds.min_e = res.bounds.min_d = inf;
    res.bounds.max_e = res.bounds.max_d = -inf;

    auto observe = [&](const FieldState& s) {
        const auto [mn_e, mx_e] = std::minmax_element(s.n_e.begin(), s.n_e.end());
        const auto [mn_d, mx_d] = std::minmax_element(s.n_d.begin(), s.n_d.end());
        for (std::size_t i = 0; i < nx; ++i) {
            if (!std::isfinite(s.n_e[i]) || !std::isfinite(s.n_d[i]))
                throw NumericalError("simulate: non-finite density at t = " + std::to_string(s.t));
        }
        auto& b = res.bounds;
        b.min_e = std::min(b.min_e, *mn_e);
        b.max_e = std::max(b.max_e, *mx_e);
        b.min_d = std::min(b.min_d, *mn_d);
        b.max_d = std::max(b.max_d, *mx_d);
        if (const auto x = track_front(s, grid, cfg.threshold))
            res.trace.samples.push_back({s.t, *x});
        else
            ++res.trace.missed;
    };

    FieldState cur = ic;
    cur.t = 0.0;
    FieldState next;
    next.n_e.resize(nx);
    next.n_d.resize(nx);
    observe(cur);
    for (std::size_t k = 1; k <= steps; ++k) {
        advance(p, cur, next, dx, dt, cfg.boundary);
        next.t = static_cast<double>(k) * dt;
        std::swap(cur, next);
        if (k % stride == 0 || k == steps)
            observe(cur);
    }

    auto& b = res.bounds;
    b.violation = b.min_e < -1e-10 || b.min_d < -1e-10;
    if (b.k_plus)
        b.violation = b.violation || b.max_e > b.k_plus->n_e + 1e-8 || b.max_d > b.k_plus->n_d + 1e-8;
    res.final_state = std::move(cur);
    return res;
}

SpeedEstimate estimate_speed(const FrontTrace& trace, double window, const Grid1D& grid) {
    if (!(window > 0.0) || window > 1.0)
        throw ValidationError("estimate_speed: window must be in (0, 1]");
    const std::size_t total = trace.samples.size();
    const auto used = static_cast<std::size_t>(std::ceil(window * static_cast<double>(total)));
    if (used < 10)
        throw ValidationError("estimate_speed: fewer than 10 samples in the window");
    const std::size_t first = total - used;

    double mt = 0.0, mx = 0.0;
    for (std::size_t i = first; i < total; ++i) {
        mt += trace.samples[i].t;
        mx += trace.samples[i].x;
    }
    mt /= static_cast<double>(used);
    mx /= static_cast<double>(used);
    double stt = 0.0, stx = 0.0;
    for (std::size_t i = first; i < total; ++i) {
        const double dt = trace.samples[i].t - mt;
        stt += dt * dt;
        stx += dt * (trace.samples[i].x - mx);
    }
    if (!(stt > 0.0))
        throw ValidationError("estimate_speed: samples share a single time");
    const double slope = stx / stt;
    double ssr = 0.0;
    bool contaminated = false;
    const double edge = grid.L - 10.0 * grid.dx();
    for (std::size_t i = first; i < total; ++i) {
        const auto& s = trace.samples[i];
        const double r = s.x - (mx + slope * (s.t - mt));
        ssr += r * r;
        contaminated = contaminated || s.x > edge;
    }
    SpeedEstimate est;
    est.speed = slope;
    est.stderr_ = std::sqrt(ssr / static_cast<double>(used - 2) / stt);
    est.window = window;
    est.samples_used = used;
    est.boundary_contaminated = contaminated;
    return est;
}

std::string_view to_string(VerifyStatus s) {
    switch (s) {
    case VerifyStatus::Pass: return "pass";
    case VerifyStatus::Fail: return "fail";
    case VerifyStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

Density2 default_left_level(const ModelParams& p) { return equilibria_of_g(p)[3].point; }

VerifyReport verify_linear_determinacy(const ModelParams& p, const Grid1D& grid, SimConfig cfg,
                                       const VerifyOptions& opt) {
    VerifyReport rep;
    rep.tolerance = opt.tolerance;
    rep.c_star = min_speed(p).c_star;

    const Density2 left = opt.left ? *opt.left : default_left_level(p);
    cfg.threshold = opt.threshold_frac * (left.n_e + left.n_d);
    const auto sim = simulate(p, grid, cfg, heaviside_ic(grid, opt.x0, left));
    rep.bounds = sim.bounds;

    SpeedEstimate est;
    try {
        est = estimate_speed(sim.trace, opt.window, grid);
    } catch (const ValidationError& e) {
        rep.status = VerifyStatus::Inconclusive;
        rep.note = e.what();
        return rep;
    }
    rep.measured = est;
    rep.rel_discrepancy = std::abs(est.speed / rep.c_star - 1.0);
    if (est.boundary_contaminated) {
        rep.status = VerifyStatus::Inconclusive;
        rep.note = "front reached the right boundary layer";
    } else {
        rep.status = rep.rel_discrepancy <= opt.tolerance ? VerifyStatus::Pass : VerifyStatus::Fail;
    }
    return rep;
}

} // namespace lvspread
