#include "lvspread/cli.hpp"

#include "lvspread/equilibria.hpp"
#include "lvspread/errors.hpp"
#include "lvspread/parallel.hpp"
#include "lvspread/pde.hpp"
#include "lvspread/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

namespace lvspread::cli {

using nlohmann::json;

namespace {

const std::set<std::string> kParamKeys = {"D_e", "D_d", "r_e", "r_d", "m_ee", "m_dd", "m_ed", "m_de"};
const std::set<std::string> kSimKeys = {"L", "nx", "t_end", "cfl_safety", "threshold_frac", "x0", "boundary"};

double number(const json& j, const std::string& key) {
    const auto& v = j.at(key);
    if (!v.is_number())
        throw ValidationError("config: '" + key + "' must be a number");
    return v.get<double>();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// CSV destination: a file under --out, or the provided stream.
class CsvSink {
public:
    CsvSink(const std::string& out_dir, const std::string& name, std::ostream& fallback) {
        if (out_dir.empty()) {
            os_ = &fallback;
            return;
        }
        std::filesystem::create_directories(out_dir);
        path_ = (std::filesystem::path(out_dir) / name).string();
        file_.open(path_);
        if (!file_)
            throw ValidationError("cannot open " + path_ + " for writing");
        os_ = &file_;
    }
    std::ostream& stream() { return *os_; }
    const std::string& path() const { return path_; }
    bool to_file() const { return !path_.empty(); }

private:
    std::ofstream file_;
    std::string path_;
    std::ostream* os_ = nullptr;
};

void write_json(const std::string& out_dir, const std::string& name, const json& j) {
    if (out_dir.empty())
        return;
    std::filesystem::create_directories(out_dir);
    std::ofstream f(std::filesystem::path(out_dir) / name);
    if (!f)
        throw ValidationError("cannot open " + name + " for writing");
    f << j.dump(2) << '\n';
}

json to_json(Density2 n) { return json::array({n.n_e, n.n_d}); }

json to_json(const Equilibrium& eq) {
    return {{"point", to_json(eq.point)},
            {"kind", std::string(to_string(eq.kind))},
            {"stability", std::string(to_string(eq.stability))},
            {"residual", eq.residual}};
}

json params_json(const ModelParams& p) {
    json j;
    for (const auto& [k, v] : p.fields())
        j[std::string(k)] = v;
    return j;
}

struct Common {
    std::string config;
    std::string out;
    int jobs = 1;
};

struct SimOverrides {
    std::optional<double> t_end, length, cfl;
    std::optional<int> nx;
};

void add_sim_overrides(CLI::App* sub, SimOverrides& o) {
    sub->add_option("--t-end", o.t_end, "Final time");
    sub->add_option("--length", o.length, "Domain length L");
    sub->add_option("--nx", o.nx, "Grid points");
    sub->add_option("--cfl-safety", o.cfl, "Fraction of the explicit time-step limit");
}

SimSettings apply_overrides(SimSettings s, const SimOverrides& o) {
    if (o.t_end) s.t_end = *o.t_end;
    if (o.length) s.L = *o.length;
    if (o.nx) s.nx = *o.nx;
    if (o.cfl) s.cfl_safety = *o.cfl;
    return s;
}

Grid1D make_grid(const SimSettings& s) {
    Grid1D g{s.L, s.nx};
    g.validate();
    return g;
}

SimConfig make_sim_config(const SimSettings& s, Density2 left) {
    SimConfig c;
    c.t_end = s.t_end;
    c.cfl_safety = s.cfl_safety;
    c.threshold = s.threshold_frac * (left.n_e + left.n_d);
    c.boundary = s.boundary == "dirichlet" ? Boundary::dirichlet(left) : Boundary::neumann();
    return c;
}

MutationScaling scaling_or_unit(const RunConfig& cfg) {
    if (cfg.scaling)
        return *cfg.scaling;
    return {1.0, cfg.params.mu_e, cfg.params.mu_d};
}

// Subcommands -----------------------------------------------------------------

int cmd_speed(const Common& c, std::ostream& out) {
    const auto cfg = load_config(c.config);
    const auto sp = min_speed(cfg.params);
    out << "c_star=" << fmt(sp.c_star) << " beta=" << fmt(sp.beta_min);
    if (sp.q_ratio())
        out << " q_ratio=" << fmt(*sp.q_ratio());
    else
        out << " q_ratio=undefined (no mutation)";
    out << '\n';
    if (!c.out.empty()) {
        CsvSink csv(c.out, "dispersion.csv", out);
        csv.stream() << "beta,eta\n";
        for (const auto& d : dispersion_scan(cfg.params, logspace(1e-3, 1e3, 200)))
            csv.stream() << fmt(d.beta) << ',' << fmt(d.eta) << '\n';
        json j{{"c_star", sp.c_star}, {"beta_min", sp.beta_min}, {"params", params_json(cfg.params)}};
        if (sp.q)
            j["q"] = json::array({sp.q->e, sp.q->d});
        write_json(c.out, "speed.json", j);
    }
    return kSuccess;
}

int cmd_limits(const Common& c, std::ostream& out) {
    const auto cfg = load_config(c.config);
    const auto v = speed_limits(cfg.params);
    out << "v_e=" << fmt(v.v_e) << " v_d=" << fmt(v.v_d)
        << " v_f=" << (v.v_f ? fmt(*v.v_f) : std::string("undefined")) << '\n';
    json j{{"v_e", v.v_e}, {"v_d", v.v_d}};
    if (v.v_f)
        j["v_f"] = *v.v_f;
    if (classify_regime(cfg.params) == Regime::Anomalous) {
        const auto ls = limit_summary(cfg.params, scaling_or_unit(cfg));
        out << "beta_star=" << fmt(ls.beta_star) << " eta_0=" << fmt(ls.eta_0) << " a=" << fmt(ls.a)
            << " b=" << fmt(ls.b) << " q_ratio=" << fmt(ls.q_ratio) << " eta_prime_0=" << fmt(ls.eta_prime_0)
            << " beta_prime_0=" << fmt(ls.beta_prime_0) << '\n';
        j["limit"] = {{"beta_star", ls.beta_star}, {"eta_0", ls.eta_0},     {"a", ls.a},
                      {"b", ls.b},                 {"q_ratio", ls.q_ratio}, {"eta_prime_0", ls.eta_prime_0},
                      {"beta_prime_0", ls.beta_prime_0},
                      {"residual_disperser_row", ls.residual_disperser_row}};
    } else {
        out << "limit summary unavailable: regime is " << to_string(classify_regime(cfg.params)) << '\n';
    }
    write_json(c.out, "limits.json", j);
    return kSuccess;
}

int cmd_classify(const Common& c, std::ostream& out) {
    const auto cfg = load_config(c.config);
    const auto regime = classify_regime(cfg.params);
    const auto env = envelope_min_speed(cfg.params);
    out << "regime=" << to_string(regime) << " v_limit=" << fmt(limiting_speed(cfg.params))
        << " envelope_min=" << fmt(env.c_star) << " at beta=" << fmt(env.beta_min) << '\n';
    write_json(c.out, "classify.json",
               {{"regime", std::string(to_string(regime))},
                {"v_limit", limiting_speed(cfg.params)},
                {"envelope_min", env.c_star},
                {"envelope_beta", env.beta_min}});
    return kSuccess;
}

int cmd_equilibria(const Common& c, int grid_n, std::ostream& out) {
    const auto cfg = load_config(c.config);
    const auto& p = cfg.params;
    json j;
    out << "equilibria of g:\n";
    for (const auto& eq : equilibria_of_g(p)) {
        out << "  (" << fmt(eq.point.n_e) << ", " << fmt(eq.point.n_d) << ") " << to_string(eq.kind) << ' '
            << to_string(eq.stability) << '\n';
        j["g"].push_back(to_json(eq));
    }
    const auto eqs = find_equilibria_of_f(p, default_search_box(p), grid_n);
    out << "equilibria of f (search box):\n";
    j["f"] = json::array();
    for (const auto& eq : eqs) {
        out << "  (" << fmt(eq.point.n_e) << ", " << fmt(eq.point.n_d) << ") " << to_string(eq.kind) << ' '
            << to_string(eq.stability) << (eq.non_negative() ? "" : " [negative component]") << '\n';
        j["f"].push_back(to_json(eq));
    }
    try {
        const auto kp = k_plus(p);
        out << "k_plus=(" << fmt(kp.n_e) << ", " << fmt(kp.n_d) << ")\n";
        j["k_plus"] = to_json(kp);
    } catch (const ValidationError& e) {
        out << "k_plus unavailable: " << e.what() << '\n';
    }
    try {
        const auto km = k_minus(p);
        out << "k_minus=(" << fmt(km.n_e) << ", " << fmt(km.n_d) << ")\n";
        j["k_minus"] = to_json(km);
    } catch (const ConditionError& e) {
        out << "k_minus unavailable: " << e.what() << '\n';
        j["k_minus_error"] = e.condition();
    }
    write_json(c.out, "equilibria.json", j);
    return kSuccess;
}

int cmd_conditions(const Common& c, std::ostream& out) {
    const auto cfg = load_config(c.config);
    const auto rep = check_conditions(cfg.params);
    json j;
    for (const auto& [name, cond] : rep.entries()) {
        out << name << ' ' << (cond.holds ? "PASS" : "FAIL") << " margin=" << fmt(cond.margin) << '\n';
        j[std::string(name)] = {{"holds", cond.holds}, {"margin", cond.margin}};
    }
    out << "N_e=" << fmt(rep.N_e) << " N_d=" << fmt(rep.N_d)
        << " theorem3_satisfied=" << (rep.theorem3_satisfied ? "true" : "false") << '\n';
    j["N_e"] = rep.N_e;
    j["N_d"] = rep.N_d;
    j["theorem3_satisfied"] = rep.theorem3_satisfied;
    write_json(c.out, "conditions.json", j);
    return kSuccess;
}

int cmd_mu_curve(const Common& c, double mu_min, double mu_max, int points, std::ostream& out,
                 std::ostream& err) {
    const auto cfg = load_config(c.config);
    const auto curve = mu_curve(cfg.params, scaling_or_unit(cfg), logspace(mu_min, mu_max, points), c.jobs);
    CsvSink csv(c.out, "mu_curve.csv", out);
    csv.stream() << "mu,eta,beta,q_ratio,eta_prime,beta_prime\n";
    for (const auto& r : curve.rows)
        csv.stream() << fmt(r.mu) << ',' << fmt(r.eta) << ',' << fmt(r.beta) << ',' << fmt(r.q_ratio) << ','
                     << fmt(r.eta_prime) << ',' << fmt(r.beta_prime) << '\n';
    (csv.to_file() ? out : err) << "mu-curve: " << curve.rows.size() << " rows"
                                << (csv.to_file() ? " -> " + csv.path() : std::string()) << '\n';
    return kSuccess;
}

struct SweepOptions {
    std::string kind = "regime";
    int n = 50;
    std::string vary = "r";
    double r = 0.2 / 1.1, D = 0.3 / 1.5, m = 4.0;
    double lo = 0.0, hi = 0.0;
};

int cmd_sweep(const Common& c, const SweepOptions& s, std::ostream& out, std::ostream& err) {
    if (s.n < 2)
        throw ValidationError("sweep: --n must be >= 2");
    double r_e = 1.0, D_d = 1.0;
    if (!c.config.empty()) {
        const auto cfg = load_config(c.config);
        r_e = cfg.params.r_e;
        D_d = cfg.params.D_d;
    }
    std::size_t rows = 0;
    std::string path;
    if (s.kind == "regime") {
        const auto n = static_cast<std::size_t>(s.n);
        struct Row { double r, D; Regime regime; double v; };
        std::vector<Row> grid(n * n);
        parallel_for(grid.size(), c.jobs, [&](std::size_t k) {
            const double r = (static_cast<double>(k / n) + 0.5) / static_cast<double>(n);
            const double D = (static_cast<double>(k % n) + 0.5) / static_cast<double>(n);
            ModelParams p{D * D_d, D_d, r_e, r * r_e, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0};
            grid[k] = {r, D, classify_regime(p), limiting_speed(p)};
        });
        CsvSink csv(c.out, "sweep.csv", out);
        csv.stream() << "r_ratio,D_ratio,regime,v_limit\n";
        for (const auto& row : grid)
            csv.stream() << fmt(row.r) << ',' << fmt(row.D) << ',' << to_string(row.regime) << ',' << fmt(row.v)
                         << '\n';
        rows = grid.size();
        path = csv.path();
    } else if (s.kind == "qratio") {
        if (s.vary != "r" && s.vary != "D" && s.vary != "m")
            throw ValidationError("sweep: --vary must be r, D or m");
        double lo = s.lo, hi = s.hi;
        if (!(hi > lo)) {
            lo = s.vary == "m" ? 0.1 : 0.0;
            hi = s.vary == "m" ? 10.0 : 1.0;
        }
        CsvSink csv(c.out, "qratio_sweep.csv", out);
        csv.stream() << "r_ratio,D_ratio,m_ratio,q_ratio\n";
        for (int i = 0; i < s.n; ++i) {
            const double v = lo + (hi - lo) * (i + 0.5) / s.n;
            double r = s.r, D = s.D, m = s.m;
            (s.vary == "r" ? r : s.vary == "D" ? D : m) = v;
            double q = std::nan("");
            try {
                q = q_ratio_from_ratios(r, D, m);
            } catch (const ValidationError&) {
            }
            csv.stream() << fmt(r) << ',' << fmt(D) << ',' << fmt(m) << ',' << fmt(q) << '\n';
        }
        rows = static_cast<std::size_t>(s.n);
        path = csv.path();
    } else {
        throw ValidationError("sweep: --kind must be regime or qratio");
    }
    (path.empty() ? err : out) << "sweep: " << rows << " rows" << (path.empty() ? "" : " -> " + path) << '\n';
    return kSuccess;
}

int cmd_simulate(const Common& c, const SimOverrides& o, std::ostream& out, std::ostream& err) {
    const auto cfg = load_config(c.config);
    const auto settings = apply_overrides(cfg.sim, o);
    const auto grid = make_grid(settings);
    const Density2 left = default_left_level(cfg.params);
    const auto sim = simulate(cfg.params, grid, make_sim_config(settings, left),
                              heaviside_ic(grid, settings.x0, left));
    std::ostream& summary = c.out.empty() ? err : out;
    {
        CsvSink csv(c.out, "trace.csv", out);
        csv.stream() << "t,x_front\n";
        for (const auto& s : sim.trace.samples)
            csv.stream() << fmt(s.t) << ',' << fmt(s.x) << '\n';
    }
    if (!c.out.empty()) {
        CsvSink prof(c.out, "profile.csv", out);
        prof.stream() << "x,n_e,n_d\n";
        for (std::size_t i = 0; i < sim.final_state.n_e.size(); ++i)
            prof.stream() << fmt(grid.x(i)) << ',' << fmt(sim.final_state.n_e[i]) << ','
                          << fmt(sim.final_state.n_d[i]) << '\n';
    }
    summary << "simulate: steps=" << sim.steps << " dt=" << fmt(sim.dt) << " samples=" << sim.trace.samples.size()
            << " bounds_violation=" << (sim.bounds.violation ? "true" : "false");
    try {
        const auto est = estimate_speed(sim.trace, 0.5, grid);
        summary << " speed=" << fmt(est.speed) << " stderr=" << fmt(est.stderr_)
                << (est.boundary_contaminated ? " (boundary contaminated)" : "");
    } catch (const ValidationError& e) {
        summary << " speed=undefined (" << e.what() << ')';
    }
    summary << '\n';
    return kSuccess;
}

int cmd_verify(const Common& c, const SimOverrides& o, double tolerance, std::ostream& out) {
    const auto cfg = load_config(c.config);
    const auto settings = apply_overrides(cfg.sim, o);
    const auto grid = make_grid(settings);
    VerifyOptions vo;
    vo.x0 = settings.x0;
    vo.threshold_frac = settings.threshold_frac;
    vo.tolerance = tolerance;
    const Density2 left = default_left_level(cfg.params);
    vo.left = left;
    const auto rep = verify_linear_determinacy(cfg.params, grid, make_sim_config(settings, left), vo);

    out << "verify: " << to_string(rep.status) << " c_star=" << fmt(rep.c_star);
    json j{{"status", std::string(to_string(rep.status))}, {"c_star", rep.c_star}, {"tolerance", rep.tolerance}};
    if (rep.measured) {
        out << " measured=" << fmt(rep.measured->speed) << " rel_discrepancy=" << fmt(rep.rel_discrepancy);
        j["measured"] = rep.measured->speed;
        j["stderr"] = rep.measured->stderr_;
        j["rel_discrepancy"] = rep.rel_discrepancy;
        j["boundary_contaminated"] = rep.measured->boundary_contaminated;
    }
    if (!rep.note.empty())
        out << " (" << rep.note << ')';
    out << '\n';
    j["bounds_violation"] = rep.bounds.violation;
    write_json(c.out, "verify.json", j);
    switch (rep.status) {
    case VerifyStatus::Pass: return kSuccess;
    case VerifyStatus::Fail: return kNumericalFailure;
    case VerifyStatus::Inconclusive: return kInconclusive;
    }
    return kNumericalFailure;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ValidationError("config: top level must be an object");

    const bool direct = j.contains("mu_e") || j.contains("mu_d");
    const bool scaled = j.contains("mu") || j.contains("e") || j.contains("d");
    if (direct && scaled)
        throw ValidationError("config: give either mu_e, mu_d or mu, e, d, not both");

    for (const auto& [key, _] : j.items()) {
        const bool known = kParamKeys.count(key) || key == "sim" ||
                           (direct && (key == "mu_e" || key == "mu_d")) ||
                           (scaled && (key == "mu" || key == "e" || key == "d"));
        if (!known)
            throw ValidationError("config: unknown key '" + key + "'");
    }
    std::vector<std::string> required(kParamKeys.begin(), kParamKeys.end());
    if (scaled)
        required.insert(required.end(), {"mu", "e", "d"});
    else
        required.insert(required.end(), {"mu_e", "mu_d"});
    for (const auto& key : required)
        if (!j.contains(key))
            throw ValidationError("config: missing key '" + key + "'");

    RunConfig cfg;
    auto& p = cfg.params;
    p.D_e = number(j, "D_e");
    p.D_d = number(j, "D_d");
    p.r_e = number(j, "r_e");
    p.r_d = number(j, "r_d");
    p.m_ee = number(j, "m_ee");
    p.m_dd = number(j, "m_dd");
    p.m_ed = number(j, "m_ed");
    p.m_de = number(j, "m_de");
    if (scaled) {
        cfg.scaling = MutationScaling{number(j, "mu"), number(j, "e"), number(j, "d")};
        cfg.scaling->validate();
        p = cfg.scaling->apply(p);
    } else {
        p.mu_e = number(j, "mu_e");
        p.mu_d = number(j, "mu_d");
    }
    p.validate();

    if (j.contains("sim")) {
        const auto& s = j.at("sim");
        if (!s.is_object())
            throw ValidationError("config: 'sim' must be an object");
        for (const auto& [key, _] : s.items())
            if (!kSimKeys.count(key))
                throw ValidationError("config: unknown key 'sim." + key + "'");
        auto& out = cfg.sim;
        if (s.contains("L")) out.L = number(s, "L");
        if (s.contains("nx")) {
            if (!s.at("nx").is_number_integer())
                throw ValidationError("config: 'sim.nx' must be an integer");
            out.nx = s.at("nx").get<int>();
        }
        if (s.contains("t_end")) out.t_end = number(s, "t_end");
        if (s.contains("cfl_safety")) out.cfl_safety = number(s, "cfl_safety");
        if (s.contains("threshold_frac")) out.threshold_frac = number(s, "threshold_frac");
        if (s.contains("x0")) out.x0 = number(s, "x0");
        if (s.contains("boundary")) {
            if (!s.at("boundary").is_string())
                throw ValidationError("config: 'sim.boundary' must be a string");
            out.boundary = s.at("boundary").get<std::string>();
            if (out.boundary != "neumann" && out.boundary != "dirichlet")
                throw ValidationError("config: 'sim.boundary' must be \"neumann\" or \"dirichlet\"");
        }
        if (!(out.threshold_frac > 0.0))
            throw ValidationError("config: 'sim.threshold_frac' must be > 0");
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw ValidationError("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spreading speeds, equilibria and front simulation for a two-morph "
                 "Lotka-Volterra system with mutation"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub, bool config_required = true) {
        auto* opt = sub->add_option("--config", common.config, "JSON parameter file");
        if (config_required)
            opt->required();
        sub->add_option("--out", common.out, "Output directory for CSV/JSON products");
        sub->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
    };

    auto* speed = app.add_subcommand("speed", "Minimal linear spreading speed c*");
    add_common(speed);
    auto* limits = app.add_subcommand("limits", "Limiting speeds and small-mutation limit");
    add_common(limits);
    auto* classify = app.add_subcommand("classify", "Regime of the mutation-free limit");
    add_common(classify);
    int grid_n = 25;
    auto* equilibria = app.add_subcommand("equilibria", "Equilibria of g and f, k+ and k-");
    add_common(equilibria);
    equilibria->add_option("--grid-n", grid_n, "Newton seeds per axis");
    auto* conditions = app.add_subcommand("conditions", "Parameter conditions with margins");
    add_common(conditions);

    double mu_min = 1e-6, mu_max = 10.0;
    int points = 25;
    auto* mucurve = app.add_subcommand("mu-curve", "Minimal speed as a function of mu");
    add_common(mucurve);
    mucurve->add_option("--mu-min", mu_min);
    mucurve->add_option("--mu-max", mu_max);
    mucurve->add_option("--points", points);

    SweepOptions sw;
    auto* sweep = app.add_subcommand("sweep", "Regime or leading-edge ratio maps over ratio grids");
    add_common(sweep, false);
    sweep->add_option("--kind", sw.kind, "regime | qratio");
    sweep->add_option("--n", sw.n, "Points per axis");
    sweep->add_option("--vary", sw.vary, "qratio: which ratio varies (r, D, m)");
    sweep->add_option("--r", sw.r, "qratio: fixed r_d/r_e");
    sweep->add_option("--D", sw.D, "qratio: fixed D_e/D_d");
    sweep->add_option("--m", sw.m, "qratio: fixed e/d");
    sweep->add_option("--lo", sw.lo, "qratio: lower end of the varied ratio");
    sweep->add_option("--hi", sw.hi, "qratio: upper end of the varied ratio");

    SimOverrides sim_o;
    auto* simulate_cmd = app.add_subcommand("simulate", "Run the PDE from Heaviside data");
    add_common(simulate_cmd);
    add_sim_overrides(simulate_cmd, sim_o);

    double tolerance = 0.03;
    auto* verify = app.add_subcommand("verify", "Compare simulated front speed with c*");
    add_common(verify);
    add_sim_overrides(verify, sim_o);
    verify->add_option("--tolerance", tolerance, "Relative speed tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kValidationError;
    }

    try {
        if (*speed) return cmd_speed(common, out);
        if (*limits) return cmd_limits(common, out);
        if (*classify) return cmd_classify(common, out);
        if (*equilibria) return cmd_equilibria(common, grid_n, out);
        if (*conditions) return cmd_conditions(common, out);
        if (*mucurve) return cmd_mu_curve(common, mu_min, mu_max, points, out, err);
        if (*sweep) return cmd_sweep(common, sw, out, err);
        if (*simulate_cmd) return cmd_simulate(common, sim_o, out, err);
        if (*verify) return cmd_verify(common, sim_o, tolerance, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalFailure;
    }
    return kValidationError;
}

} // namespace lvspread::cli
