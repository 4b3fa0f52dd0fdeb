#include "lvspread/equilibria.hpp"
#include "lvspread/errors.hpp"
#include "lvspread/model.hpp"
#include "lvspread/pde.hpp"
#include "lvspread/spectral.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace lvspread;

namespace {

py::tuple as_tuple(Vec2 v) { return py::make_tuple(v.e, v.d); }
py::tuple as_tuple(Density2 n) { return py::make_tuple(n.n_e, n.n_d); }
Density2 as_density(std::pair<double, double> n) { return {n.first, n.second}; }

} // namespace

PYBIND11_MODULE(_lvspread, m) {
    m.doc() = "Spreading speeds and equilibria of a two-morph Lotka-Volterra system with mutation";

    auto base = py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ConditionError>(m, "ConditionError", base.ptr());
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double D_e, double D_d, double r_e, double r_d, double m_ee, double m_dd, double m_ed,
                         double m_de, double mu_e, double mu_d) {
                 return ModelParams{D_e, D_d, r_e, r_d, m_ee, m_dd, m_ed, m_de, mu_e, mu_d}.validated();
             }),
             py::arg("D_e"), py::arg("D_d"), py::arg("r_e"), py::arg("r_d"), py::arg("m_ee"), py::arg("m_dd"),
             py::arg("m_ed"), py::arg("m_de"), py::arg("mu_e"), py::arg("mu_d"))
        .def_readwrite("D_e", &ModelParams::D_e)
        .def_readwrite("D_d", &ModelParams::D_d)
        .def_readwrite("r_e", &ModelParams::r_e)
        .def_readwrite("r_d", &ModelParams::r_d)
        .def_readwrite("m_ee", &ModelParams::m_ee)
        .def_readwrite("m_dd", &ModelParams::m_dd)
        .def_readwrite("m_ed", &ModelParams::m_ed)
        .def_readwrite("m_de", &ModelParams::m_de)
        .def_readwrite("mu_e", &ModelParams::mu_e)
        .def_readwrite("mu_d", &ModelParams::mu_d);

    py::class_<MutationScaling>(m, "MutationScaling")
        .def(py::init<double, double, double>(), py::arg("mu"), py::arg("e"), py::arg("d"))
        .def("apply", &MutationScaling::apply);

    m.def("reaction_f", [](const ModelParams& p, std::pair<double, double> n) {
        return as_tuple(reaction_f(p, as_density(n)));
    });
    m.def("density_bounds", [](const ModelParams& p) {
        const auto N = density_bounds(p);
        return py::make_tuple(N.N_e, N.N_d);
    });
    m.def("check_conditions", [](const ModelParams& p) {
        const auto r = check_conditions(p);
        py::dict d;
        for (const auto& [name, c] : r.entries())
            d[py::str(std::string(name))] = py::make_tuple(c.holds, c.margin);
        d["theorem3_satisfied"] = r.theorem3_satisfied;
        return d;
    });

    m.def("equilibria_of_f", [](const ModelParams& p) {
        py::list out;
        for (const auto& e : find_equilibria_of_f(p, default_search_box(p)))
            out.append(py::make_tuple(as_tuple(e.point), std::string(to_string(e.kind)),
                                      std::string(to_string(e.stability))));
        return out;
    });
    m.def("perturbation_theta", [](const ModelParams& p, const MutationScaling& s, std::pair<double, double> eq) {
        return as_tuple(perturbation_theta(p, s, as_density(eq)));
    });
    m.def("k_plus", [](const ModelParams& p) { return as_tuple(k_plus(p)); });
    m.def("k_minus", [](const ModelParams& p) { return as_tuple(k_minus(p)); });

    m.def("pf_eigenpair", [](double a11, double a12, double a21, double a22) {
        const auto pf = pf_eigenpair({a11, a12, a21, a22});
        return py::make_tuple(pf.eta, as_tuple(pf.q));
    });
    m.def("min_speed", [](const ModelParams& p) {
        const auto sp = min_speed(p);
        return py::make_tuple(sp.c_star, sp.beta_min, sp.q_ratio());
    });
    m.def("speed_limits", [](const ModelParams& p) {
        const auto v = speed_limits(p);
        return py::make_tuple(v.v_e, v.v_d, v.v_f);
    });
    m.def("classify_regime", [](const ModelParams& p) { return std::string(to_string(classify_regime(p))); });
    m.def("limit_summary", [](const ModelParams& p, const MutationScaling& s) {
        const auto l = limit_summary(p, s);
        py::dict d;
        d["beta_star"] = l.beta_star;
        d["eta_0"] = l.eta_0;
        d["a"] = l.a;
        d["b"] = l.b;
        d["q_ratio"] = l.q_ratio;
        d["eta_prime_0"] = l.eta_prime_0;
        d["beta_prime_0"] = l.beta_prime_0;
        return d;
    });
    m.def("q_ratio_from_ratios", &q_ratio_from_ratios, py::arg("r"), py::arg("D"), py::arg("m"));
    m.def(
        "mu_curve",
        [](const ModelParams& p, const MutationScaling& s, const std::vector<double>& grid, int jobs) {
            py::list rows;
            for (const auto& r : mu_curve(p, s, grid, jobs).rows)
                rows.append(py::make_tuple(r.mu, r.eta, r.beta, r.q_ratio, r.eta_prime, r.beta_prime));
            return rows;
        },
        py::arg("p"), py::arg("s"), py::arg("mu_grid"), py::arg("jobs") = 1);

    m.def(
        "verify",
        [](const ModelParams& p, double L, int nx, double t_end, double tolerance) {
            SimConfig cfg;
            cfg.t_end = t_end;
            VerifyOptions opt;
            opt.tolerance = tolerance;
            const auto rep = verify_linear_determinacy(p, Grid1D{L, nx}, cfg, opt);
            py::dict d;
            d["status"] = std::string(to_string(rep.status));
            d["c_star"] = rep.c_star;
            d["measured"] = rep.measured ? py::cast(rep.measured->speed) : py::none();
            d["rel_discrepancy"] = rep.rel_discrepancy;
            return d;
        },
        py::arg("p"), py::arg("L") = 400.0, py::arg("nx") = 4001, py::arg("t_end") = 200.0,
        py::arg("tolerance") = 0.03);
}
