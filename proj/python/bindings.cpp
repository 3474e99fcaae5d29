#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gkw/continuation.hpp"
#include "gkw/evolution.hpp"
#include "gkw/groundstate.hpp"
#include "gkw/index.hpp"
#include "gkw/linop.hpp"
#include "gkw/reproduce.hpp"

namespace py = pybind11;
using namespace py::literals;

namespace {

py::array_t<double> array(const std::vector<double>& v) {
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

py::array_t<double> array(const gkw::Field& f) {
    return array(std::vector<double>(f.values().begin(), f.values().end()));
}

gkw::Field field_from(const py::array_t<double, py::array::c_style | py::array::forcecast>& values,
                      double half_length) {
    gkw::require(values.ndim() == 1, "expected a 1-d array");
    const gkw::GridSpec grid(half_length, static_cast<std::size_t>(values.shape(0)));
    return gkw::Field(grid, std::vector<double>(values.data(), values.data() + values.shape(0)));
}

py::dict params_dict(const gkw::WaveParams& p) { return py::dict("p"_a = p.p, "c"_a = p.c, "mu"_a = p.mu); }

py::dict profile_dict(const gkw::SolitonProfile& s) {
    return py::dict("x"_a = array(s.field.grid().coordinates()), "values"_a = array(s.field),
                    "half_length"_a = s.field.grid().half_length(), "amplitude"_a = s.amplitude,
                    "decay_scale"_a = s.decay_scale, "params"_a = params_dict(s.params),
                    "residual"_a = gkw::residual_norm(s.field, s.params));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Generalized Kawahara solitary waves (compiled core)";

    static py::exception<gkw::ComputationError> computation_error(m, "ComputationError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const gkw::InvalidArgument& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const gkw::ComputationError& e) {
            const std::string msg = std::string(e.what()) + (e.diagnostics().empty() ? "" : " [" + e.diagnostics() + "]");
            PyErr_SetString(computation_error.ptr(), msg.c_str());
        }
    });

    m.def("explicit_speed", &gkw::explicit_speed, "p"_a);
    m.def("linear_decay_rate", &gkw::linear_decay_rate, "c"_a, "mu"_a);
    m.def("beta_p", &gkw::beta_p, "p"_a);

    m.def(
        "explicit_soliton",
        [](double p, double mu, std::size_t n) {
            const gkw::WaveParams prm{p, gkw::explicit_speed(p) / mu, mu};
            return profile_dict(gkw::explicit_gkw_soliton(p, gkw::default_grid(prm, n), mu));
        },
        "p"_a, "mu"_a = 1.0, "num_points"_a = 1024, "Closed-form wave of speed c_p / mu.");

    m.def(
        "gkdv_soliton",
        [](double c, double p, std::size_t n) {
            return profile_dict(gkw::gkdv_soliton(c, p, gkw::default_grid({p, c, 0.0}, n)));
        },
        "c"_a, "p"_a, "num_points"_a = 1024);

    m.def(
        "spectrum",
        [](double p, int k, std::size_t n) {
            const gkw::SolitonProfile phi =
                gkw::explicit_gkw_soliton(p, gkw::default_index_grid(p, n), gkw::explicit_speed(p));
            const gkw::SpectrumReport r = gkw::bottom_spectrum(gkw::LinearizedOperator::assemble(phi), k);
            return py::dict("eigenvalues"_a = array(r.eigenvalues), "even"_a = r.even,
                            "negative_count"_a = r.negative_count, "kernel_eigenvalue"_a = r.kernel_eigenvalue,
                            "kernel_alignment"_a = r.kernel_alignment, "kernel_found"_a = r.kernel_found,
                            "essential_floor"_a = r.essential_floor);
        },
        "p"_a, "k"_a = 4, "num_points"_a = 1024,
        "Bottom of the spectrum at the explicit wave, normalized to c = 1.");

    m.def(
        "albert",
        [](double p, double omega_max, int samples) {
            const gkw::AlbertReport a = gkw::albert_criterion(p, omega_max, samples);
            return py::dict("positivity_ok"_a = a.positivity_ok, "logconcavity_ok"_a = a.logconcavity_ok,
                            "min_transform_ratio"_a = a.min_transform_ratio, "max_curvature"_a = a.max_curvature,
                            "log_curvature_at_1"_a = gkw::sech4_log_curvature(1.0));
        },
        "p"_a, "omega_max"_a = 50.0, "samples"_a = 2000);

    m.def(
        "index",
        [](double p, const std::string& method) {
            gkw::require(method == "bvp" || method == "spectral", "method must be 'bvp' or 'spectral'");
            const gkw::IndexReport r = method == "bvp" ? gkw::index_bvp(p) : gkw::index_spectral(p);
            return py::dict("p"_a = r.p, "j_half"_a = r.j_half, "j_full"_a = r.j_full, "r_max"_a = r.r_max,
                            "method"_a = r.method, "rho"_a = array(r.rho),
                            "pairing_identity_error"_a = r.pairing_identity_error,
                            "refinement_change"_a = r.refinement_change);
        },
        "p"_a, "method"_a = "bvp");

    m.def("critical_exponent", &gkw::critical_exponent, "p_lo"_a = 4.0, "p_hi"_a = 5.0, "tol"_a = 1e-3);

    m.def(
        "groundstate",
        [](int p, double mu, std::size_t n) {
            const gkw::MinimizationProblem problem = gkw::make_problem(p, mu, std::nullopt, n);
            const gkw::GroundStateResult r = gkw::minimize(problem);
            return py::dict("alpha"_a = r.alpha, "i_value"_a = r.i_value, "iterations"_a = r.iterations,
                            "psi"_a = array(r.psi), "phi"_a = array(r.phi),
                            "x"_a = array(problem.grid.coordinates()),
                            "k_p"_a = gkw::functionals(r.psi, mu, p).k_p, "beta"_a = problem.beta_target,
                            "euler_lagrange_residual"_a = r.euler_lagrange_residual);
        },
        "p"_a, "mu"_a, "num_points"_a = 1024);

    m.def(
        "conserved",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& u, double half_length, double p,
           double c, double mu) {
            const gkw::ConservedQuantities q = gkw::conserved(field_from(u, half_length), {p, c, mu});
            return py::make_tuple(q.energy, q.mass);
        },
        "u"_a, "half_length"_a, "p"_a, "c"_a = 1.0, "mu"_a = 1.0, "(E, V) of samples on [-L, L).");

    m.def(
        "orbital_distance",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& u,
           const py::array_t<double, py::array::c_style | py::array::forcecast>& phi, double half_length) {
            const gkw::OrbitalDistance d =
                gkw::orbital_distance(field_from(u, half_length), field_from(phi, half_length));
            return py::make_tuple(d.distance, d.shift);
        },
        "u"_a, "phi"_a, "half_length"_a);

    m.def(
        "evolve",
        [](int p, const std::string& branch, double param, double delta, double horizon, double dt,
           double sample_every, std::size_t n) {
            gkw::require(branch == "explicit" || branch == "slow", "branch must be 'explicit' or 'slow'");
            gkw::ExperimentConfig cfg;
            cfg.p = p;
            cfg.branch = branch == "slow" ? gkw::BranchKind::slow_family : gkw::BranchKind::explicit_family;
            cfg.param = param;
            cfg.delta = delta;
            cfg.horizon = horizon;
            cfg.dt = dt;
            cfg.sample_every = sample_every;
            cfg.num_points = n;
            gkw::StabilityTrace t;
            {
                py::gil_scoped_release release;
                t = gkw::stability_experiment(cfg);
            }
            return py::dict("times"_a = array(t.times), "orbital_distances"_a = array(t.orbital_distances),
                            "best_shifts"_a = array(t.best_shifts), "energies"_a = array(t.energies),
                            "masses"_a = array(t.masses), "energy_drift"_a = t.energy_drift,
                            "mass_drift"_a = t.mass_drift, "sup_distance"_a = t.sup_distance,
                            "measured_speed"_a = t.measured_speed, "aborted"_a = t.aborted,
                            "params"_a = params_dict(t.params));
        },
        "p"_a, "branch"_a = "explicit", "param"_a = 0.0, "delta"_a = 1e-3, "horizon"_a = 10.0, "dt"_a = 2e-3,
        "sample_every"_a = 0.5, "num_points"_a = 512);

    m.def(
        "reproduce",
        [](const std::vector<int>& criteria) {
            gkw::ReproduceOptions opts;
            if (!criteria.empty()) opts.criteria = {criteria.begin(), criteria.end()};
            std::vector<gkw::ReproductionReport> rows;
            {
                py::gil_scoped_release release;
                rows = gkw::reproduce_all(opts);
            }
            py::list out;
            for (const auto& r : rows)
                out.append(py::dict("item"_a = r.item, "criterion"_a = r.criterion, "paper_value"_a = r.paper_value,
                                    "computed_value"_a = r.computed_value, "tolerance"_a = r.tolerance,
                                    "pass"_a = r.pass, "detail"_a = r.detail));
            return out;
        },
        "criteria"_a = std::vector<int>{});
}
