#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "selberg/analysis_io.hpp"
#include "selberg/argument.hpp"
#include "selberg/cli.hpp"
#include "selberg/curve_solver.hpp"
#include "selberg/errors.hpp"
#include "selberg/fourier.hpp"
#include "selberg/gamma04.hpp"
#include "selberg/scattering.hpp"
#include "selberg/special_functions.hpp"
#include "selberg/toy_models.hpp"

namespace py = pybind11;
using namespace selberg;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Scattering resonances of Gamma0(4) with a character: leading-order model";

    static py::exception<Error> base(m, "SelbergError", PyExc_RuntimeError);
    static py::exception<PoleAt> pole(m, "PoleAt", base.ptr());
    static py::exception<SingularAt> singular(m, "SingularAt", base.ptr());
    static py::exception<ResonanceHit> hit(m, "ResonanceHit", singular.ptr());
    static py::exception<NotContracting> contracting(m, "NotContracting", base.ptr());
    static py::exception<ConfigError> config(m, "ConfigError", base.ptr());
    static py::exception<ParseError> parse(m, "ParseError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ResonanceHit& e) {
            hit(e.what());
        } catch (const SingularAt& e) {
            singular(e.what());
        } catch (const PoleAt& e) {
            pole(e.what());
        } catch (const NotContracting& e) {
            contracting(e.what());
        } catch (const ConfigError& e) {
            config(e.what());
        } catch (const ParseError& e) {
            parse(e.what());
        } catch (const Error& e) {
            base(e.what());
        }
    });

    m.def("gamma", &complex_gamma, py::arg("z"));
    m.def("log_gamma", &log_gamma, py::arg("z"));
    m.def("zeta", [](Complex s) { return zeta(s); }, py::arg("s"));
    m.def("lambda_completed", [](Complex s) { return lambda_completed(s); }, py::arg("s"));

    m.def("s0", [](Complex beta) { return s0(beta); }, py::arg("beta"), "3x3 scattering matrix, cusp order (0, inf, -1/2)");
    m.def("c_plus", [](Complex beta) { return c_plus(beta); }, py::arg("beta"));
    m.def("c_minus", [](Complex beta) { return c_minus(beta); }, py::arg("beta"));
    m.def("y_plus", [](Complex beta) { return y_plus(beta); }, py::arg("beta"));
    m.def("y_minus", [](Complex beta) { return y_minus(beta); }, py::arg("beta"));
    m.def("d00_model", [](double alpha, Complex beta) { return d00_model(alpha, beta); }, py::arg("alpha"), py::arg("beta"));

    m.def("omega_row", &omega_row, py::arg("a"), py::arg("b"));
    m.def("phi_minus", [](double t) { return phi_minus(t); }, py::arg("t"));
    m.def("m_of", &m_of, py::arg("t"));

    m.def("solve_tau_k", &solve_tau_k, py::arg("alpha"), py::arg("k"));
    m.def("solve_a_k", &solve_a_k, py::arg("t"), py::arg("k"));

    py::class_<ResonanceSolution>(m, "ResonanceSolution")
        .def_readonly("alpha", &ResonanceSolution::alpha)
        .def_readonly("sigma", &ResonanceSolution::sigma)
        .def_readonly("t", &ResonanceSolution::t)
        .def_readonly("k", &ResonanceSolution::k)
        .def_readonly("iterations", &ResonanceSolution::iterations)
        .def_readonly("contraction_ratio", &ResonanceSolution::contraction_ratio)
        .def("__repr__", [](const ResonanceSolution& r) {
            std::ostringstream ss;
            ss.precision(17);
            ss << "ResonanceSolution(k=" << r.k << ", alpha=" << r.alpha << ", sigma=" << r.sigma << ", t=" << r.t << ")";
            return ss.str();
        });
    m.def("solve_resonance", [](double t, int k) { return solve_resonance(t, k); }, py::arg("t"), py::arg("k"));
    m.def("solve_resonance_at_alpha", [](double alpha, int k) { return solve_resonance_at_alpha(alpha, k); },
          py::arg("alpha"), py::arg("k"));

    m.def(
        "asymptotic",
        [](const std::string& name, double alpha, double t, int k, double eta2, int ell) {
            AsymptoticArgs a;
            a.alpha = alpha;
            a.t = t;
            a.k = k;
            a.eta2 = eta2;
            a.ell = ell;
            return asymptotic_eval(parse_theorem_id(name), a);
        },
        py::arg("name"), py::kw_only(), py::arg("alpha") = 0.0, py::arg("t") = 0.0, py::arg("k") = 1,
        py::arg("eta2") = 0.0, py::arg("ell") = 1);
    m.def("formula_names", [] {
        std::vector<std::string> out;
        for (TheoremId id : all_theorems()) out.push_back(theorem_name(id));
        return out;
    });
    m.def(
        "k_diagnostics",
        [](double alpha, Complex beta) {
            const KDiagnostics d = k_diagnostics(alpha, beta);
            return py::make_tuple(d.k1, d.k2, d.k3);
        },
        py::arg("alpha"), py::arg("beta"));

    m.def(
        "phi_series",
        [](double alpha, Complex beta, int c_max) {
            const TruncationReport r = phi_series(alpha, beta, c_max);
            return py::make_tuple(r.partial_sum, r.tail_bound);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("c_max") = 2000, "returns (partial_sum, tail_bound)");
    m.def("phi_closed_form_alpha0", &phi_closed_form_alpha0, py::arg("beta"));

    m.def("project_kI", [](const std::vector<double>& v) { return project_kI(v); }, py::arg("values"));
    m.def(
        "fit_limit",
        [](const std::vector<double>& alphas, const std::vector<double>& values, int n_terms) {
            if (alphas.size() != values.size()) throw EmptyInput("alphas and values differ in length");
            std::vector<FitSample> s;
            for (std::size_t i = 0; i < alphas.size(); ++i) s.push_back({alphas[i], values[i]});
            return fit_limit(s, n_terms).coefficients;
        },
        py::arg("alphas"), py::arg("values"), py::arg("n_terms") = 6);

    m.def(
        "avoided_crossing_slope",
        [](double t0, Complex p2, int k) {
            const AvoidedCrossingResult r = avoided_crossing_slope(AvoidedCrossingModel(t0, p2), k);
            return py::make_tuple(r.alpha_k, r.slope, r.predicted_slope);
        },
        py::arg("t0"), py::arg("p2"), py::arg("k"), "returns (alpha_k, slope, predicted_slope)");
    m.def(
        "loop_touchings",
        [](double t0, double rinf2_imag, double radius, Complex p2, double phase, const std::vector<int>& ks) {
            return loop_touchings(LoopModel::tangent_circle(t0, rinf2_imag, radius, p2, phase), ks);
        },
        py::arg("t0"), py::arg("rinf2_imag"), py::arg("radius"), py::arg("p2"), py::arg("phase"), py::arg("ks"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "returns (exit_code, stdout, stderr)");
}
