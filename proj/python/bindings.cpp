#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "loggas/dyson.hpp"
#include "loggas/electrostatics.hpp"
#include "loggas/ensembles.hpp"
#include "loggas/orthopoly.hpp"
#include "loggas/qhj.hpp"

namespace py = pybind11;
using namespace loggas;

namespace {

PotentialSpec potential_from_kwargs(const std::string& name,
                                    const std::map<std::string, double>& params) {
  return make_potential(potential_name_from_string(name), params);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "log-gas electrostatics, QHJ quantization, Gaussian ensembles";

  py::register_exception<ParameterError>(m, "ParameterError",
                                         PyExc_ValueError);
  py::register_exception<SingularConfigError>(m, "SingularConfigError",
                                              PyExc_ValueError);
  py::register_exception<QuantizationError>(m, "QuantizationError",
                                            PyExc_RuntimeError);

  py::class_<Interval>(m, "Interval")
      .def_readonly("lo", &Interval::lo)
      .def_readonly("hi", &Interval::hi)
      .def("contains", &Interval::contains);

  py::class_<PotentialSpec>(m, "Potential")
      .def(py::init(&potential_from_kwargs), py::arg("name"),
           py::arg("params") = std::map<std::string, double>{})
      .def_property_readonly("name",
                             [](const PotentialSpec& p) {
                               return to_string(p.name());
                             })
      .def_property_readonly("params", &PotentialSpec::params)
      .def_property_readonly("domain", &PotentialSpec::domain)
      .def_property_readonly("factorization_energy",
                             &PotentialSpec::factorization_energy)
      .def("V", py::overload_cast<double>(&PotentialSpec::V, py::const_))
      .def("Vp", &PotentialSpec::Vp)
      .def("W", py::overload_cast<double>(&PotentialSpec::W, py::const_))
      .def("Wp", &PotentialSpec::Wp)
      .def("Wint", &PotentialSpec::Wint)
      .def("to_json", &PotentialSpec::to_json)
      .def_static("from_json", &PotentialSpec::from_json);

  m.def("hermite_roots", [](int n) {
    return roots(PolynomialFamily::hermite(n), n);
  });
  m.def("laguerre_roots", [](double a, int n) {
    return roots(PolynomialFamily::laguerre(a, n), n);
  });
  m.def("jacobi_roots", [](double a, double b, int n) {
    return roots(PolynomialFamily::jacobi(a, b, n), n);
  });

  py::class_<ExceptionalSolution>(m, "ExceptionalSolution")
      .def_readonly("g", &ExceptionalSolution::g)
      .def_readonly("degree", &ExceptionalSolution::degree)
      .def_readonly("energy", &ExceptionalSolution::energy)
      .def_readonly("coeffs", &ExceptionalSolution::coeffs)
      .def_readonly("norm", &ExceptionalSolution::norm)
      .def("polynomial", &ExceptionalSolution::polynomial)
      .def("psi", &ExceptionalSolution::psi);
  m.def("solve_exceptional", &solve_exceptional, py::arg("g"), py::arg("n"));

  m.def(
      "equilibrium",
      [](int n, const PotentialSpec& p) {
        return equilibrium(n, p).positions;
      },
      py::arg("n"), py::arg("potential"));
  m.def(
      "gas_energy",
      [](const std::vector<double>& x, const PotentialSpec& p) {
        ChargeConfiguration c;
        c.positions = x;
        c.potential = p;
        return energy(c);
      },
      py::arg("positions"), py::arg("potential"));
  m.def(
      "gas_gradient",
      [](const std::vector<double>& x, const PotentialSpec& p) {
        ChargeConfiguration c;
        c.positions = x;
        c.potential = p;
        return gradient(c);
      },
      py::arg("positions"), py::arg("potential"));
  m.def("stieltjes_identity_check", &stieltjes_identity_check);

  py::class_<BoundState>(m, "BoundState")
      .def_readonly("index", &BoundState::index)
      .def_readonly("energy", &BoundState::energy)
      .def_readonly("f_coeffs", &BoundState::f_coeffs)
      .def_readonly("nodes", &BoundState::nodes)
      .def("psi", &BoundState::psi);
  m.def("polynomial_spectrum", &polynomial_spectrum, py::arg("potential"),
        py::arg("n_max"));

  m.def(
      "sample_eigenvalues",
      [](int dim, int beta, std::uint64_t seed, std::uint64_t stream) {
        return sample_gaussian(dim, beta, seed, stream).eigenvalues;
      },
      py::arg("dim"), py::arg("beta"), py::arg("seed"),
      py::arg("stream") = 0);
  m.def(
      "joint_log_pdf",
      [](const std::vector<double>& x, int beta, const PotentialSpec& p) {
        return joint_log_pdf(x, beta, p);
      },
      py::arg("x"), py::arg("beta"), py::arg("potential"));
  m.def("product_wavefunction", &product_wavefunction, py::arg("x"),
        py::arg("potential"));

  m.def(
      "drift",
      [](const std::vector<double>& x, const PotentialSpec& p) {
        GasTrajectoryState s;
        s.positions = x;
        s.potential = p;
        return drift(s);
      },
      py::arg("positions"), py::arg("potential"));
  m.def(
      "evolve",
      [](std::vector<double> x, const PotentialSpec& p, int beta, double dt,
         int steps, std::uint64_t seed, double noise_scale) {
        GasTrajectoryState s;
        s.positions = std::move(x);
        s.beta = beta;
        s.potential = p;
        std::mt19937_64 rng(seed);
        for (int k = 0; k < steps; ++k) s = step(s, dt, rng, noise_scale);
        return s.positions;
      },
      py::arg("positions"), py::arg("potential"), py::arg("beta") = 1,
      py::arg("dt") = 0.005, py::arg("steps") = 1000, py::arg("seed") = 0,
      py::arg("noise_scale") = 1.0);
  m.def("ks_distance", &ks_distance);

  m.attr("__version__") = "0.1.0";
}
