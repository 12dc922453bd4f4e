// Python bindings for the core pipeline.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cecoh/problem_io.hpp"

namespace py = pybind11;
using namespace cecoh;

namespace {

SymmetryPair make_pair(const ComplexMatrix& H, const ComplexMatrix& S) {
  return SymmetryPair(H, S);
}

py::dict spectrum_dict(const JointSpectrum& sp) {
  py::list sectors;
  for (const auto& s : sp.sectors) {
    py::dict d;
    d["lambda"] = s.lambda;
    d["mu"] = s.mu;
    d["multiplicity"] = s.multiplicity;
    d["projector"] = s.projector;
    sectors.append(std::move(d));
  }
  py::dict out;
  out["cluster_tol"] = sp.cluster_tol;
  out["dim"] = sp.dim;
  out["commutant_dim"] = sp.commutant_dim();
  out["sectors"] = std::move(sectors);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chevalley-Eilenberg cohomology and perturbative anomalies of "
            "commuting Hermitian pairs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<NotExactError>(m, "NotExactError", PyExc_ArithmeticError);
  py::register_exception<SpectrumError>(m, "SpectrumError", PyExc_ArithmeticError);

  m.def("joint_spectrum",
        [](const ComplexMatrix& H, const ComplexMatrix& S, double cluster_tol) {
          return spectrum_dict(joint_diagonalize(make_pair(H, S), cluster_tol));
        },
        py::arg("H"), py::arg("S"), py::arg("cluster_tol") = -1.0,
        "sector table (lambda, mu, multiplicity, projector) of a commuting pair");

  m.def("commutant",
        [](const ComplexMatrix& H, const ComplexMatrix& S) {
          const auto sp = joint_diagonalize(make_pair(H, S), -1.0);
          const auto cb = commutant_basis(sp);
          std::vector<ComplexMatrix> out;
          out.reserve(cb.basis.size());
          for (const auto& e : cb.basis) out.push_back(e.inner);
          return out;
        },
        py::arg("H"), py::arg("S"),
        "orthonormal basis of Z = {A in u(V) : [H,A] = [S,A] = 0}");

  m.def("cohomology",
        [](const ComplexMatrix& H, const ComplexMatrix& S, const std::string& method) {
          const SymmetryPair pair = make_pair(H, S);
          CohomologyReport rep;
          if (method == "theorem") {
            rep = cohomology_theorem(joint_diagonalize(pair, -1.0));
          } else if (method == "brute") {
            rep = cohomology_bruteforce(pair);
          } else {
            throw InputError("cohomology: method must be 'theorem' or 'brute'");
          }
          return py::make_tuple(rep.dims[0], rep.dims[1], rep.dims[2]);
        },
        py::arg("H"), py::arg("S"), py::arg("method") = "theorem",
        "(h0, h1, h2) real cohomology dimensions");

  m.def("solve_first_order",
        [](const ComplexMatrix& H, const ComplexMatrix& S, const ComplexMatrix& dH1) {
          const auto res = solve_first_order(DeformationProblem(make_pair(H, S), dH1));
          if (!res.solvable) {
            throw py::value_error("symmetry broken at first order");
          }
          return res.delta_s1;
        },
        py::arg("H"), py::arg("S"), py::arg("delta_H1"),
        "first-order symmetry correction delta_S1 in the diagonal-free gauge");

  m.def("obstruction",
        [](const ComplexMatrix& H, const ComplexMatrix& S, const ComplexMatrix& dH1,
           std::optional<ComplexMatrix> dS1) {
          const DeformationProblem prob(make_pair(H, S), dH1, dS1);
          const auto fo = solve_first_order(prob);
          if (!fo.solvable) {
            throw py::value_error("symmetry broken at first order");
          }
          const auto oc = obstruction_second_order(prob, fo.delta_s1);
          py::dict d;
          d["norm"] = oc.norm;
          d["anti_hermitian"] = oc.representative;
          d["observable"] = oc.observable;
          d["coefficients"] = oc.coefficients;
          if (oc.feasibility_residual) d["feasibility_residual"] = *oc.feasibility_residual;
          return d;
        },
        py::arg("H"), py::arg("S"), py::arg("delta_H1"),
        py::arg("delta_S1") = std::nullopt,
        "second-order obstruction class projected on the commutant");

  m.def("continue_series",
        [](const ComplexMatrix& H, const ComplexMatrix& S, const ComplexMatrix& dH1,
           std::optional<ComplexMatrix> dS1, int order) {
          const DeformationProblem prob(make_pair(H, S), dH1, dS1);
          const auto res = continue_series(prob, order);
          py::dict d;
          d["obstructed"] = res.obstructed;
          if (res.obstructed) {
            d["obstructed_order"] = res.obstructed_order;
            d["class_norm"] = res.obstruction->norm;
          } else {
            d["h_coeffs"] = res.series->h_coeffs;
            d["s_coeffs"] = res.series->s_coeffs;
            d["residual_profile"] = res.series->residual_profile;
            d["profile_exact"] = res.series->profile_exact;
            if (!res.series->profile_exact) d["fitted_slope"] = res.series->fitted_slope;
          }
          return d;
        },
        py::arg("H"), py::arg("S"), py::arg("delta_H1"),
        py::arg("delta_S1") = std::nullopt, py::arg("order") = 6,
        "order-by-order continuation of the symmetry-restoring curve");

  m.def("anomaly_report_json",
        [](const std::string& problem_json, int order) {
          nlohmann::json j;
          try {
            j = nlohmann::json::parse(problem_json);
          } catch (const std::exception& e) {
            throw InputError(std::string("JSON parse failure: ") + e.what());
          }
          return anomaly_report_json(parse_problem(j), order).dump(2);
        },
        py::arg("problem_json"), py::arg("order") = 6,
        "full pipeline on a ProblemFile JSON string; returns the report as JSON");

  m.def("verma_check_json",
        [](const std::string& lambda, int degree) {
          return verma_report_json(lambda, degree).dump(2);
        },
        py::arg("lambda"), py::arg("degree") = 8,
        "exact sl2 relation and cocycle verification; returns the report as JSON");
}
