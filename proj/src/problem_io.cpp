#include "cecoh/problem_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace cecoh {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) {
    throw InputError(std::string(what) + ": expected a nonempty array of rows");
  }
  const size_t n = j.size();
  ComplexMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != n) {
      throw InputError(std::string(what) + ": matrix is not square");
    }
    for (size_t k = 0; k < n; ++k) {
      const json& e = row[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw InputError(std::string(what) +
                         ": complex entries must be two-element arrays [re, im]");
      }
      m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

namespace {

void apply_tolerances(const json& j, Tolerances& tol) {
  if (j.contains("hermiticity")) tol.hermiticity = j["hermiticity"].get<double>();
  if (j.contains("commute")) tol.commute = j["commute"].get<double>();
  if (j.contains("cluster")) tol.cluster = j["cluster"].get<double>();
  if (j.contains("rank")) tol.rank = j["rank"].get<double>();
  if (j.contains("first_order")) tol.first_order = j["first_order"].get<double>();
  if (j.contains("obstruction")) tol.obstruction = j["obstruction"].get<double>();
  if (j.contains("feasibility_max_dim")) {
    tol.feasibility_max_dim = j["feasibility_max_dim"].get<int>();
  }
}

json tolerances_to_json(const Tolerances& tol) {
  return json{{"hermiticity", tol.hermiticity},
              {"commute", tol.commute},
              {"cluster", tol.cluster},
              {"rank", tol.rank},
              {"first_order", tol.first_order},
              {"obstruction", tol.obstruction},
              {"feasibility_max_dim", tol.feasibility_max_dim}};
}

}  // namespace

ProblemFile parse_problem(const json& root) {
  const json& j = root.contains("problem") ? root["problem"] : root;
  ProblemFile pf;
  if (!j.is_object()) throw InputError("problem: expected a JSON object");
  if (j.contains("schema_version")) {
    pf.schema_version = j["schema_version"].get<std::string>();
    if (pf.schema_version != "1") {
      throw InputError("problem: unsupported schema_version '" + pf.schema_version + "'");
    }
  }
  if (!j.contains("H") || !j.contains("S")) {
    throw InputError("problem: fields H and S are required");
  }
  pf.H = matrix_from_json(j["H"], "H");
  pf.S = matrix_from_json(j["S"], "S");
  pf.dim = static_cast<int>(pf.H.rows());
  if (j.contains("dim") && j["dim"].get<int>() != pf.dim) {
    throw InputError("problem: declared dim disagrees with the matrices");
  }
  if (pf.S.rows() != pf.dim) throw InputError("problem: H and S differ in dimension");
  if (j.contains("delta_H1")) {
    pf.delta_H1 = matrix_from_json(j["delta_H1"], "delta_H1");
    if (pf.delta_H1->rows() != pf.dim) throw InputError("problem: delta_H1 dimension mismatch");
  }
  if (j.contains("delta_S1")) {
    pf.delta_S1 = matrix_from_json(j["delta_S1"], "delta_S1");
    if (pf.delta_S1->rows() != pf.dim) throw InputError("problem: delta_S1 dimension mismatch");
  }
  if (j.contains("tolerances")) apply_tolerances(j["tolerances"], pf.tolerances);
  return pf;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(std::string("JSON parse failure: ") + e.what());
  }
  return parse_problem(j);
}

json problem_to_json(const ProblemFile& pf) {
  json j{{"schema_version", pf.schema_version},
         {"dim", pf.dim},
         {"H", matrix_to_json(pf.H)},
         {"S", matrix_to_json(pf.S)},
         {"tolerances", tolerances_to_json(pf.tolerances)}};
  if (pf.delta_H1) j["delta_H1"] = matrix_to_json(*pf.delta_H1);
  if (pf.delta_S1) j["delta_S1"] = matrix_to_json(*pf.delta_S1);
  return j;
}

namespace {

json report_shell(const char* command, const ProblemFile* pf, std::optional<long> seed) {
  json j{{"schema_version", "1"}, {"command", command}};
  if (pf) {
    j["problem"] = problem_to_json(*pf);
    j["effective_tolerances"] = tolerances_to_json(pf->tolerances);
  }
  if (seed) j["seed"] = *seed;
  return j;
}

json spectrum_to_json(const JointSpectrum& sp) {
  json sectors = json::array();
  for (const auto& s : sp.sectors) {
    sectors.push_back(json{{"lambda", s.lambda},
                           {"mu", s.mu},
                           {"multiplicity", s.multiplicity}});
  }
  return json{{"cluster_tol", sp.cluster_tol},
              {"dim", sp.dim},
              {"commutant_dim", sp.commutant_dim()},
              {"sectors", std::move(sectors)}};
}

json dims_to_json(const CohomologyReport& rep) {
  return json{{"h0", rep.dims[0]}, {"h1", rep.dims[1]}, {"h2", rep.dims[2]},
              {"commutant_dim", rep.commutant.size()}};
}

SymmetryPair pair_of(const ProblemFile& pf) {
  return SymmetryPair(pf.H, pf.S, pf.tolerances);
}

}  // namespace

json spectrum_report_json(const ProblemFile& pf, std::optional<long> seed) {
  json rep = report_shell("spectrum", &pf, seed);
  const SymmetryPair pair = pair_of(pf);
  rep["spectrum"] = spectrum_to_json(joint_diagonalize(pair, pf.tolerances.cluster));
  return rep;
}

json cohomology_report_json(const ProblemFile& pf, const std::string& method,
                            std::optional<long> seed) {
  if (method != "theorem" && method != "brute" && method != "both") {
    throw InputError("cohomology: method must be theorem, brute or both");
  }
  json rep = report_shell("cohomology", &pf, seed);
  const SymmetryPair pair = pair_of(pf);
  rep["method"] = method;
  std::optional<std::array<int, 3>> via_theorem, via_brute;
  if (method != "brute") {
    const JointSpectrum sp = joint_diagonalize(pair, pf.tolerances.cluster);
    const CohomologyReport r = cohomology_theorem(sp);
    via_theorem = r.dims;
    rep["spectrum"] = spectrum_to_json(sp);
    rep["theorem"] = dims_to_json(r);
  }
  if (method != "theorem") {
    const CohomologyReport r = cohomology_bruteforce(pair);
    via_brute = r.dims;
    rep["brute_force"] = dims_to_json(r);
  }
  if (via_theorem && via_brute) {
    rep["agree"] = (*via_theorem == *via_brute);
    if (*via_theorem != *via_brute) {
      throw NumericalError("cohomology: theorem and brute-force dimensions disagree");
    }
  }
  return rep;
}

json anomaly_report_json(const ProblemFile& pf, int order, std::optional<long> seed) {
  if (!pf.delta_H1) throw InputError("anomaly: field delta_H1 is required");
  json rep = report_shell("anomaly", &pf, seed);
  const DeformationProblem prob(pair_of(pf), *pf.delta_H1, pf.delta_S1);
  const AnomalyReport ar = anomaly_report(prob);

  rep["spectrum"] = spectrum_to_json(ar.spectrum);
  rep["cohomology"] = json{{"theorem", dims_to_json(ar.coh_theorem)},
                           {"brute_force", dims_to_json(ar.coh_brute)},
                           {"agree", ar.coh_theorem.dims == ar.coh_brute.dims}};
  rep["nondegenerate"] = ar.nondegenerate;

  json fo{{"solvable", ar.first_order.solvable},
          {"supplied", ar.first_order.supplied}};
  if (ar.first_order.solvable) {
    fo["delta_S1"] = matrix_to_json(ar.first_order.delta_s1);
    fo["residual"] = ar.first_order.residual;
  } else {
    json v = json::array();
    for (const auto& bv : ar.first_order.violations) {
      v.push_back(json{{"first", bv.first}, {"second", bv.second}, {"norm", bv.norm}});
    }
    fo["violations"] = std::move(v);
  }
  rep["first_order"] = std::move(fo);
  rep["anomaly"] = ar.anomaly;

  if (ar.obstruction) {
    const ObstructionClass& oc = *ar.obstruction;
    json oj{{"norm", oc.norm},
            {"gate", ar.obstruction_gate},
            {"anti_hermitian", matrix_to_json(oc.representative)},
            {"observable", matrix_to_json(oc.observable)},
            {"coefficients", oc.coefficients}};
    if (oc.feasibility_residual) oj["feasibility_residual"] = *oc.feasibility_residual;
    rep["obstruction"] = std::move(oj);
  }

  if (ar.first_order.solvable && !ar.anomaly && order >= 2) {
    const ContinuationResult cont = continue_series(prob, order);
    if (cont.obstructed) {
      rep["series"] = json{{"obstructed_at", cont.obstructed_order},
                           {"class_norm", cont.obstruction->norm}};
    } else {
      const DeformationSeries& s = *cont.series;
      json hc = json::array(), sc = json::array(), profile = json::array();
      for (const auto& m : s.h_coeffs) hc.push_back(matrix_to_json(m));
      for (const auto& m : s.s_coeffs) sc.push_back(matrix_to_json(m));
      for (const auto& [t, r] : s.residual_profile) {
        profile.push_back(json::array({t, r}));
      }
      json sj{{"order", s.order},
              {"gauge", s.gauge},
              {"h_coeffs", std::move(hc)},
              {"s_coeffs", std::move(sc)},
              {"residual_profile", std::move(profile)},
              {"profile_exact", s.profile_exact}};
      if (!s.profile_exact) sj["fitted_slope"] = s.fitted_slope;
      rep["series"] = std::move(sj);
    }
  }
  return rep;
}

json verma_report_json(const std::string& lambda, int degree, std::optional<long> seed) {
  Rational lam;
  try {
    lam = Rational(lambda);
  } catch (const std::exception&) {
    throw InputError("verma-check: cannot parse --lambda, expected P or P/Q");
  }
  if (degree < 4) throw InputError("verma-check: --degree must be at least 4");

  json rep = report_shell("verma-check", nullptr, seed);
  rep["lambda"] = lambda;
  rep["degree"] = degree;

  const VermaOperators ops = verma_operators(lam, degree);
  json rels = json::array();
  for (const auto& rc : check_sl2_relations(ops)) {
    rels.push_back(json{{"relation", rc.name},
                        {"exact_through_degree_n_minus_2", rc.exact_through(degree - 2)},
                        {"max_violation", rc.max_abs_violation.str()}});
  }
  rep["relations"] = std::move(rels);

  const CocycleCheck cc = check_deformation_cocycle(lam, degree);
  json comps = json::array();
  for (const auto& rc : cc.components) {
    comps.push_back(json{{"slot", rc.name},
                         {"exact_through_verified_degree", rc.exact_through(cc.verified_degree)},
                         {"max_violation", rc.max_abs_violation.str()}});
  }
  rep["cocycle"] = json{{"passed", cc.passed},
                        {"verified_degree", cc.verified_degree},
                        {"components", std::move(comps)}};
  if (!cc.passed) {
    throw NumericalError("verma-check: the deformation cocycle identity failed");
  }
  return rep;
}

namespace {

void render_spectrum_block(std::ostream& os, const json& sp) {
  os << "sectors (lambda, mu, multiplicity), cluster_tol = "
     << sp["cluster_tol"].get<double>() << "\n";
  for (const auto& s : sp["sectors"]) {
    os << "  " << s["lambda"].get<double>() << "  " << s["mu"].get<double>() << "  "
       << s["multiplicity"].get<int>() << "\n";
  }
  os << "commutant dimension |Z| = " << sp["commutant_dim"].get<int>() << "\n";
}

}  // namespace

std::string render_text(const json& rep) {
  std::ostringstream os;
  const std::string cmd = rep["command"].get<std::string>();
  os << "command: " << cmd << "\n";
  if (cmd == "spectrum") {
    render_spectrum_block(os, rep["spectrum"]);
  } else if (cmd == "cohomology") {
    if (rep.contains("theorem")) {
      const auto& t = rep["theorem"];
      os << "theorem:     (h0, h1, h2) = (" << t["h0"].get<int>() << ", "
         << t["h1"].get<int>() << ", " << t["h2"].get<int>() << ")\n";
    }
    if (rep.contains("brute_force")) {
      const auto& b = rep["brute_force"];
      os << "brute force: (h0, h1, h2) = (" << b["h0"].get<int>() << ", "
         << b["h1"].get<int>() << ", " << b["h2"].get<int>() << ")\n";
    }
    if (rep.contains("agree")) {
      os << "methods agree: " << (rep["agree"].get<bool>() ? "yes" : "no") << "\n";
    }
  } else if (cmd == "anomaly") {
    render_spectrum_block(os, rep["spectrum"]);
    const auto& fo = rep["first_order"];
    if (!fo["solvable"].get<bool>()) {
      os << "first order: OBSTRUCTED (symmetry broken at first order)\n";
      for (const auto& v : fo["violations"]) {
        os << "  block (" << v["first"].get<int>() << ", " << v["second"].get<int>()
           << ") norm " << v["norm"].get<double>() << "\n";
      }
    } else {
      os << "first order: solved, cocycle residual " << fo["residual"].get<double>()
         << (fo["supplied"].get<bool>() ? " (delta_S1 supplied)" : "") << "\n";
      const auto& oc = rep["obstruction"];
      os << "second-order class norm " << oc["norm"].get<double>() << " (gate "
         << oc["gate"].get<double>() << ")\n";
      if (oc.contains("feasibility_residual")) {
        os << "least-squares feasibility residual "
           << oc["feasibility_residual"].get<double>() << "\n";
      }
      os << "anomaly: " << (rep["anomaly"].get<bool>() ? "yes" : "no") << "\n";
      if (rep.contains("series")) {
        const auto& s = rep["series"];
        if (s.contains("obstructed_at")) {
          os << "series: obstructed at order " << s["obstructed_at"].get<int>()
             << ", class norm " << s["class_norm"].get<double>() << "\n";
        } else {
          os << "series continued to order " << s["order"].get<int>() << "\n";
          if (s["profile_exact"].get<bool>()) {
            os << "residual profile: exact (commutator vanishes to rounding)\n";
          } else {
            os << "residual profile log-log slope " << s["fitted_slope"].get<double>()
               << "\n";
          }
        }
      }
    }
  } else if (cmd == "verma-check") {
    os << "lambda = " << rep["lambda"].get<std::string>() << ", truncation degree "
       << rep["degree"].get<int>() << "\n";
    for (const auto& r : rep["relations"]) {
      os << "  " << r["relation"].get<std::string>() << ": exact through degree N-2: "
         << (r["exact_through_degree_n_minus_2"].get<bool>() ? "yes" : "NO") << "\n";
    }
    const auto& cc = rep["cocycle"];
    os << "cocycle identity on degrees <= " << cc["verified_degree"].get<int>() << ": "
       << (cc["passed"].get<bool>() ? "exact" : "FAILED") << "\n";
  }
  return os.str();
}

}  // namespace cecoh
