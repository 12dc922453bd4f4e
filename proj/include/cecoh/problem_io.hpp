// ProblemFile schema (JSON, complex entries as [re, im]) and report builders
// shared by the command-line tool and the python bindings.
#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "cecoh/deformation.hpp"
#include "cecoh/verma.hpp"

namespace cecoh {

struct ProblemFile {
  std::string schema_version = "1";
  int dim = 0;
  ComplexMatrix H, S;
  std::optional<ComplexMatrix> delta_H1, delta_S1;
  Tolerances tolerances;
};

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, const char* what);

// accepts either a bare ProblemFile or a report carrying one under "problem"
ProblemFile parse_problem(const nlohmann::json& j);
ProblemFile load_problem(const std::string& path);
nlohmann::json problem_to_json(const ProblemFile& pf);

// report builders; seed is echoed verbatim when present (reserved for
// randomized self-tests, no current consumer)
nlohmann::json spectrum_report_json(const ProblemFile& pf,
                                    std::optional<long> seed = std::nullopt);
nlohmann::json cohomology_report_json(const ProblemFile& pf, const std::string& method,
                                      std::optional<long> seed = std::nullopt);
nlohmann::json anomaly_report_json(const ProblemFile& pf, int order,
                                   std::optional<long> seed = std::nullopt);
nlohmann::json verma_report_json(const std::string& lambda, int degree,
                                 std::optional<long> seed = std::nullopt);

std::string render_text(const nlohmann::json& report);

}  // namespace cecoh
