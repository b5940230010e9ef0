#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "carnot/algebra.hpp"
#include "carnot/derivations.hpp"
#include "carnot/metric.hpp"
#include "carnot/prolong.hpp"
#include "carnot/structure.hpp"

namespace carnot {

inline constexpr const char* kReportSchema = "carnot-report/1";
inline constexpr const char* kAlgebraSchema = "carnot-algebra/1";

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NamedAlgebra {
  std::string name;
  StratifiedAlgebra algebra;
};

/// Algebra file format: {"name": ..., "layers": [d1..ds], "brackets":
/// [{"left": [j,i], "right": [j,i], "value": [{"basis": [j,i], "coeff":
/// "p/q"}]}]}. Indices are 1-based, (layer, position). Omitted pairs are
/// zero; rational coefficients are strings, never floats.
NamedAlgebra parse_algebra_json(const nlohmann::json& j);
NamedAlgebra load_algebra_file(const std::string& path);
nlohmann::json algebra_to_json(const std::string& name, const StratifiedAlgebra& alg);

nlohmann::json validation_report_json(const std::string& name, const ValidationReport& rep);
nlohmann::json metric_report_json(const std::string& name, const StratifiedAlgebra& alg,
                                  const InnerProductAssignment& m);
nlohmann::json derivations_report_json(const std::string& name,
                                       const StratifiedAlgebra& alg,
                                       const DerivationSpace& sp);
nlohmann::json prolongation_report_json(const std::string& name, const std::string& g0,
                                        const Prolongation& p);
nlohmann::json classification_report_json(const std::string& name,
                                          const ClassificationReport& rep);

}  // namespace carnot
