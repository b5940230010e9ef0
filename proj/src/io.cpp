#include "carnot/io.hpp"

#include <fstream>

namespace carnot {

namespace {

using nlohmann::json;

// A positive integer, whether the value arrived as signed or unsigned.
bool positive_integer(const json& v) {
  return v.is_number_integer() && v.get<long long>() > 0;
}

// (layer, position), 1-based, to an ambient index.
std::size_t index_of(const std::vector<std::size_t>& layers, const json& pair,
                     const std::string& where) {
  if (!pair.is_array() || pair.size() != 2 || !positive_integer(pair[0]) ||
      !positive_integer(pair[1]))
    throw ParseError(where + ": expected a [layer, index] pair of positive integers");
  std::size_t j = pair[0].get<std::size_t>();
  std::size_t i = pair[1].get<std::size_t>();
  if (j < 1 || j > layers.size())
    throw ParseError(where + ": layer " + std::to_string(j) + " out of range");
  if (i < 1 || i > layers[j - 1])
    throw ParseError(where + ": index " + std::to_string(i) + " out of range in layer " +
                     std::to_string(j));
  std::size_t off = 0;
  for (std::size_t l = 1; l < j; ++l) off += layers[l - 1];
  return off + i - 1;
}

std::string basis_label(const StratifiedAlgebra& alg, std::size_t idx) {
  std::size_t j = alg.layer_of(idx);
  return "(" + std::to_string(j) + "," + std::to_string(idx - alg.layer_offset(j) + 1) + ")";
}

json rational_matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* issue_kind_name(ValidationIssue::Kind k) {
  using K = ValidationIssue::Kind;
  switch (k) {
    case K::Antisymmetry: return "antisymmetry";
    case K::Jacobi: return "jacobi";
    case K::Grading: return "grading";
    case K::Stratification: return "stratification";
    default: return "dimension";
  }
}

}  // namespace

NamedAlgebra parse_algebra_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("top level: expected an object");
  if (!j.contains("layers") || !j["layers"].is_array() || j["layers"].empty())
    throw ParseError("layers: expected a nonempty array of positive integers");
  std::vector<std::size_t> layers;
  for (const auto& d : j["layers"]) {
    if (!positive_integer(d))
      throw ParseError("layers: entries must be positive integers");
    layers.push_back(d.get<std::size_t>());
  }
  std::size_t dim = 0;
  for (auto d : layers) dim += d;

  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw ParseError("brackets: expected an array");
    std::size_t bn = 0;
    for (const auto& b : j["brackets"]) {
      std::string where = "brackets[" + std::to_string(bn++) + "]";
      if (!b.is_object() || !b.contains("left") || !b.contains("right") ||
          !b.contains("value"))
        throw ParseError(where + ": expected {left, right, value}");
      BracketEntry e;
      e.left = index_of(layers, b["left"], where + ".left");
      e.right = index_of(layers, b["right"], where + ".right");
      e.value.assign(dim, Rational(0));
      if (!b["value"].is_array()) throw ParseError(where + ".value: expected an array");
      for (const auto& term : b["value"]) {
        if (!term.is_object() || !term.contains("basis") || !term.contains("coeff") ||
            !term["coeff"].is_string())
          throw ParseError(where + ".value: expected {basis, coeff: \"p/q\"}");
        std::size_t idx = index_of(layers, term["basis"], where + ".value.basis");
        try {
          e.value[idx] += rational_from_string(term["coeff"].get<std::string>());
        } catch (const std::invalid_argument& ex) {
          throw ParseError(where + ".value.coeff: " + ex.what());
        }
      }
      entries.push_back(std::move(e));
    }
  }
  std::string name = j.contains("name") && j["name"].is_string()
                         ? j["name"].get<std::string>()
                         : std::string("unnamed");
  try {
    return {name, StratifiedAlgebra(layers, entries)};
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("brackets: ") + ex.what());
  }
}

NamedAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& ex) {
    throw ParseError(path + ": " + ex.what());
  }
  return parse_algebra_json(j);
}

nlohmann::json algebra_to_json(const std::string& name, const StratifiedAlgebra& alg) {
  json out;
  out["schema"] = kAlgebraSchema;
  out["name"] = name;
  out["layers"] = alg.layer_dims();
  json brackets = json::array();
  for (std::size_t a = 0; a < alg.dim(); ++a)
    for (std::size_t b = a + 1; b < alg.dim(); ++b) {
      const Vec& v = alg.basis_bracket(a, b);
      if (is_zero(v)) continue;
      json value = json::array();
      for (std::size_t m = 0; m < alg.dim(); ++m) {
        if (v[m] == 0) continue;
        std::size_t jm = alg.layer_of(m);
        value.push_back({{"basis", {jm, m - alg.layer_offset(jm) + 1}},
                         {"coeff", rational_to_string(v[m])}});
      }
      std::size_t ja = alg.layer_of(a), jb = alg.layer_of(b);
      brackets.push_back({{"left", {ja, a - alg.layer_offset(ja) + 1}},
                          {"right", {jb, b - alg.layer_offset(jb) + 1}},
                          {"value", std::move(value)}});
    }
  out["brackets"] = std::move(brackets);
  return out;
}

nlohmann::json validation_report_json(const std::string& name, const ValidationReport& rep) {
  json out;
  out["schema"] = kReportSchema;
  out["command"] = "validate";
  out["name"] = name;
  out["valid"] = rep.ok();
  json issues = json::array();
  for (const auto& issue : rep.issues)
    issues.push_back({{"kind", issue_kind_name(issue.kind)},
                      {"indices", issue.indices},
                      {"message", issue.message}});
  out["violations"] = std::move(issues);
  return out;
}

nlohmann::json metric_report_json(const std::string& name, const StratifiedAlgebra& alg,
                                  const InnerProductAssignment& m) {
  json out;
  out["schema"] = kReportSchema;
  out["command"] = "metric";
  out["name"] = name;
  out["layers"] = alg.layer_dims();
  json grams = json::array();
  for (const auto& g : m.grams) grams.push_back(rational_matrix_json(g.mat));
  out["grams"] = std::move(grams);
  return out;
}

nlohmann::json derivations_report_json(const std::string& name,
                                       const StratifiedAlgebra& alg,
                                       const DerivationSpace& sp) {
  json out;
  out["schema"] = kReportSchema;
  out["command"] = "derivations";
  out["name"] = name;
  switch (sp.kind) {
    case DerivationKind::StrataPreserving: out["kind"] = "der"; break;
    case DerivationKind::Isometric: out["kind"] = "iso"; break;
    case DerivationKind::Conformal: out["kind"] = "conf"; break;
  }
  out["dimension"] = sp.dim();
  json basis = json::array();
  for (const auto& d : sp.basis) basis.push_back(rational_matrix_json(d.ambient(alg)));
  out["basis"] = std::move(basis);
  return out;
}

nlohmann::json prolongation_report_json(const std::string& name, const std::string& g0,
                                        const Prolongation& p) {
  json out;
  out["schema"] = kReportSchema;
  out["command"] = "prolong";
  out["name"] = name;
  out["g0"] = g0;
  json dims;
  for (int k = p.min_degree(); k <= p.top_degree(); ++k)
    dims[std::to_string(k)] = p.degree_dim(k);
  out["layer_dims"] = std::move(dims);
  out["total_dim"] = p.total_dim();
  out["truncated"] = p.truncated;
  return out;
}

nlohmann::json classification_report_json(const std::string& name,
                                          const ClassificationReport& rep) {
  json out;
  out["schema"] = kReportSchema;
  out["command"] = "classify";
  out["name"] = name;
  out["verdict"] = to_string(rep.verdict);
  json dims;
  for (const auto& [k, d] : rep.layer_dims) dims[std::to_string(k)] = d;
  out["layer_dims"] = std::move(dims);
  out["total_dim"] = rep.total_dim;
  out["conf_der_dim"] = rep.conf_der_dim;
  out["killing_signature"] = {rep.killing_signature.n_plus, rep.killing_signature.n_minus,
                              rep.killing_signature.n_zero};
  out["radical_dim"] = rep.radical_dim;
  out["radical_H_graded"] = rep.radical_H_graded;
  out["centroid_dim"] = rep.centroid_dimension;
  out["truncated"] = rep.truncated;
  json cert;
  cert["applicable"] = rep.rank_one_applicable;
  if (rep.rank_one_applicable) {
    cert["ok"] = rep.rank_one.ok();
    cert["centralizer_in_degree0"] = rep.rank_one.centralizer_in_degree0;
    cert["killing_positive_on_H"] = rep.rank_one.killing_positive_on_H;
    cert["signature_ok"] = rep.rank_one.signature_ok;
    cert["centralizer_dim"] = rep.rank_one.centralizer_dim;
    cert["centralizer_signature"] = {rep.rank_one.centralizer_signature.n_plus,
                                     rep.rank_one.centralizer_signature.n_minus,
                                     rep.rank_one.centralizer_signature.n_zero};
  }
  out["rank_one_certificate"] = std::move(cert);
  out["notes"] = rep.notes;
  return out;
}

}  // namespace carnot
