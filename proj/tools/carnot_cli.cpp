// carnot: stratified Lie algebras over exact rationals -- canonical metrics,
// derivation algebras, Tanaka prolongations and the rigid/Iwasawa dichotomy.

#include <CLI11.hpp>
#include <iostream>

#include "carnot/catalog.hpp"
#include "carnot/io.hpp"

namespace {

using carnot::Verdict;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitDegreeCap = 2;

void emit(const json& report, bool as_json) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  const std::string cmd = report.value("command", "");
  std::cout << cmd << " " << report.value("name", "") << "\n";
  if (cmd == "validate") {
    std::cout << (report["valid"].get<bool>() ? "valid" : "INVALID") << "\n";
    for (const auto& v : report["violations"])
      std::cout << "  " << v["kind"].get<std::string>() << ": "
                << v["message"].get<std::string>() << "\n";
  } else if (cmd == "metric") {
    std::size_t j = 1;
    for (const auto& g : report["grams"]) {
      std::cout << "  layer " << j++ << " Gram:\n";
      for (const auto& row : g) {
        std::cout << "   ";
        for (const auto& x : row) std::cout << " " << x.get<std::string>();
        std::cout << "\n";
      }
    }
  } else if (cmd == "derivations") {
    std::cout << "  kind " << report["kind"].get<std::string>() << ", dimension "
              << report["dimension"] << "\n";
  } else if (cmd == "prolong") {
    std::cout << "  layer dims by degree:";
    for (const auto& [k, d] : report["layer_dims"].items())
      std::cout << " " << k << ":" << d;
    std::cout << "\n  total dim " << report["total_dim"]
              << (report["truncated"].get<bool>() ? " (truncated at degree cap)" : "")
              << "\n";
  } else if (cmd == "classify") {
    std::cout << "  verdict " << report["verdict"].get<std::string>() << ", total dim "
              << report["total_dim"] << "\n";
    for (const auto& n : report["notes"])
      std::cout << "  note: " << n.get<std::string>() << "\n";
  }
}

carnot::NamedAlgebra load_checked(const std::string& path) {
  auto named = carnot::load_algebra_file(path);
  auto rep = named.algebra.validate();
  if (!rep.ok()) {
    std::string msg = "invalid algebra:";
    for (const auto& issue : rep.issues) msg += "\n  " + issue.message;
    throw carnot::ParseError(msg);
  }
  return named;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stratified Lie algebra toolkit: exact metrics, derivations, "
               "Tanaka prolongations, conformal rigidity classification"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string file, kind = "conf", g0 = "conf", catalog_name;
  std::size_t max_degree = 12;

  auto* validate_cmd = app.add_subcommand("validate", "Check structural invariants");
  validate_cmd->add_option("file", file, "Algebra file")->required();

  auto* metric_cmd = app.add_subcommand("metric", "Induced layer inner products");
  metric_cmd->add_option("file", file, "Algebra file")->required();

  auto* der_cmd = app.add_subcommand("derivations", "Derivation algebras");
  der_cmd->add_option("file", file, "Algebra file")->required();
  der_cmd->add_option("--kind", kind, "der | iso | conf")
      ->check(CLI::IsMember({"der", "iso", "conf"}));

  auto* prolong_cmd = app.add_subcommand("prolong", "Tanaka prolongation");
  prolong_cmd->add_option("file", file, "Algebra file")->required();
  prolong_cmd->add_option("--g0", g0, "conf | der")->check(CLI::IsMember({"conf", "der"}));
  prolong_cmd->add_option("--max-degree", max_degree, "Degree cap");

  auto* classify_cmd = app.add_subcommand("classify", "RIGID / IWASAWA dichotomy");
  classify_cmd->add_option("file", file, "Algebra file")->required();
  classify_cmd->add_option("--max-degree", max_degree, "Degree cap");

  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in fixtures");
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog entries");
  auto* emit_cmd = catalog_cmd->add_subcommand("emit", "Emit a fixture as an algebra file");
  emit_cmd->add_option("name", catalog_name, "Catalog name, e.g. heisenberg(2)")->required();
  catalog_cmd->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);
  const bool as_json = format == "json";

  try {
    if (*validate_cmd) {
      auto named = carnot::load_algebra_file(file);
      auto rep = named.algebra.validate();
      emit(carnot::validation_report_json(named.name, rep), as_json);
      return rep.ok() ? kExitOk : kExitValidation;
    }
    if (*metric_cmd) {
      auto named = load_checked(file);
      emit(carnot::metric_report_json(named.name, named.algebra,
                                      carnot::induced_metric(named.algebra)),
           as_json);
      return kExitOk;
    }
    if (*der_cmd) {
      auto named = load_checked(file);
      carnot::DerivationSpace sp =
          kind == "der"   ? carnot::strata_preserving_derivations(named.algebra)
          : kind == "iso" ? carnot::iso_derivations(named.algebra)
                          : carnot::conf_derivations(named.algebra);
      emit(carnot::derivations_report_json(named.name, named.algebra, sp), as_json);
      return kExitOk;
    }
    if (*prolong_cmd) {
      auto named = load_checked(file);
      auto g0_basis = g0 == "der"
                          ? carnot::strata_preserving_derivations(named.algebra).basis
                          : carnot::conf_derivations(named.algebra).basis;
      auto p = carnot::prolong(named.algebra, std::move(g0_basis), max_degree);
      emit(carnot::prolongation_report_json(named.name, g0, p), as_json);
      return p.truncated ? kExitDegreeCap : kExitOk;
    }
    if (*classify_cmd) {
      auto named = load_checked(file);
      auto rep = carnot::classify(named.algebra, max_degree);
      emit(carnot::classification_report_json(named.name, rep), as_json);
      return rep.truncated ? kExitDegreeCap : kExitOk;
    }
    if (*list_cmd) {
      if (as_json) {
        json out;
        out["schema"] = carnot::kReportSchema;
        out["command"] = "catalog";
        json entries = json::array();
        for (const auto& e : carnot::catalog_entries())
          entries.push_back({{"name", e.name}, {"expected", e.expected_verdict}});
        out["entries"] = std::move(entries);
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& e : carnot::catalog_entries())
          std::cout << e.name << "  expected " << e.expected_verdict << "\n";
      }
      return kExitOk;
    }
    if (*emit_cmd) {
      auto alg = carnot::catalog_build(catalog_name);
      std::cout << carnot::algebra_to_json(catalog_name, alg).dump(2) << "\n";
      return kExitOk;
    }
  } catch (const carnot::ParseError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
