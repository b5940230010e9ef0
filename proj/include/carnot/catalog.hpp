#pragma once

#include <string>
#include <vector>

#include "carnot/algebra.hpp"

namespace carnot {

StratifiedAlgebra make_abelian(std::size_t n);
StratifiedAlgebra make_heisenberg(std::size_t n);   // layers [2n, 1]
StratifiedAlgebra make_quaternionic_heisenberg();   // layers [4, 3]
StratifiedAlgebra make_free_nilpotent_step2(std::size_t m);  // layers [m, m(m-1)/2]
StratifiedAlgebra make_engel();                     // layers [2, 1, 1]

struct CatalogEntry {
  std::string name;
  std::string expected_verdict;  // "RIGID" or "IWASAWA"
};

/// Default fixture catalog with expected classifications for self-test.
const std::vector<CatalogEntry>& catalog_entries();

/// Builds an algebra from a catalog name such as "heisenberg(2)",
/// "abelian(3)", "free_nilpotent(3,2)", "quaternionic_heisenberg", "engel".
/// Throws std::invalid_argument for unknown names or bad parameters.
StratifiedAlgebra catalog_build(const std::string& name);

}  // namespace carnot
