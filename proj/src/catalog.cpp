#include "carnot/catalog.hpp"

#include <cstdio>
#include <stdexcept>

namespace carnot {

namespace {

Vec unit_vec(std::size_t n, std::size_t i, long c = 1) {
  Vec v(n, Rational(0));
  v[i] = c;
  return v;
}

}  // namespace

StratifiedAlgebra make_abelian(std::size_t n) {
  if (n < 3) throw std::invalid_argument("abelian(n) requires n >= 3");
  return StratifiedAlgebra({n}, {});
}

StratifiedAlgebra make_heisenberg(std::size_t n) {
  if (n < 1) throw std::invalid_argument("heisenberg(n) requires n >= 1");
  std::size_t dim = 2 * n + 1;
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    entries.push_back({i, n + i, unit_vec(dim, 2 * n)});  // [X_i, Y_i] = Z
  return StratifiedAlgebra({2 * n, 1}, entries);
}

StratifiedAlgebra make_quaternionic_heisenberg() {
  // g_{-1} = H with basis (1, i, j, k); g_{-2} = Im H with basis (i, j, k);
  // [x, y] = conj(x) y - conj(y) x, which is purely imaginary.
  const std::size_t dim = 7;
  std::vector<BracketEntry> entries = {
      {0, 1, unit_vec(dim, 4, 2)},   // [1, i] = 2i
      {0, 2, unit_vec(dim, 5, 2)},   // [1, j] = 2j
      {0, 3, unit_vec(dim, 6, 2)},   // [1, k] = 2k
      {1, 2, unit_vec(dim, 6, -2)},  // [i, j] = -2k
      {1, 3, unit_vec(dim, 5, 2)},   // [i, k] = 2j
      {2, 3, unit_vec(dim, 4, -2)},  // [j, k] = -2i
  };
  return StratifiedAlgebra({4, 3}, entries);
}

StratifiedAlgebra make_free_nilpotent_step2(std::size_t m) {
  if (m < 2) throw std::invalid_argument("free_nilpotent(m,2) requires m >= 2");
  std::size_t d2 = m * (m - 1) / 2;
  std::size_t dim = m + d2;
  std::vector<BracketEntry> entries;
  std::size_t idx = m;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      entries.push_back({i, j, unit_vec(dim, idx++)});  // [e_i, e_j] = e_ij
  return StratifiedAlgebra({m, d2}, entries);
}

StratifiedAlgebra make_engel() {
  const std::size_t dim = 4;
  std::vector<BracketEntry> entries = {
      {0, 1, unit_vec(dim, 2)},  // [X1, X2] = X3
      {0, 2, unit_vec(dim, 3)},  // [X1, X3] = X4
  };
  return StratifiedAlgebra({2, 1, 1}, entries);
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"abelian(3)", "IWASAWA"},
      {"heisenberg(1)", "IWASAWA"},
      {"heisenberg(2)", "IWASAWA"},
      {"quaternionic_heisenberg", "IWASAWA"},
      {"free_nilpotent(3,2)", "RIGID"},
      {"engel", "RIGID"},
  };
  return entries;
}

StratifiedAlgebra catalog_build(const std::string& name) {
  unsigned long a = 0, b = 0;
  if (name == "engel") return make_engel();
  if (name == "quaternionic_heisenberg") return make_quaternionic_heisenberg();
  if (std::sscanf(name.c_str(), "abelian(%lu)", &a) == 1) return make_abelian(a);
  if (std::sscanf(name.c_str(), "heisenberg(%lu)", &a) == 1) return make_heisenberg(a);
  if (std::sscanf(name.c_str(), "free_nilpotent(%lu,%lu)", &a, &b) == 2) {
    if (b != 2) throw std::invalid_argument("only step-2 free nilpotent algebras are supported");
    return make_free_nilpotent_step2(a);
  }
  throw std::invalid_argument("unknown catalog name: " + name);
}

}  // namespace carnot
