#include <doctest.h>

#include <map>
#include <random>

#include "carnot/catalog.hpp"
#include "carnot/prolong.hpp"
#include "carnot/structure.hpp"
#include "helpers.hpp"

using namespace carnot;

namespace {

Prolongation conf_prolongation(const StratifiedAlgebra& alg) {
  return prolong(alg, conf_derivations(alg).basis);
}

std::map<int, std::size_t> profile(const Prolongation& p) {
  std::map<int, std::size_t> out;
  for (int k = p.min_degree(); k <= p.top_degree(); ++k) out[k] = p.degree_dim(k);
  return out;
}

}  // namespace

TEST_CASE("heisenberg(1) prolongs to an 8-dimensional algebra, profile 1-2-2-2-1") {
  Prolongation p = conf_prolongation(make_heisenberg(1));
  CHECK(!p.truncated);
  CHECK(profile(p) == std::map<int, std::size_t>{{-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}});
  CHECK(p.total_dim() == 8);
}

TEST_CASE("abelian(3) prolongs to a 10-dimensional algebra") {
  Prolongation p = conf_prolongation(make_abelian(3));
  CHECK(!p.truncated);
  CHECK(profile(p) == std::map<int, std::size_t>{{-1, 3}, {0, 4}, {1, 3}});
  CHECK(p.total_dim() == 10);
}

TEST_CASE("quaternionic Heisenberg prolongs to a 21-dimensional algebra") {
  Prolongation p = conf_prolongation(make_quaternionic_heisenberg());
  CHECK(!p.truncated);
  CHECK(p.total_dim() == 21);
  CHECK(p.degree_dim(1) == 4);
  CHECK(p.degree_dim(2) == 3);
}

TEST_CASE("rigid fixtures stop at degree zero") {
  for (const auto& name : {std::string("free_nilpotent(3,2)"), std::string("engel")}) {
    StratifiedAlgebra alg = catalog_build(name);
    DerivationSpace conf = conf_derivations(alg);
    Prolongation p = prolong(alg, conf.basis);
    CHECK(!p.truncated);
    CHECK(p.top_degree() == 0);
    CHECK(p.total_dim() == alg.dim() + conf.dim());
  }
}

TEST_CASE("synthesized brackets satisfy Jacobi and antisymmetry on all triples") {
  for (const auto& e : catalog_entries()) {
    StratifiedAlgebra alg = catalog_build(e.name);
    Prolongation p = conf_prolongation(alg);
    REQUIRE(p.has_table());
    const std::size_t n = p.total_dim();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        Vec sum = p.table[a][b];
        add_scaled(sum, Rational(1), p.table[b][a]);
        CHECK(is_zero(sum));
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) {
          Vec sum = p.global_bracket(p.table[a][b], p.unit_global(c));
          add_scaled(sum, Rational(1), p.global_bracket(p.table[b][c], p.unit_global(a)));
          add_scaled(sum, Rational(1), p.global_bracket(p.table[c][a], p.unit_global(b)));
          CHECK(is_zero(sum));
        }
  }
}

TEST_CASE("ad(H) acts as -k times the identity on each degree") {
  for (const auto& e : catalog_entries()) {
    Prolongation p = conf_prolongation(catalog_build(e.name));
    Matrix adh = p.global_ad(p.global_H());
    for (std::size_t i = 0; i < p.total_dim(); ++i) {
      int k = p.degree_of_global(i);
      Vec expect = p.unit_global(i);
      for (auto& x : expect) x *= Rational(-k);
      CHECK(adh.col(i) == expect);
    }
  }
}

TEST_CASE("no nonzero nonnegative element annihilates the base layer") {
  for (const auto& e : catalog_entries()) {
    Prolongation p = conf_prolongation(catalog_build(e.name));
    const std::size_t d1 = p.base.layer_dim(1);
    // Degree 0: layer maps restricted to g_{-1}.
    {
      Matrix cols(d1 * d1, p.g0.size());
      for (std::size_t g = 0; g < p.g0.size(); ++g) {
        const Matrix& b = p.g0[g].blocks[0];
        Vec flat(d1 * d1);
        for (std::size_t r = 0; r < d1; ++r)
          for (std::size_t c = 0; c < d1; ++c) flat[r * d1 + c] = b(r, c);
        cols.set_col(g, flat);
      }
      CHECK(rank(cols) == p.g0.size());
    }
    // Positive degrees: the u1 components must be independent.
    for (int k = 1; k <= p.top_degree(); ++k) {
      const std::size_t d = p.degree_dim(k);
      const std::size_t rows = p.degree_dim(k - 1) * d1;
      Matrix cols(rows, d);
      for (std::size_t g = 0; g < d; ++g) {
        const Matrix& u1 = p.positive[k - 1].basis[g].comp[0];
        Vec flat(rows);
        for (std::size_t r = 0; r < u1.rows(); ++r)
          for (std::size_t c = 0; c < u1.cols(); ++c) flat[r * d1 + c] = u1(r, c);
        cols.set_col(g, flat);
      }
      CHECK(rank(cols) == d);
    }
  }
}

TEST_CASE("prolongation stabilizes: one extra step past termination is zero") {
  for (const auto& e : catalog_entries()) {
    Prolongation p = conf_prolongation(catalog_build(e.name));
    ProlongationLayer next =
        prolong_step(p.base, p.g0, p.positive, p.top_degree() + 1);
    CHECK(next.dim() == 0);
  }
}

TEST_CASE("Killing form pairs only opposite degrees") {
  for (const auto& e : catalog_entries()) {
    Prolongation p = conf_prolongation(catalog_build(e.name));
    SymmetricForm b = killing_form(LieTable::from_prolongation(p));
    for (std::size_t i = 0; i < p.total_dim(); ++i)
      for (std::size_t j = 0; j < p.total_dim(); ++j)
        if (p.degree_of_global(i) + p.degree_of_global(j) != 0) CHECK(b.mat(i, j) == 0);
  }
}

TEST_CASE("central directions act injectively on the positive part") {
  std::mt19937 rng(41);
  for (const auto& e : catalog_entries()) {
    if (e.expected_verdict != "IWASAWA") continue;
    StratifiedAlgebra alg = catalog_build(e.name);
    Prolongation p = conf_prolongation(alg);
    const std::size_t pos_off = p.global_offset(1);
    const std::size_t pos_dim = p.total_dim() - pos_off;
    REQUIRE(pos_dim > 0);
    Subspace z = center(alg);
    auto injective_on_positive = [&](const Vec& central) {
      Matrix cols(p.total_dim(), pos_dim);
      Vec x = p.embed_base(central);
      for (std::size_t u = 0; u < pos_dim; ++u)
        cols.set_col(u, p.global_bracket(x, p.unit_global(pos_off + u)));
      return rank(cols) == pos_dim;
    };
    for (const auto& zb : z.basis()) CHECK(injective_on_positive(zb));
    for (int trial = 0; trial < 100; ++trial) {
      Vec x(alg.dim(), Rational(0));
      while (is_zero(x)) {
        std::fill(x.begin(), x.end(), Rational(0));
        for (const auto& zb : z.basis())
          add_scaled(x, testutil::random_rational(rng), zb);
      }
      CHECK(injective_on_positive(x));
    }
  }
}

TEST_CASE("the abelian plane below the dimension floor never terminates") {
  // The classical planar exception: conformal vector fields on the plane are
  // infinite dimensional, so the recursion keeps producing 2-dimensional
  // layers forever. This is exactly why inputs of dimension < 3 sit outside
  // the intended scope.
  StratifiedAlgebra plane({2}, {}, true);
  Prolongation p = prolong(plane, conf_derivations(plane).basis, 8);
  CHECK(p.truncated);
  for (int k = 1; k <= 8; ++k) CHECK(p.degree_dim(k) == 2);
}

TEST_CASE("the full derivation algebra of abelian space never terminates") {
  StratifiedAlgebra alg = make_abelian(3);
  Prolongation p = prolong(alg, strata_preserving_derivations(alg).basis, 6);
  CHECK(p.truncated);
  CHECK(!p.has_table());
  CHECK(p.top_degree() == 6);
}

TEST_CASE("prolong validates its degree-zero input") {
  StratifiedAlgebra h = make_heisenberg(1);
  // IsoDer alone misses H.
  CHECK_THROWS_WITH_AS(prolong(h, iso_derivations(h).basis), "H not in g0",
                       std::invalid_argument);
  // A non-derivation layer map is rejected.
  LayerMap bad{{Matrix{{1, 1}, {0, 1}}, Matrix::identity(1)}};
  CHECK_THROWS_AS(prolong(h, {grading_derivation(h), bad}), std::invalid_argument);
}
