#include <doctest.h>

#include "carnot/algebra.hpp"
#include "carnot/catalog.hpp"
#include "helpers.hpp"

using namespace carnot;

namespace {
Vec unit(std::size_t n, std::size_t i, long c = 1) {
  Vec v(n, Rational(0));
  v[i] = c;
  return v;
}
}  // namespace

TEST_CASE("heisenberg structure, layers and validation") {
  StratifiedAlgebra h = make_heisenberg(1);
  CHECK(h.dim() == 3);
  CHECK(h.step() == 2);
  CHECK(h.layer_of(0) == 1);
  CHECK(h.layer_of(2) == 2);
  CHECK(h.basis_bracket(0, 1) == unit(3, 2));
  CHECK(h.basis_bracket(1, 0) == unit(3, 2, -1));
  CHECK(h.validate().ok());

  CHECK(center(h).dim() == 1);
  CHECK(center(h).contains(unit(3, 2)));
  auto series = descending_central_series(h);
  REQUIRE(series.size() == 3);
  CHECK(series[0].dim() == 3);
  CHECK(series[1].dim() == 1);
  CHECK(series[2].dim() == 0);
}

TEST_CASE("catalog fixtures all validate") {
  for (const auto& e : catalog_entries()) CHECK(catalog_build(e.name).validate().ok());
  CHECK_THROWS_AS(catalog_build("mystery(4)"), std::invalid_argument);
}

TEST_CASE("layer component and embedding round trip") {
  StratifiedAlgebra e = make_engel();
  Vec x = {Rational(1), Rational(2), Rational(3), Rational(4)};
  for (std::size_t j = 1; j <= e.step(); ++j) {
    Vec local = e.layer_component(x, j);
    Vec back = e.embed_layer(local, j);
    for (std::size_t i = 0; i < local.size(); ++i)
      CHECK(back[e.layer_offset(j) + i] == local[i]);
  }
}

TEST_CASE("dilations are automorphisms, H is a derivation") {
  StratifiedAlgebra e = make_engel();
  CHECK(is_automorphism(e, dilation(e, make_rational(2, 3)).ambient(e)));
  CHECK_THROWS_AS(dilation(e, Rational(0)), std::invalid_argument);
  CHECK(is_derivation(e, grading_derivation(e).ambient(e)));
  // A random layer map is generically not a derivation.
  Matrix bad = Matrix::identity(4);
  bad(0, 1) = 1;
  CHECK(!is_derivation(e, bad));
}

TEST_CASE("ad matrix matches the bracket") {
  StratifiedAlgebra q = make_quaternionic_heisenberg();
  std::mt19937 rng(3);
  Vec x = testutil::random_vec(rng, q.dim());
  Vec y = testutil::random_vec(rng, q.dim());
  CHECK(q.ad(x).apply(y) == q.bracket(x, y));
  // [x, y] = -[y, x] bilinearly.
  Vec yx = q.bracket(y, x);
  Vec xy = q.bracket(x, y);
  for (std::size_t i = 0; i < q.dim(); ++i) CHECK(xy[i] == -yx[i]);
}

TEST_CASE("validate flags a Jacobi failure") {
  // layers [3,1,1] with [e0,e1] = e3, [e2,e3] = e4: the (e0,e1,e2) triple
  // produces [[e0,e1],e2] = -e4 alone.
  std::vector<BracketEntry> entries = {{0, 1, unit(5, 3)}, {2, 3, unit(5, 4)}};
  StratifiedAlgebra bad({3, 1, 1}, entries);
  auto rep = bad.validate();
  CHECK(!rep.ok());
  bool jacobi = false;
  for (const auto& i : rep.issues) {
    CHECK(i.kind == ValidationIssue::Kind::Jacobi);
    jacobi = true;
  }
  CHECK(jacobi);
}

TEST_CASE("validate flags grading and stratification failures") {
  // [e0, e1] lands back in g_{-1}: grading violation.
  StratifiedAlgebra graded({2, 1}, {{0, 1, unit(3, 0)}});
  bool saw_grading = false;
  for (const auto& i : graded.validate().issues)
    if (i.kind == ValidationIssue::Kind::Grading) saw_grading = true;
  CHECK(saw_grading);

  // Zero bracket with two layers: g_{-2} is not generated.
  StratifiedAlgebra strat({2, 1}, {});
  bool saw_strat = false;
  for (const auto& i : strat.validate().issues)
    if (i.kind == ValidationIssue::Kind::Stratification) saw_strat = true;
  CHECK(saw_strat);
}

TEST_CASE("dimension floor is reported unless explicitly lifted") {
  StratifiedAlgebra tiny({2}, {});
  bool saw_dim = false;
  for (const auto& i : tiny.validate().issues)
    if (i.kind == ValidationIssue::Kind::Dimension) saw_dim = true;
  CHECK(saw_dim);
  StratifiedAlgebra lifted({2}, {}, true);
  CHECK(lifted.validate().ok());
}

TEST_CASE("constructor rejects inconsistent duplicate entries") {
  std::vector<BracketEntry> dup = {{0, 1, unit(3, 2)}, {1, 0, unit(3, 2)}};
  CHECK_THROWS_AS(StratifiedAlgebra({2, 1}, dup), std::invalid_argument);
  std::vector<BracketEntry> ok = {{0, 1, unit(3, 2)}, {1, 0, unit(3, 2, -1)}};
  CHECK(StratifiedAlgebra({2, 1}, ok).validate().ok());
}
