#include <doctest.h>

#include "carnot/catalog.hpp"
#include "carnot/structure.hpp"
#include "helpers.hpp"

using namespace carnot;

namespace {

Prolongation conf_prolongation(const StratifiedAlgebra& alg) {
  return prolong(alg, conf_derivations(alg).basis);
}

}  // namespace

TEST_CASE("Killing form of a nilpotent algebra vanishes") {
  LieTable h = LieTable::from_algebra(make_heisenberg(2));
  CHECK(killing_form(h).mat.is_zero());
  CHECK(solvable_radical(h) == Subspace::full(h.dim()));
}

TEST_CASE("B(H, H) equals the degree-weighted dimension sum") {
  // ad(H) is diagonal with eigenvalue -k on degree k, so
  // B(H, H) = sum_k k^2 dim(degree k); for heisenberg(1) this is 12.
  for (const auto& e : catalog_entries()) {
    Prolongation p = conf_prolongation(catalog_build(e.name));
    SymmetricForm b = killing_form(LieTable::from_prolongation(p));
    Vec h = p.global_H();
    Rational expect(0);
    for (int k = p.min_degree(); k <= p.top_degree(); ++k)
      expect += Rational(static_cast<long>(k) * k) *
                Rational(static_cast<long>(p.degree_dim(k)));
    CHECK(b.eval(h, h) == expect);
  }
  Prolongation p = conf_prolongation(make_heisenberg(1));
  Vec h = p.global_H();
  CHECK(killing_form(LieTable::from_prolongation(p)).eval(h, h) == 12);
}

TEST_CASE("radical of the Iwasawa prolongations is trivial") {
  for (const auto& e : catalog_entries()) {
    if (e.expected_verdict != "IWASAWA") continue;
    Prolongation p = conf_prolongation(catalog_build(e.name));
    LieTable l = LieTable::from_prolongation(p);
    CHECK(solvable_radical(l).dim() == 0);
    CHECK(signature(killing_form(l)).n_zero == 0);
  }
}

TEST_CASE("radical of the rigid prolongations is graded") {
  for (const auto& e : catalog_entries()) {
    if (e.expected_verdict != "RIGID") continue;
    Prolongation p = conf_prolongation(catalog_build(e.name));
    Subspace rad = solvable_radical(LieTable::from_prolongation(p));
    CHECK(rad.dim() > 0);
    CHECK(is_H_graded(p, rad));
  }
}

TEST_CASE("centroid dimension: abelian, simple, and direct sums") {
  // Every endomorphism commutes with ad = 0 on an abelian table.
  CHECK(centroid_dim(LieTable::from_algebra(make_abelian(3))) == 9);

  Prolongation p = conf_prolongation(make_heisenberg(1));
  LieTable simple = LieTable::from_prolongation(p);
  std::vector<int> degrees(p.total_dim());
  for (std::size_t i = 0; i < p.total_dim(); ++i) degrees[i] = p.degree_of_global(i);
  CHECK(centroid_dim(simple, &degrees) == 1);
  CHECK(centroid_dim(simple) == 1);

  // In the direct sum, H1 + H2 still acts as the degree diagonal, so the
  // graded restriction stays valid and must find both projections.
  LieTable two = LieTable::direct_sum(simple, simple);
  std::vector<int> deg2(degrees);
  deg2.insert(deg2.end(), degrees.begin(), degrees.end());
  CHECK(centroid_dim(two, &deg2) == 2);
  CHECK(solvable_radical(two).dim() == 0);
}

TEST_CASE("basis-ideal search certifies simplicity") {
  Prolongation p = conf_prolongation(make_heisenberg(1));
  CHECK(no_proper_basis_ideal(LieTable::from_prolongation(p)));
  CHECK(!no_proper_basis_ideal(LieTable::from_algebra(make_heisenberg(1))));
}

TEST_CASE("rank-one certificate on the Iwasawa prolongations") {
  struct Expect {
    const char* name;
    std::size_t centralizer_dim;
  };
  for (const auto& x : {Expect{"abelian(3)", 4}, Expect{"heisenberg(1)", 2},
                        Expect{"heisenberg(2)", 5}, Expect{"quaternionic_heisenberg", 7}}) {
    Prolongation p = conf_prolongation(catalog_build(x.name));
    RankOneCertificate cert = rank_one_certificate(p);
    CHECK(cert.ok());
    CHECK(cert.centralizer_dim == x.centralizer_dim);
    CHECK(cert.centralizer_signature == Signature{1, x.centralizer_dim - 1, 0});
  }
}

TEST_CASE("classification reproduces the expected verdict on every fixture") {
  for (const auto& e : catalog_entries()) {
    StratifiedAlgebra alg = catalog_build(e.name);
    ClassificationReport rep = classify(alg);
    CHECK(to_string(rep.verdict) == e.expected_verdict);
    CHECK(!rep.truncated);
    if (rep.verdict == Verdict::Iwasawa) {
      CHECK(rep.killing_signature.n_zero == 0);
      CHECK(rep.radical_dim == 0);
      CHECK(rep.centroid_dimension == 1);
      CHECK(rep.rank_one.ok());
    } else {
      CHECK(rep.total_dim == alg.dim() + rep.conf_der_dim);
      CHECK(rep.radical_H_graded);
    }
  }
}

TEST_CASE("classification totals match the classical dimensions") {
  CHECK(classify(make_abelian(3)).total_dim == 10);         // so(4,1)
  CHECK(classify(make_heisenberg(1)).total_dim == 8);       // su(2,1)
  CHECK(classify(make_heisenberg(2)).total_dim == 15);      // su(3,1)
  CHECK(classify(make_quaternionic_heisenberg()).total_dim == 21);  // sp(2,1)
  CHECK(classify(make_free_nilpotent_step2(3)).total_dim == 10);
  CHECK(classify(make_engel()).total_dim == 5);
}
