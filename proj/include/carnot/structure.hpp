#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "carnot/linalg.hpp"
#include "carnot/prolong.hpp"

namespace carnot {

/// A finite-dimensional Lie algebra given by its full structure-constant
/// table (antisymmetric, Jacobi assumed or separately checked).
struct LieTable {
  std::vector<std::vector<Vec>> table;

  std::size_t dim() const { return table.size(); }
  Vec bracket(const Vec& x, const Vec& y) const;
  Matrix ad(const Vec& x) const;
  Vec unit(std::size_t i) const;

  static LieTable from_algebra(const StratifiedAlgebra& alg);
  static LieTable from_prolongation(const Prolongation& p);
  static LieTable direct_sum(const LieTable& a, const LieTable& b);
};

/// Killing form B(X,Y) = trace(ad X ad Y), exact.
SymmetricForm killing_form(const LieTable& L);

/// Derived subalgebra [U, U] of a subspace.
Subspace derived_subspace(const LieTable& L, const Subspace& u);

/// Solvable radical as the Killing-orthogonal of [L, L]; verified solvable by
/// a terminating derived series (throws std::runtime_error otherwise).
Subspace solvable_radical(const LieTable& L);

/// True iff every degree-component projection of the subspace stays inside it.
bool is_H_graded(const Prolongation& p, const Subspace& sub);

/// Dimension of { phi : phi ad(x) = ad(x) phi for all x }, computed against a
/// greedily found Lie-generating set. When `degrees` is supplied (valid only
/// when some element acts as the degree diagonal, as H does in a
/// prolongation), the search is restricted to degree-preserving maps.
std::size_t centroid_dim(const LieTable& L,
                         const std::vector<int>* degrees = nullptr);

/// True iff L has no proper nonzero ideal generated by a basis vector.
bool no_proper_basis_ideal(const LieTable& L);

struct RankOneCertificate {
  bool centralizer_in_degree0 = false;
  bool killing_positive_on_H = false;
  bool signature_ok = false;  // (1, dim Z - 1, 0) on the centralizer Z of H
  std::size_t centralizer_dim = 0;
  Signature centralizer_signature;
  bool ok() const {
    return centralizer_in_degree0 && killing_positive_on_H && signature_ok;
  }
};

/// Rank-one check on a synthesized prolongation with trivial radical.
RankOneCertificate rank_one_certificate(const Prolongation& p);

enum class Verdict { Rigid, Iwasawa, Inconclusive };
std::string to_string(Verdict v);

struct ClassificationReport {
  Verdict verdict = Verdict::Inconclusive;
  std::map<int, std::size_t> layer_dims;  // degree -> dimension
  std::size_t total_dim = 0;
  std::size_t conf_der_dim = 0;
  Signature killing_signature;
  std::size_t radical_dim = 0;
  bool radical_H_graded = false;
  std::size_t centroid_dimension = 0;
  bool rank_one_applicable = false;
  RankOneCertificate rank_one;
  bool truncated = false;
  std::vector<std::string> notes;
};

/// Full pipeline: ConfDer -> prolongation -> dichotomy verdict with
/// structural certificates.
ClassificationReport classify(const StratifiedAlgebra& alg, std::size_t max_degree = 12);

}  // namespace carnot
