#pragma once

#include <vector>

#include "carnot/algebra.hpp"
#include "carnot/linalg.hpp"

namespace carnot {

/// One Gram matrix per layer; layers are mutually orthogonal. The basis of
/// g_{-1} supplied at ingestion is declared orthonormal, so grams[0] is the
/// identity and higher grams are induced by the layer bracket projections.
struct InnerProductAssignment {
  std::vector<SymmetricForm> grams;  // grams[j-1] on g_{-j}
};

/// Matrix of the projection P_j : g_{-1}^{tensor j} -> g_{-j},
/// P_j(X_1 x ... x X_j) = [...[X_1,X_2]...,X_j], in the lexicographic tensor
/// basis and the layer-j basis (d_j x d_1^j). Throws when j is out of range
/// or the matrix fails to have full row rank (invalid stratification).
Matrix tensor_projection_matrix(const StratifiedAlgebra& alg, std::size_t j);

/// Gram of the induced inner product on g_{-j}: (P_j P_j^T)^{-1}. Equals the
/// Gram of minimal-norm tensor lifts of the layer basis.
SymmetricForm induced_gram(const StratifiedAlgebra& alg, std::size_t j);

/// Grams for every layer.
InnerProductAssignment induced_metric(const StratifiedAlgebra& alg);

/// Sum over layers of (X_j)^T G_{-j} X_j for an ambient vector X.
Rational norm_squared(const StratifiedAlgebra& alg, const InnerProductAssignment& m,
                      const Vec& x);

}  // namespace carnot
