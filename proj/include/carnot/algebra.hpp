#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "carnot/linalg.hpp"
#include "carnot/matrix.hpp"

namespace carnot {

/// One entry of the structure-constant table, in ambient (flattened) indices.
struct BracketEntry {
  std::size_t left, right;
  Vec value;  // ambient coordinates
};

struct ValidationIssue {
  enum class Kind { Antisymmetry, Jacobi, Grading, Stratification, Dimension };
  Kind kind;
  std::vector<std::size_t> indices;  // offending basis indices (ambient)
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Stratified (Carnot) Lie algebra g = g_{-1} + ... + g_{-s}, given by layer
/// dimensions and graded structure constants. Basis indexing is layer-major:
/// ambient index = layer_offset(j) + i for the i-th vector of g_{-j}.
class StratifiedAlgebra {
 public:
  /// Entries may specify either (a,b) or (b,a); specifying both requires
  /// consistency with antisymmetry. Omitted pairs are zero.
  /// `allow_small_dim` lifts the total-dimension >= 3 requirement (outside
  /// the intended scope; for experimentation only).
  StratifiedAlgebra(std::vector<std::size_t> layer_dims,
                    const std::vector<BracketEntry>& entries,
                    bool allow_small_dim = false);

  std::size_t dim() const { return dim_; }
  std::size_t step() const { return layer_dims_.size(); }
  const std::vector<std::size_t>& layer_dims() const { return layer_dims_; }
  std::size_t layer_dim(std::size_t j) const { return layer_dims_[j - 1]; }
  std::size_t layer_offset(std::size_t j) const { return offsets_[j - 1]; }
  /// Layer number (1..s) of an ambient basis index.
  std::size_t layer_of(std::size_t idx) const;
  bool small_dim_allowed() const { return allow_small_dim_; }

  const Vec& basis_bracket(std::size_t a, std::size_t b) const { return table_[a][b]; }
  /// Ambient basis vector e_a.
  Vec unit(std::size_t a) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad(x) : g -> g in the ambient basis.
  Matrix ad(const Vec& x) const;

  /// Component of an ambient vector in layer j, as a d_j vector.
  Vec layer_component(const Vec& x, std::size_t j) const;
  /// Embeds a d_j vector into ambient coordinates.
  Vec embed_layer(const Vec& local, std::size_t j) const;

  ValidationReport validate() const;

 private:
  std::vector<std::size_t> layer_dims_;
  std::vector<std::size_t> offsets_;
  std::size_t dim_;
  bool allow_small_dim_;
  std::vector<std::vector<Vec>> table_;  // table_[a][b] = [e_a, e_b], ambient
};

/// Degree-0 graded linear map, one block per layer (g_{-j} -> g_{-j}).
struct LayerMap {
  std::vector<Matrix> blocks;  // blocks[j-1] : d_j x d_j

  Matrix ambient(const StratifiedAlgebra& alg) const;
  Vec apply(const StratifiedAlgebra& alg, const Vec& x) const;
  static LayerMap from_ambient(const StratifiedAlgebra& alg, const Matrix& m);
};

/// Subspaces g^(1) >= g^(2) >= ... of the descending central series, down to 0.
std::vector<Subspace> descending_central_series(const StratifiedAlgebra& alg);

/// Centre { X : [X, g] = 0 }.
Subspace center(const StratifiedAlgebra& alg);

/// Dilation delta_t, acting by t^j on g_{-j}. Requires t > 0.
LayerMap dilation(const StratifiedAlgebra& alg, const Rational& t);

/// The grading derivation H, acting by j on g_{-j}.
LayerMap grading_derivation(const StratifiedAlgebra& alg);

/// True iff D satisfies D[X,Y] = [DX,Y] + [X,DY] on all basis pairs.
bool is_derivation(const StratifiedAlgebra& alg, const Matrix& ambient_map);

/// True iff T preserves brackets: T[X,Y] = [TX,TY] on all basis pairs.
bool is_automorphism(const StratifiedAlgebra& alg, const Matrix& ambient_map);

}  // namespace carnot
