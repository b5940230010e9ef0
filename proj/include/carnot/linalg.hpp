#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "carnot/matrix.hpp"

namespace carnot {

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivots;  // pivot column indices, increasing
};

/// Reduced row-echelon form; row space is preserved.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of { x : m x = 0 }; size = cols - rank.
std::vector<Vec> nullspace(const Matrix& m);

/// One solution of m x = b, or nullopt when b is not in the column space.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Inverse of a square nonsingular matrix; throws std::invalid_argument if singular.
Matrix inverse(const Matrix& m);

/// The unique solution of m x = b orthogonal (standard dot product) to ker m;
/// minimizes the standard norm among all solutions.
/// Throws std::invalid_argument("not in column space") when unsolvable.
Vec min_norm_preimage(const Matrix& m, const Vec& b);

struct Signature {
  std::size_t n_plus = 0, n_minus = 0, n_zero = 0;
  bool operator==(const Signature&) const = default;
};

/// Symmetric bilinear form given by its (symmetric) Gram matrix.
struct SymmetricForm {
  Matrix mat;
  explicit SymmetricForm(Matrix m);
  std::size_t dim() const { return mat.rows(); }
  Rational eval(const Vec& x, const Vec& y) const;
};

/// Exact inertia by symmetric congruence elimination (Sylvester's law).
Signature signature(const SymmetricForm& f);

/// Subspace of Q^n held by a canonical (rref-row) basis.
class Subspace {
 public:
  Subspace(std::size_t ambient, const std::vector<Vec>& spanning);
  static Subspace zero(std::size_t ambient) { return Subspace(ambient, {}); }
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool operator==(const Subspace& rhs) const = default;

  Subspace sum(const Subspace& rhs) const;
  Subspace intersect(const Subspace& rhs) const;

 private:
  std::size_t ambient_;
  std::vector<Vec> basis_;  // canonical rref rows
};

}  // namespace carnot
