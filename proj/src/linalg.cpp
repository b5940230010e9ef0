#include "carnot/linalg.hpp"

#include <stdexcept>

namespace carnot {

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> nullspace(const Matrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols(), Rational(0));
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
  Matrix col(m.rows(), 1);
  col.set_col(0, b);
  auto [r, pivots] = rref(Matrix::hstack(m, col));
  for (auto p : pivots)
    if (p == m.cols()) return std::nullopt;  // inconsistent
  Vec x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  auto [r, pivots] = rref(Matrix::hstack(m, Matrix::identity(m.rows())));
  if (m.rows() > 0 && (pivots.size() < m.rows() || pivots[m.rows() - 1] != m.rows() - 1))
    throw std::invalid_argument("inverse: singular matrix");
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = r(i, m.cols() + j);
  return out;
}

Vec min_norm_preimage(const Matrix& m, const Vec& b) {
  auto x0 = solve(m, b);
  if (!x0) throw std::invalid_argument("not in column space");
  // Row basis of m: pivot columns of m^T are independent row indices.
  auto row_idx = rref(m.transpose()).pivots;
  Matrix mr(row_idx.size(), m.cols());
  Vec br(row_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    mr.set_row(i, m.row(row_idx[i]));
    br[i] = b[row_idx[i]];
  }
  // Normal equations on the independent rows: (mr mr^T) y = br, x = mr^T y.
  Matrix gram = mr * mr.transpose();
  auto y = solve(gram, br);
  if (!y) throw std::invalid_argument("not in column space");
  return mr.transpose().apply(*y);
}

SymmetricForm::SymmetricForm(Matrix m) : mat(std::move(m)) {
  if (!mat.is_symmetric()) throw std::invalid_argument("form matrix is not symmetric");
}

Rational SymmetricForm::eval(const Vec& x, const Vec& y) const {
  return dot(x, mat.apply(y));
}

Signature signature(const SymmetricForm& f) {
  Matrix a = f.mat;
  const std::size_t n = a.rows();
  Signature sig;
  std::size_t k = 0;
  while (k < n) {
    if (a(k, k) == 0) {
      // Try a diagonal swap first, then a congruence row+col addition.
      std::size_t d = k + 1;
      while (d < n && a(d, d) == 0) ++d;
      if (d < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(d, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, d));
      } else {
        std::size_t j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) {
          ++sig.n_zero;
          ++k;
          continue;
        }
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    const Rational piv = a(k, k);
    if (piv > 0)
      ++sig.n_plus;
    else
      ++sig.n_minus;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f2 = a(i, k) / piv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f2 * a(k, j);
    }
    for (std::size_t j = k + 1; j < n; ++j) a(k, j) = 0;  // matching column step
    ++k;
  }
  return sig;
}

Subspace::Subspace(std::size_t ambient, const std::vector<Vec>& spanning)
    : ambient_(ambient) {
  for (const auto& v : spanning)
    if (v.size() != ambient) throw std::invalid_argument("subspace: dimension mismatch");
  if (!spanning.empty()) {
    auto [r, pivots] = rref(Matrix::from_rows(spanning, ambient));
    for (std::size_t i = 0; i < pivots.size(); ++i) basis_.push_back(r.row(i));
  }
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec v(ambient, Rational(0));
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  return Subspace(ambient, rows);
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace: dimension mismatch");
  Vec w = v;
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;  // canonical basis rows have a leading 1
    if (w[p] != 0) add_scaled(w, -w[p], b);
  }
  return carnot::is_zero(w);
}

Subspace Subspace::sum(const Subspace& rhs) const {
  if (ambient_ != rhs.ambient_) throw std::invalid_argument("subspace sum: ambient mismatch");
  std::vector<Vec> all = basis_;
  all.insert(all.end(), rhs.basis_.begin(), rhs.basis_.end());
  return Subspace(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& rhs) const {
  if (ambient_ != rhs.ambient_)
    throw std::invalid_argument("subspace intersection: ambient mismatch");
  if (basis_.empty() || rhs.basis_.empty()) return zero(ambient_);
  // x = A a = B b; kernel of [A^T | -B^T] (columns of A^T span this).
  Matrix a = Matrix::from_rows(basis_, ambient_).transpose();
  Matrix b = Matrix::from_rows(rhs.basis_, ambient_).transpose() * Rational(-1);
  std::vector<Vec> vecs;
  for (const auto& k : nullspace(Matrix::hstack(a, b))) {
    Vec coeff(k.begin(), k.begin() + static_cast<long>(basis_.size()));
    vecs.push_back(a.apply(coeff));
  }
  return Subspace(ambient_, vecs);
}

}  // namespace carnot
