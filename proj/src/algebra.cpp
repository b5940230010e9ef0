#include "carnot/algebra.hpp"

#include <numeric>
#include <stdexcept>

namespace carnot {

StratifiedAlgebra::StratifiedAlgebra(std::vector<std::size_t> layer_dims,
                                     const std::vector<BracketEntry>& entries,
                                     bool allow_small_dim)
    : layer_dims_(std::move(layer_dims)), allow_small_dim_(allow_small_dim) {
  if (layer_dims_.empty()) throw std::invalid_argument("no layers");
  for (auto d : layer_dims_)
    if (d == 0) throw std::invalid_argument("zero layer dimension");
  offsets_.resize(layer_dims_.size());
  std::size_t off = 0;
  for (std::size_t j = 0; j < layer_dims_.size(); ++j) {
    offsets_[j] = off;
    off += layer_dims_[j];
  }
  dim_ = off;

  table_.assign(dim_, std::vector<Vec>(dim_, Vec(dim_, Rational(0))));
  std::vector<std::vector<bool>> given(dim_, std::vector<bool>(dim_, false));
  for (const auto& e : entries) {
    if (e.left >= dim_ || e.right >= dim_)
      throw std::invalid_argument("bracket entry index out of range");
    if (e.value.size() != dim_)
      throw std::invalid_argument("bracket entry value has wrong dimension");
    Vec neg(dim_);
    for (std::size_t i = 0; i < dim_; ++i) neg[i] = -e.value[i];
    if (given[e.left][e.right]) {
      if (table_[e.left][e.right] != e.value)
        throw std::invalid_argument("conflicting bracket entries");
    } else if (given[e.right][e.left]) {
      if (table_[e.right][e.left] != neg)
        throw std::invalid_argument("bracket entries inconsistent with antisymmetry");
    }
    table_[e.left][e.right] = e.value;
    table_[e.right][e.left] = std::move(neg);
    given[e.left][e.right] = given[e.right][e.left] = true;
  }
}

std::size_t StratifiedAlgebra::layer_of(std::size_t idx) const {
  for (std::size_t j = layer_dims_.size(); j >= 1; --j)
    if (idx >= offsets_[j - 1]) return j;
  throw std::out_of_range("basis index out of range");
}

Vec StratifiedAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket: dimension mismatch");
  Vec out(dim_, Rational(0));
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (y[b] == 0) continue;
      Rational c = x[a] * y[b];
      add_scaled(out, c, table_[a][b]);
    }
  }
  return out;
}

Matrix StratifiedAlgebra::ad(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t b = 0; b < dim_; ++b) {
    Vec col(dim_, Rational(0));
    for (std::size_t a = 0; a < dim_; ++a)
      if (x[a] != 0) add_scaled(col, x[a], table_[a][b]);
    m.set_col(b, col);
  }
  return m;
}

Vec StratifiedAlgebra::layer_component(const Vec& x, std::size_t j) const {
  Vec out(layer_dim(j));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[layer_offset(j) + i];
  return out;
}

Vec StratifiedAlgebra::embed_layer(const Vec& local, std::size_t j) const {
  if (local.size() != layer_dim(j))
    throw std::invalid_argument("embed_layer: dimension mismatch");
  Vec out(dim_, Rational(0));
  for (std::size_t i = 0; i < local.size(); ++i) out[layer_offset(j) + i] = local[i];
  return out;
}

ValidationReport StratifiedAlgebra::validate() const {
  ValidationReport rep;
  using K = ValidationIssue::Kind;
  if (dim_ < 3 && !allow_small_dim_)
    rep.issues.push_back({K::Dimension, {}, "total dimension " + std::to_string(dim_) +
                                                " is below 3"});

  // Antisymmetry, including [e_a, e_a] = 0.
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = a; b < dim_; ++b) {
      Vec sum = table_[a][b];
      for (std::size_t i = 0; i < dim_; ++i) sum[i] += table_[b][a][i];
      if (!is_zero(sum))
        rep.issues.push_back({K::Antisymmetry, {a, b},
                              "[e" + std::to_string(a) + ",e" + std::to_string(b) +
                                  "] + [e" + std::to_string(b) + ",e" +
                                  std::to_string(a) + "] != 0"});
    }

  // Grading: [g_{-i}, g_{-j}] in g_{-i-j}.
  const std::size_t s = step();
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = a + 1; b < dim_; ++b) {
      std::size_t target = layer_of(a) + layer_of(b);
      for (std::size_t m = 0; m < dim_; ++m) {
        if (table_[a][b][m] == 0) continue;
        if (target > s || layer_of(m) != target) {
          rep.issues.push_back({K::Grading, {a, b},
                                "bracket [e" + std::to_string(a) + ",e" +
                                    std::to_string(b) + "] leaves layer " +
                                    std::to_string(target)});
          break;
        }
      }
    }

  // Jacobi on all basis triples.
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = a + 1; b < dim_; ++b)
      for (std::size_t c = b + 1; c < dim_; ++c) {
        Vec sum = bracket(table_[a][b], unit(c));
        add_scaled(sum, Rational(1), bracket(table_[b][c], unit(a)));
        add_scaled(sum, Rational(1), bracket(table_[c][a], unit(b)));
        if (!is_zero(sum))
          rep.issues.push_back({K::Jacobi, {a, b, c},
                                "Jacobi identity fails on (e" + std::to_string(a) +
                                    ",e" + std::to_string(b) + ",e" +
                                    std::to_string(c) + ")"});
      }

  // Stratification: [g_{-j}, g_{-1}] = g_{-j-1} for j < s, and [g_{-s}, g_{-1}] = 0.
  for (std::size_t j = 1; j <= s; ++j) {
    std::vector<Vec> spans;
    for (std::size_t i = 0; i < layer_dim(j); ++i)
      for (std::size_t i1 = 0; i1 < layer_dim(1); ++i1)
        spans.push_back(table_[layer_offset(j) + i][layer_offset(1) + i1]);
    Subspace sp(dim_, spans);
    if (j < s) {
      std::vector<Vec> next;
      for (std::size_t i = 0; i < layer_dim(j + 1); ++i) {
        Vec v(dim_, Rational(0));
        v[layer_offset(j + 1) + i] = 1;
        next.push_back(std::move(v));
      }
      if (!(sp == Subspace(dim_, next)))
        rep.issues.push_back({K::Stratification, {j},
                              "[g_{-" + std::to_string(j) + "}, g_{-1}] does not equal g_{-" +
                                  std::to_string(j + 1) + "}"});
    } else if (sp.dim() != 0) {
      rep.issues.push_back({K::Stratification, {j},
                            "[g_{-" + std::to_string(s) + "}, g_{-1}] is nonzero"});
    }
  }
  return rep;
}

Vec StratifiedAlgebra::unit(std::size_t a) const {
  Vec v(dim_, Rational(0));
  v[a] = 1;
  return v;
}

Matrix LayerMap::ambient(const StratifiedAlgebra& alg) const {
  Matrix m(alg.dim(), alg.dim());
  for (std::size_t j = 1; j <= alg.step(); ++j) {
    const Matrix& b = blocks[j - 1];
    std::size_t off = alg.layer_offset(j);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(off + r, off + c) = b(r, c);
  }
  return m;
}

Vec LayerMap::apply(const StratifiedAlgebra& alg, const Vec& x) const {
  Vec out(alg.dim(), Rational(0));
  for (std::size_t j = 1; j <= alg.step(); ++j) {
    Vec local = blocks[j - 1].apply(alg.layer_component(x, j));
    for (std::size_t i = 0; i < local.size(); ++i) out[alg.layer_offset(j) + i] = local[i];
  }
  return out;
}

LayerMap LayerMap::from_ambient(const StratifiedAlgebra& alg, const Matrix& m) {
  LayerMap lm;
  for (std::size_t j = 1; j <= alg.step(); ++j) {
    Matrix b(alg.layer_dim(j), alg.layer_dim(j));
    std::size_t off = alg.layer_offset(j);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = m(off + r, off + c);
    lm.blocks.push_back(std::move(b));
  }
  return lm;
}

std::vector<Subspace> descending_central_series(const StratifiedAlgebra& alg) {
  std::vector<Subspace> series{Subspace::full(alg.dim())};
  while (series.back().dim() > 0) {
    std::vector<Vec> spans;
    for (std::size_t a = 0; a < alg.dim(); ++a) {
      Vec ea(alg.dim(), Rational(0));
      ea[a] = 1;
      for (const auto& v : series.back().basis()) spans.push_back(alg.bracket(ea, v));
    }
    series.emplace_back(alg.dim(), spans);
  }
  return series;
}

Subspace center(const StratifiedAlgebra& alg) {
  // Stack the maps X -> [X, e_b] over all b; the centre is the kernel.
  const std::size_t n = alg.dim();
  Matrix big(n * n, n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      const Vec& v = alg.basis_bracket(a, b);
      for (std::size_t m = 0; m < n; ++m) big(b * n + m, a) = v[m];
    }
  return Subspace(n, nullspace(big));
}

LayerMap dilation(const StratifiedAlgebra& alg, const Rational& t) {
  if (t <= 0) throw std::invalid_argument("dilation parameter must be positive");
  LayerMap lm;
  Rational p = 1;
  for (std::size_t j = 1; j <= alg.step(); ++j) {
    p *= t;
    lm.blocks.push_back(Matrix::identity(alg.layer_dim(j)) * p);
  }
  return lm;
}

LayerMap grading_derivation(const StratifiedAlgebra& alg) {
  LayerMap lm;
  for (std::size_t j = 1; j <= alg.step(); ++j)
    lm.blocks.push_back(Matrix::identity(alg.layer_dim(j)) * Rational(static_cast<long>(j)));
  return lm;
}

bool is_derivation(const StratifiedAlgebra& alg, const Matrix& d) {
  const std::size_t n = alg.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec lhs = d.apply(alg.basis_bracket(a, b));
      Vec rhs = alg.bracket(d.col(a), [&] {
        Vec eb(n, Rational(0));
        eb[b] = 1;
        return eb;
      }());
      Vec ea(n, Rational(0));
      ea[a] = 1;
      add_scaled(rhs, Rational(1), alg.bracket(ea, d.col(b)));
      for (std::size_t i = 0; i < n; ++i)
        if (lhs[i] != rhs[i]) return false;
    }
  return true;
}

bool is_automorphism(const StratifiedAlgebra& alg, const Matrix& t) {
  const std::size_t n = alg.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec lhs = t.apply(alg.basis_bracket(a, b));
      Vec rhs = alg.bracket(t.col(a), t.col(b));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace carnot
