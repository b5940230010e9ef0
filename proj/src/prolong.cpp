#include "carnot/prolong.hpp"

#include <stdexcept>

namespace carnot {

namespace {

struct BuildCtx {
  const StratifiedAlgebra& alg;
  const std::vector<LayerMap>& g0;
  const std::vector<ProlongationLayer>& built;

  std::size_t dim_of_degree(int d) const {
    const int s = static_cast<int>(alg.step());
    if (d < -s) return 0;
    if (d < 0) return alg.layer_dim(static_cast<std::size_t>(-d));
    if (d == 0) return g0.size();
    if (d <= static_cast<int>(built.size())) return built[d - 1].basis.size();
    return 0;
  }

  // [B, e^{(p)}_z] for the basis element B of degree m >= 0, in degree (m-p)
  // coordinates.
  Vec elem_bracket(int m, std::size_t alpha, std::size_t p, std::size_t z) const {
    if (m == 0) return g0[alpha].blocks[p - 1].col(z);
    return built[m - 1].basis[alpha].comp[p - 1].col(z);
  }
};

// Layer bracket map beta_p : g_{-1} (x) g_{-(p-1)} -> g_{-p}; column index
// (i, z) = i * d_{p-1} + z.
Matrix layer_bracket_map(const StratifiedAlgebra& alg, std::size_t p) {
  const std::size_t d1 = alg.layer_dim(1);
  const std::size_t dz = alg.layer_dim(p - 1);
  Matrix b(alg.layer_dim(p), d1 * dz);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t z = 0; z < dz; ++z) {
      Vec v = alg.basis_bracket(alg.layer_offset(1) + i, alg.layer_offset(p - 1) + z);
      b.set_col(i * dz + z, alg.layer_component(v, p));
    }
  return b;
}

}  // namespace

std::size_t Prolongation::degree_dim(int k) const {
  const int s = static_cast<int>(base.step());
  if (k < -s || k > top_degree()) return 0;
  if (k < 0) return base.layer_dim(static_cast<std::size_t>(-k));
  if (k == 0) return g0.size();
  return positive[k - 1].basis.size();
}

std::size_t Prolongation::total_dim() const {
  std::size_t n = 0;
  for (int k = min_degree(); k <= top_degree(); ++k) n += degree_dim(k);
  return n;
}

std::size_t Prolongation::global_offset(int k) const {
  std::size_t off = 0;
  for (int d = min_degree(); d < k; ++d) off += degree_dim(d);
  return off;
}

int Prolongation::degree_of_global(std::size_t idx) const {
  for (int k = min_degree(); k <= top_degree(); ++k) {
    std::size_t off = global_offset(k);
    if (idx >= off && idx < off + degree_dim(k)) return k;
  }
  throw std::out_of_range("global index out of range");
}

Vec Prolongation::unit_global(std::size_t idx) const {
  Vec v(total_dim(), Rational(0));
  v[idx] = 1;
  return v;
}

Vec Prolongation::global_bracket(const Vec& x, const Vec& y) const {
  if (!has_table()) throw std::logic_error("bracket table not synthesized");
  const std::size_t n = total_dim();
  Vec out(n, Rational(0));
  for (std::size_t a = 0; a < n; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (y[b] == 0) continue;
      add_scaled(out, x[a] * y[b], table[a][b]);
    }
  }
  return out;
}

Matrix Prolongation::global_ad(const Vec& x) const {
  const std::size_t n = total_dim();
  Matrix m(n, n);
  for (std::size_t b = 0; b < n; ++b) {
    Vec col(n, Rational(0));
    for (std::size_t a = 0; a < n; ++a)
      if (x[a] != 0) add_scaled(col, x[a], table[a][b]);
    m.set_col(b, col);
  }
  return m;
}

Vec Prolongation::global_H() const {
  Vec h = flatten_layer_map(base, grading_derivation(base));
  Matrix cols(h.size(), g0.size());
  for (std::size_t c = 0; c < g0.size(); ++c) cols.set_col(c, flatten_layer_map(base, g0[c]));
  auto coeff = solve(cols, h);
  if (!coeff) throw std::logic_error("H not in g0");
  Vec out(total_dim(), Rational(0));
  std::size_t off = global_offset(0);
  for (std::size_t c = 0; c < g0.size(); ++c) out[off + c] = (*coeff)[c];
  return out;
}

Vec Prolongation::embed_base(const Vec& x) const {
  Vec out(total_dim(), Rational(0));
  for (std::size_t j = 1; j <= base.step(); ++j) {
    Vec loc = base.layer_component(x, j);
    std::size_t off = global_offset(-static_cast<int>(j));
    for (std::size_t i = 0; i < loc.size(); ++i) out[off + i] = loc[i];
  }
  return out;
}

ProlongationLayer prolong_step(const StratifiedAlgebra& alg,
                               const std::vector<LayerMap>& g0,
                               const std::vector<ProlongationLayer>& built, int k) {
  if (k < 1) throw std::invalid_argument("prolong_step: degree must be >= 1");
  if (static_cast<int>(built.size()) < k - 1)
    throw std::invalid_argument("prolong_step: lower layers not built");
  BuildCtx ctx{alg, g0, built};
  const std::size_t s = alg.step();
  const std::size_t d1 = alg.layer_dim(1);
  ProlongationLayer layer;
  layer.degree = k;
  const std::size_t dprev = ctx.dim_of_degree(k - 1);
  if (dprev == 0) return layer;
  const std::size_t nu = dprev * d1;  // unknown (alpha, i) = alpha*d1 + i

  auto tdim = [&](int d) { return ctx.dim_of_degree(d); };

  // Per-unknown recursive extension u_p : g_{-p} -> g_{k-p}.
  std::vector<std::vector<Matrix>> ucomp(nu);
  for (std::size_t t = 0; t < nu; ++t) {
    ucomp[t].resize(s);
    for (std::size_t p = 1; p <= s; ++p)
      ucomp[t][p - 1] = Matrix(tdim(k - static_cast<int>(p)), alg.layer_dim(p));
  }
  for (std::size_t alpha = 0; alpha < dprev; ++alpha)
    for (std::size_t i = 0; i < d1; ++i) ucomp[alpha * d1 + i][0](alpha, i) = 1;

  // [u1(e_i), e_z] + [e_i, u_{p-1}(e_z)] for unknown t, in degree (k-p)
  // coordinates; ucomp[t][p-2] must already be filled.
  auto pair_value = [&](std::size_t t, std::size_t p, std::size_t i, std::size_t z) {
    const std::size_t alpha = t / d1, i0 = t % d1;
    Vec out(tdim(k - static_cast<int>(p)), Rational(0));
    if (i == i0 && !out.empty())
      add_scaled(out, Rational(1), ctx.elem_bracket(k - 1, alpha, p - 1, z));
    Vec v = ucomp[t][p - 2].col(z);  // u_{p-1}(e_z), degree k-p+1
    const int dv = k - static_cast<int>(p) + 1;
    if (dv >= 0) {
      for (std::size_t g = 0; g < v.size(); ++g)
        if (v[g] != 0) add_scaled(out, -v[g], ctx.elem_bracket(dv, g, 1, i));
    } else if (!out.empty()) {
      const std::size_t q = static_cast<std::size_t>(-dv);
      Vec amb = alg.bracket(alg.unit(alg.layer_offset(1) + i), alg.embed_layer(v, q));
      add_scaled(out, Rational(1), alg.layer_component(amb, q + 1));
    }
    return out;
  };

  std::vector<Vec> crows;
  for (std::size_t p = 2; p <= s + 1; ++p) {
    const std::size_t dz = alg.layer_dim(p - 1);
    // Extend to g_{-p} through chosen bracket preimages.
    if (p <= s) {
      Matrix bp = layer_bracket_map(alg, p);
      for (std::size_t w = 0; w < alg.layer_dim(p); ++w) {
        Vec ew(alg.layer_dim(p), Rational(0));
        ew[w] = 1;
        auto tau = solve(bp, ew);
        if (!tau) throw std::runtime_error("stratification broken: layer not generated");
        for (std::size_t t = 0; t < nu; ++t) {
          Vec colw(tdim(k - static_cast<int>(p)), Rational(0));
          for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t z = 0; z < dz; ++z)
              if ((*tau)[i * dz + z] != 0)
                add_scaled(colw, (*tau)[i * dz + z], pair_value(t, p, i, z));
          ucomp[t][p - 1].set_col(w, colw);
        }
      }
    }
    // Well-definedness: every relation sum [X_i, Z_i] = 0 must map to zero.
    const std::size_t target = tdim(static_cast<int>(k) - static_cast<int>(p));
    if (target == 0) continue;
    std::vector<Vec> rels;
    if (p <= s) {
      rels = nullspace(layer_bracket_map(alg, p));
    } else {
      // [g_{-1}, g_{-s}] = 0: every elementary tensor is a relation.
      for (std::size_t c = 0; c < d1 * dz; ++c) {
        Vec r(d1 * dz, Rational(0));
        r[c] = 1;
        rels.push_back(std::move(r));
      }
    }
    for (const Vec& r : rels) {
      std::vector<Vec> rows(target, Vec(nu, Rational(0)));
      for (std::size_t t = 0; t < nu; ++t) {
        Vec val(target, Rational(0));
        for (std::size_t i = 0; i < d1; ++i)
          for (std::size_t z = 0; z < dz; ++z)
            if (r[i * dz + z] != 0) add_scaled(val, r[i * dz + z], pair_value(t, p, i, z));
        for (std::size_t m = 0; m < target; ++m) rows[m][t] = val[m];
      }
      for (auto& row : rows)
        if (!is_zero(row)) crows.push_back(std::move(row));
    }
  }

  std::vector<Vec> sols = crows.empty() ? Subspace::full(nu).basis()
                                        : nullspace(Matrix::from_rows(crows, nu));
  for (const auto& c : sols) {
    ProlongElement e;
    e.comp.resize(s);
    for (std::size_t p = 1; p <= s; ++p) {
      Matrix m(tdim(k - static_cast<int>(p)), alg.layer_dim(p));
      for (std::size_t t = 0; t < nu; ++t)
        if (c[t] != 0) m = m + ucomp[t][p - 1] * c[t];
      e.comp[p - 1] = std::move(m);
    }
    layer.basis.push_back(std::move(e));
  }
  return layer;
}

Prolongation prolong(const StratifiedAlgebra& alg, std::vector<LayerMap> g0,
                     std::size_t max_degree) {
  if (g0.empty()) throw std::invalid_argument("g0 is empty");
  // g0 must be a subalgebra of Der(g) containing H.
  const std::size_t flat_dim = flatten_layer_map(alg, g0[0]).size();
  Matrix cols(flat_dim, g0.size());
  for (std::size_t c = 0; c < g0.size(); ++c) {
    if (!is_derivation(alg, g0[c].ambient(alg)))
      throw std::invalid_argument("g0 element is not a derivation");
    cols.set_col(c, flatten_layer_map(alg, g0[c]));
  }
  if (!solve(cols, flatten_layer_map(alg, grading_derivation(alg))))
    throw std::invalid_argument("H not in g0");
  for (std::size_t a = 0; a < g0.size(); ++a)
    for (std::size_t b = a + 1; b < g0.size(); ++b)
      if (!solve(cols, flatten_layer_map(alg, layer_map_commutator(alg, g0[a], g0[b]))))
        throw std::invalid_argument("g0 is not closed under brackets");

  Prolongation p{alg, std::move(g0), {}, false, {}};
  for (std::size_t k = 1; k <= max_degree; ++k) {
    ProlongationLayer layer =
        prolong_step(p.base, p.g0, p.positive, static_cast<int>(k));
    if (layer.dim() == 0) {
      synthesize_brackets(p);
      return p;
    }
    p.positive.push_back(std::move(layer));
  }
  p.truncated = true;
  return p;
}

void synthesize_brackets(Prolongation& p) {
  const StratifiedAlgebra& alg = p.base;
  const std::size_t s = alg.step();
  const int t = p.top_degree();
  const std::size_t n = p.total_dim();
  const std::size_t d1 = alg.layer_dim(1);
  p.table.assign(n, std::vector<Vec>(n, Vec(n, Rational(0))));
  auto gidx = [&](int deg, std::size_t i) { return p.global_offset(deg) + i; };

  // Negative x negative: the base algebra.
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    const int da = -static_cast<int>(alg.layer_of(a));
    const std::size_t ia = a - alg.layer_offset(static_cast<std::size_t>(-da));
    for (std::size_t b = 0; b < alg.dim(); ++b) {
      const int db = -static_cast<int>(alg.layer_of(b));
      const std::size_t ib = b - alg.layer_offset(static_cast<std::size_t>(-db));
      p.table[gidx(da, ia)][gidx(db, ib)] = p.embed_base(alg.basis_bracket(a, b));
    }
  }

  // Nonnegative x negative: component families.
  BuildCtx ctx{alg, p.g0, p.positive};
  for (int m = 0; m <= t; ++m)
    for (std::size_t alpha = 0; alpha < p.degree_dim(m); ++alpha)
      for (std::size_t q = 1; q <= s; ++q)
        for (std::size_t z = 0; z < alg.layer_dim(q); ++z) {
          Vec c = ctx.elem_bracket(m, alpha, q, z);
          Vec glob(n, Rational(0));
          const int dtar = m - static_cast<int>(q);
          const std::size_t off = p.global_offset(dtar);
          for (std::size_t i = 0; i < c.size(); ++i) glob[off + i] = c[i];
          const std::size_t ga = gidx(m, alpha);
          const std::size_t gb = gidx(-static_cast<int>(q), z);
          p.table[ga][gb] = glob;
          for (std::size_t i = 0; i < n; ++i) p.table[gb][ga][i] = -glob[i];
        }

  // Degree-0 commutators, expressed in the g0 basis.
  const std::size_t flat_dim =
      p.g0.empty() ? 0 : flatten_layer_map(alg, p.g0[0]).size();
  Matrix g0cols(flat_dim, p.g0.size());
  for (std::size_t c = 0; c < p.g0.size(); ++c)
    g0cols.set_col(c, flatten_layer_map(alg, p.g0[c]));
  for (std::size_t a = 0; a < p.g0.size(); ++a)
    for (std::size_t b = a + 1; b < p.g0.size(); ++b) {
      auto coeff = solve(
          g0cols, flatten_layer_map(alg, layer_map_commutator(alg, p.g0[a], p.g0[b])));
      if (!coeff) throw std::runtime_error("g0 is not closed under brackets");
      Vec glob(n, Rational(0));
      const std::size_t off = p.global_offset(0);
      for (std::size_t c = 0; c < p.g0.size(); ++c) glob[off + c] = (*coeff)[c];
      p.table[gidx(0, a)][gidx(0, b)] = glob;
      for (std::size_t i = 0; i < n; ++i) p.table[gidx(0, b)][gidx(0, a)][i] = -glob[i];
    }

  // Flattened u1 columns per positive degree, for identifying products.
  std::vector<Matrix> u1cols(static_cast<std::size_t>(t) + 1);
  for (int d = 1; d <= t; ++d) {
    const std::size_t rows = p.degree_dim(d - 1) * d1;
    Matrix m(rows, p.degree_dim(d));
    for (std::size_t g = 0; g < p.degree_dim(d); ++g) {
      const Matrix& u1 = p.positive[d - 1].basis[g].comp[0];
      for (std::size_t r = 0; r < u1.rows(); ++r)
        for (std::size_t c = 0; c < u1.cols(); ++c) m(r * d1 + c, g) = u1(r, c);
    }
    u1cols[static_cast<std::size_t>(d)] = std::move(m);
  }

  // Nonnegative pairs with positive total degree, by increasing total degree:
  // [u, v] is the unique degree (m+k) element acting on g_{-1} by
  // X -> [u, [v, X]] - [v, [u, X]].
  for (int total = 1; total <= 2 * t; ++total) {
    for (int m = std::max(0, total - t); m <= total - m; ++m) {
      const int kk = total - m;
      if (kk > t) continue;
      for (std::size_t alpha = 0; alpha < p.degree_dim(m); ++alpha) {
        std::size_t beta0 = (m == kk) ? alpha + 1 : 0;
        for (std::size_t beta = beta0; beta < p.degree_dim(kk); ++beta) {
          const std::size_t prev = p.degree_dim(total - 1);
          Vec w1(prev * d1, Rational(0));
          bool escapes = false;
          for (std::size_t i = 0; i < d1; ++i) {
            const Vec& vy = p.table[gidx(kk, beta)][gidx(-1, i)];
            Vec term = p.global_bracket(p.unit_global(gidx(m, alpha)), vy);
            const Vec& uy = p.table[gidx(m, alpha)][gidx(-1, i)];
            Vec term2 = p.global_bracket(p.unit_global(gidx(kk, beta)), uy);
            for (std::size_t c = 0; c < n; ++c) term[c] -= term2[c];
            // The action must live in degree total-1.
            const std::size_t off = p.global_offset(total - 1);
            for (std::size_t c = 0; c < n; ++c) {
              if (term[c] == 0) continue;
              if (total - 1 > t || c < off || c >= off + prev) {
                escapes = true;
                break;
              }
            }
            if (escapes) break;
            for (std::size_t r = 0; r < prev; ++r) w1[r * d1 + i] = term[off + r];
          }
          if (escapes || (total > t && !is_zero(w1)))
            throw std::runtime_error("bracket escapes computed layer");
          if (total > t) continue;  // zero product
          auto coeff = solve(u1cols[static_cast<std::size_t>(total)], w1);
          if (!coeff) throw std::runtime_error("bracket escapes computed layer");
          Vec glob(n, Rational(0));
          const std::size_t off = p.global_offset(total);
          for (std::size_t c = 0; c < coeff->size(); ++c) glob[off + c] = (*coeff)[c];
          p.table[gidx(m, alpha)][gidx(kk, beta)] = glob;
          for (std::size_t i = 0; i < n; ++i)
            p.table[gidx(kk, beta)][gidx(m, alpha)][i] = -glob[i];
        }
      }
    }
  }
}

}  // namespace carnot
