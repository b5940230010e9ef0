#include "carnot/structure.hpp"

#include <stdexcept>

namespace carnot {

Vec LieTable::bracket(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  Vec out(n, Rational(0));
  for (std::size_t a = 0; a < n; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < n; ++b)
      if (y[b] != 0) add_scaled(out, x[a] * y[b], table[a][b]);
  }
  return out;
}

Matrix LieTable::ad(const Vec& x) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t b = 0; b < n; ++b) {
    Vec col(n, Rational(0));
    for (std::size_t a = 0; a < n; ++a)
      if (x[a] != 0) add_scaled(col, x[a], table[a][b]);
    m.set_col(b, col);
  }
  return m;
}

Vec LieTable::unit(std::size_t i) const {
  Vec v(dim(), Rational(0));
  v[i] = 1;
  return v;
}

LieTable LieTable::from_algebra(const StratifiedAlgebra& alg) {
  LieTable L;
  const std::size_t n = alg.dim();
  L.table.assign(n, std::vector<Vec>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) L.table[a][b] = alg.basis_bracket(a, b);
  return L;
}

LieTable LieTable::from_prolongation(const Prolongation& p) {
  if (!p.has_table()) throw std::logic_error("prolongation table not synthesized");
  LieTable L;
  L.table = p.table;
  return L;
}

LieTable LieTable::direct_sum(const LieTable& a, const LieTable& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  LieTable L;
  L.table.assign(n, std::vector<Vec>(n, Vec(n, Rational(0))));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t m = 0; m < na; ++m) L.table[i][j][m] = a.table[i][j][m];
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t m = 0; m < nb; ++m) L.table[na + i][na + j][na + m] = b.table[i][j][m];
  return L;
}

SymmetricForm killing_form(const LieTable& L) {
  const std::size_t n = L.dim();
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad(L.unit(i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational tr(0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) tr += ads[i](a, b) * ads[j](b, a);
      k(i, j) = tr;
      k(j, i) = tr;
    }
  return SymmetricForm(std::move(k));
}

Subspace derived_subspace(const LieTable& L, const Subspace& u) {
  std::vector<Vec> spans;
  const auto& basis = u.basis();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      spans.push_back(L.bracket(basis[a], basis[b]));
  return Subspace(L.dim(), spans);
}

Subspace solvable_radical(const LieTable& L) {
  const std::size_t n = L.dim();
  // [L, L] basis, then the Killing-orthogonal.
  std::vector<Vec> comm;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) comm.push_back(L.table[a][b]);
  Subspace derived(n, comm);
  SymmetricForm b = killing_form(L);
  std::vector<Vec> rows;
  for (const auto& d : derived.basis()) rows.push_back(b.mat.apply(d));
  Subspace rad =
      rows.empty() ? Subspace::full(n) : Subspace(n, nullspace(Matrix::from_rows(rows, n)));
  // Must be solvable: the derived series terminates.
  Subspace cur = rad;
  for (std::size_t it = 0; it <= n && cur.dim() > 0; ++it) {
    Subspace next = derived_subspace(L, cur);
    if (next.dim() >= cur.dim() && next.dim() > 0)
      throw std::runtime_error("radical candidate has non-terminating derived series");
    cur = next;
  }
  return rad;
}

bool is_H_graded(const Prolongation& p, const Subspace& sub) {
  const std::size_t n = p.total_dim();
  for (const auto& v : sub.basis()) {
    for (int k = p.min_degree(); k <= p.top_degree(); ++k) {
      Vec proj(n, Rational(0));
      const std::size_t off = p.global_offset(k);
      for (std::size_t i = 0; i < p.degree_dim(k); ++i) proj[off + i] = v[off + i];
      if (!sub.contains(proj)) return false;
    }
  }
  return true;
}

namespace {

// Greedy Lie-generating subset of the basis.
std::vector<std::size_t> generating_basis_indices(const LieTable& L) {
  const std::size_t n = L.dim();
  std::vector<std::size_t> gens;
  Subspace span = Subspace::zero(n);
  auto close = [&](Subspace sp) {
    for (;;) {
      Subspace next = sp.sum(derived_subspace(L, sp));
      if (next.dim() == sp.dim()) return sp;
      sp = std::move(next);
    }
  };
  for (std::size_t i = 0; i < n && span.dim() < n; ++i) {
    if (span.contains(L.unit(i))) continue;
    gens.push_back(i);
    span = close(span.sum(Subspace(n, {L.unit(i)})));
  }
  return gens;
}

}  // namespace

std::size_t centroid_dim(const LieTable& L, const std::vector<int>* degrees) {
  const std::size_t n = L.dim();
  if (degrees && degrees->size() != n)
    throw std::invalid_argument("centroid: degree vector size mismatch");
  // Unknowns: entries phi(a, b), restricted to equal degrees when graded.
  std::vector<std::ptrdiff_t> uidx(n * n, -1);
  std::size_t nu = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!degrees || (*degrees)[a] == (*degrees)[b]) uidx[a * n + b] = static_cast<std::ptrdiff_t>(nu++);
  auto gens = generating_basis_indices(L);
  std::vector<Vec> rows;
  for (auto x : gens) {
    Matrix adx = L.ad(L.unit(x));
    // (phi adx - adx phi)(r, c) = 0.
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Vec row(nu, Rational(0));
        bool nonzero = false;
        for (std::size_t b = 0; b < n; ++b) {
          auto u = uidx[r * n + b];
          if (u >= 0 && adx(b, c) != 0) {
            row[static_cast<std::size_t>(u)] += adx(b, c);
            nonzero = true;
          }
        }
        for (std::size_t a = 0; a < n; ++a) {
          auto u = uidx[a * n + c];
          if (u >= 0 && adx(r, a) != 0) {
            row[static_cast<std::size_t>(u)] -= adx(r, a);
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) return nu;
  return nu - rank(Matrix::from_rows(rows, nu));
}

bool no_proper_basis_ideal(const LieTable& L) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Subspace ideal(n, {L.unit(i)});
    for (;;) {
      std::vector<Vec> more;
      for (const auto& v : ideal.basis())
        for (std::size_t a = 0; a < n; ++a) more.push_back(L.bracket(L.unit(a), v));
      Subspace next = ideal.sum(Subspace(n, more));
      if (next.dim() == ideal.dim()) break;
      ideal = std::move(next);
    }
    if (ideal.dim() < n) return false;
  }
  return true;
}

RankOneCertificate rank_one_certificate(const Prolongation& p) {
  RankOneCertificate cert;
  const std::size_t n = p.total_dim();
  Vec h = p.global_H();
  Subspace z(n, nullspace(p.global_ad(h)));
  cert.centralizer_dim = z.dim();
  // (a) centralizer of H lies in the degree-0 layer.
  cert.centralizer_in_degree0 = true;
  const std::size_t off0 = p.global_offset(0);
  for (const auto& v : z.basis())
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] != 0 && (i < off0 || i >= off0 + p.degree_dim(0)))
        cert.centralizer_in_degree0 = false;
  // (b) and (c): Killing restricted to the centralizer.
  SymmetricForm b = killing_form(LieTable::from_prolongation(p));
  cert.killing_positive_on_H = b.eval(h, h) > 0;
  Matrix restricted(z.dim(), z.dim());
  for (std::size_t i = 0; i < z.dim(); ++i)
    for (std::size_t j = 0; j < z.dim(); ++j)
      restricted(i, j) = b.eval(z.basis()[i], z.basis()[j]);
  cert.centralizer_signature = signature(SymmetricForm(std::move(restricted)));
  cert.signature_ok = cert.centralizer_signature ==
                      Signature{1, z.dim() > 0 ? z.dim() - 1 : 0, 0};
  return cert;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Rigid: return "RIGID";
    case Verdict::Iwasawa: return "IWASAWA";
    default: return "INCONCLUSIVE";
  }
}

ClassificationReport classify(const StratifiedAlgebra& alg, std::size_t max_degree) {
  ClassificationReport rep;
  DerivationSpace conf = conf_derivations(alg);
  rep.conf_der_dim = conf.dim();
  Prolongation p = prolong(alg, conf.basis, max_degree);
  rep.truncated = p.truncated;
  for (int k = p.min_degree(); k <= p.top_degree(); ++k) rep.layer_dims[k] = p.degree_dim(k);
  rep.total_dim = p.total_dim();
  if (p.truncated) {
    rep.notes.push_back("degree cap exceeded; prolongation did not terminate");
    return rep;
  }

  LieTable L = LieTable::from_prolongation(p);
  rep.killing_signature = signature(killing_form(L));
  Subspace rad = solvable_radical(L);
  rep.radical_dim = rad.dim();
  rep.radical_H_graded = is_H_graded(p, rad);

  if (p.degree_dim(1) == 0) {
    if (rep.total_dim == alg.dim() + conf.dim()) {
      rep.verdict = Verdict::Rigid;
    } else {
      rep.notes.push_back("dimension mismatch: total != dim g + dim ConfDer");
    }
    return rep;
  }

  std::vector<int> degrees(rep.total_dim);
  for (std::size_t i = 0; i < rep.total_dim; ++i) degrees[i] = p.degree_of_global(i);
  rep.centroid_dimension = centroid_dim(L, &degrees);
  bool simple = rep.radical_dim == 0 && rep.centroid_dimension == 1;
  if (rep.radical_dim == 0 && rep.centroid_dimension != 1) {
    // Fallback: explicit graded-ideal search.
    simple = no_proper_basis_ideal(L);
    if (simple) rep.notes.push_back("simplicity established by ideal search");
  }
  rep.rank_one_applicable = rep.radical_dim == 0;
  if (rep.rank_one_applicable) rep.rank_one = rank_one_certificate(p);

  if (simple && rep.rank_one_applicable && rep.rank_one.ok() &&
      rep.killing_signature.n_zero == 0) {
    rep.verdict = Verdict::Iwasawa;
  } else {
    rep.notes.push_back("certificate failure with nonzero first prolongation layer");
  }
  return rep;
}

}  // namespace carnot
