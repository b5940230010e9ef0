#include "carnot/derivations.hpp"

#include <stdexcept>

namespace carnot {

namespace {

std::size_t unknown_count(const StratifiedAlgebra& alg) {
  std::size_t n = 0;
  for (std::size_t j = 1; j <= alg.step(); ++j) n += alg.layer_dim(j) * alg.layer_dim(j);
  return n;
}

std::size_t block_offset(const StratifiedAlgebra& alg, std::size_t j) {
  std::size_t off = 0;
  for (std::size_t l = 1; l < j; ++l) off += alg.layer_dim(l) * alg.layer_dim(l);
  return off;
}

// Unknown index of block-j entry (r, c), row-major.
std::size_t uidx(const StratifiedAlgebra& alg, std::size_t j, std::size_t r, std::size_t c) {
  return block_offset(alg, j) + r * alg.layer_dim(j) + c;
}

// Rows expressing D[e_a, e_b] - [De_a, e_b] - [e_a, De_b] = 0 for all pairs,
// over the block-diagonal unknowns.
std::vector<Vec> derivation_rows(const StratifiedAlgebra& alg) {
  const std::size_t n = alg.dim();
  const std::size_t nu = unknown_count(alg);
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t ja = alg.layer_of(a);
    const std::size_t ia = a - alg.layer_offset(ja);
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t jb = alg.layer_of(b);
      const std::size_t ib = b - alg.layer_offset(jb);
      const Vec& c = alg.basis_bracket(a, b);
      std::vector<Vec> eq(n, Vec(nu, Rational(0)));
      // D[e_a, e_b]: bracket components routed through the block of their layer.
      for (std::size_t m = 0; m < n; ++m) {
        if (c[m] == 0) continue;
        const std::size_t jm = alg.layer_of(m);
        const std::size_t im = m - alg.layer_offset(jm);
        for (std::size_t r = 0; r < alg.layer_dim(jm); ++r)
          eq[alg.layer_offset(jm) + r][uidx(alg, jm, r, im)] += c[m];
      }
      // -[De_a, e_b]: De_a = sum_r u(ja,r,ia) f_r.
      for (std::size_t r = 0; r < alg.layer_dim(ja); ++r) {
        const Vec& br = alg.basis_bracket(alg.layer_offset(ja) + r, b);
        for (std::size_t m = 0; m < n; ++m)
          if (br[m] != 0) eq[m][uidx(alg, ja, r, ia)] -= br[m];
      }
      // -[e_a, De_b].
      for (std::size_t r = 0; r < alg.layer_dim(jb); ++r) {
        const Vec& br = alg.basis_bracket(a, alg.layer_offset(jb) + r);
        for (std::size_t m = 0; m < n; ++m)
          if (br[m] != 0) eq[m][uidx(alg, jb, r, ib)] -= br[m];
      }
      for (auto& row : eq)
        if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  return rows;
}

DerivationSpace space_from_nullspace(const StratifiedAlgebra& alg,
                                     const std::vector<Vec>& rows, DerivationKind kind) {
  const std::size_t nu = unknown_count(alg);
  std::vector<Vec> basis =
      rows.empty() ? Subspace::full(nu).basis() : nullspace(Matrix::from_rows(rows, nu));
  DerivationSpace sp{kind, {}};
  for (const auto& v : basis) sp.basis.push_back(unflatten_layer_map(alg, v));
  return sp;
}

}  // namespace

Vec flatten_layer_map(const StratifiedAlgebra& alg, const LayerMap& m) {
  Vec v(unknown_count(alg), Rational(0));
  for (std::size_t j = 1; j <= alg.step(); ++j)
    for (std::size_t r = 0; r < alg.layer_dim(j); ++r)
      for (std::size_t c = 0; c < alg.layer_dim(j); ++c)
        v[uidx(alg, j, r, c)] = m.blocks[j - 1](r, c);
  return v;
}

LayerMap unflatten_layer_map(const StratifiedAlgebra& alg, const Vec& coords) {
  LayerMap m;
  for (std::size_t j = 1; j <= alg.step(); ++j) {
    Matrix b(alg.layer_dim(j), alg.layer_dim(j));
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = coords[uidx(alg, j, r, c)];
    m.blocks.push_back(std::move(b));
  }
  return m;
}

LayerMap layer_map_commutator(const StratifiedAlgebra& alg, const LayerMap& a,
                              const LayerMap& b) {
  LayerMap out;
  for (std::size_t j = 1; j <= alg.step(); ++j)
    out.blocks.push_back(a.blocks[j - 1] * b.blocks[j - 1] -
                         b.blocks[j - 1] * a.blocks[j - 1]);
  return out;
}

DerivationSpace strata_preserving_derivations(const StratifiedAlgebra& alg) {
  return space_from_nullspace(alg, derivation_rows(alg), DerivationKind::StrataPreserving);
}

DerivationSpace iso_derivations(const StratifiedAlgebra& alg) {
  auto rows = derivation_rows(alg);
  // Skew-symmetry on g_{-1} with the declared-orthonormal base Gram.
  const std::size_t d1 = alg.layer_dim(1);
  const std::size_t nu = unknown_count(alg);
  for (std::size_t r = 0; r < d1; ++r)
    for (std::size_t c = r; c < d1; ++c) {
      Vec row(nu, Rational(0));
      row[uidx(alg, 1, r, c)] += 1;
      row[uidx(alg, 1, c, r)] += 1;
      rows.push_back(std::move(row));
    }
  return space_from_nullspace(alg, rows, DerivationKind::Isometric);
}

DerivationSpace conf_derivations(const StratifiedAlgebra& alg) {
  DerivationSpace iso = iso_derivations(alg);
  DerivationSpace conf{DerivationKind::Conformal, {grading_derivation(alg)}};
  for (auto& m : iso.basis) conf.basis.push_back(std::move(m));
  // H is symmetric on g_{-1}, never in IsoDer; sanity-check independence.
  std::vector<Vec> flat;
  for (const auto& m : conf.basis) flat.push_back(flatten_layer_map(alg, m));
  if (rank(Matrix::from_rows(flat, flat.empty() ? 0 : flat[0].size())) != conf.basis.size())
    throw std::runtime_error("ConfDer basis is not independent");
  return conf;
}

}  // namespace carnot
