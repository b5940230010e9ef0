#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "carnot/algebra.hpp"
#include "carnot/linalg.hpp"
#include "carnot/matrix.hpp"

namespace testutil {

using carnot::Matrix;
using carnot::Rational;
using carnot::Vec;

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  return carnot::make_rational(num(rng), den(rng));
}

inline Vec random_vec(std::mt19937& rng, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

/// Exact rational orthogonal matrix: a signed permutation composed with
/// Givens rotations built from Pythagorean triples.
inline Matrix random_orthogonal(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> sign(0, 1);
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) t(perm[i], i) = sign(rng) ? 1 : -1;
  if (n < 2) return t;

  static const long triples[3][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}};
  std::uniform_int_distribution<std::size_t> pick(0, n - 1), tp(0, 2);
  for (std::size_t rep = 0; rep < n + 2; ++rep) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const long* abc = triples[tp(rng)];
    Rational c = carnot::make_rational(abc[0], abc[2]);
    Rational s = carnot::make_rational(abc[1], abc[2]);
    Matrix r = Matrix::identity(n);
    r(i, i) = c;
    r(j, j) = c;
    r(i, j) = -s;
    r(j, i) = s;
    t = r * t;
  }
  return t;
}

inline Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng);
    if (carnot::rank(m) == n) return m;
  }
}

/// Rewrites an algebra in a new basis of g_{-1} given by an invertible map T
/// (columns = new basis vectors in old coordinates); higher layers keep their
/// bases.
inline carnot::StratifiedAlgebra change_first_layer_basis(
    const carnot::StratifiedAlgebra& alg, const Matrix& t, const Matrix& tinv) {
  const std::size_t n = alg.dim();
  Matrix m = Matrix::identity(n);
  Matrix minv = Matrix::identity(n);
  const std::size_t d1 = alg.layer_dim(1);
  for (std::size_t r = 0; r < d1; ++r)
    for (std::size_t c = 0; c < d1; ++c) {
      m(r, c) = t(r, c);
      minv(r, c) = tinv(r, c);
    }
  std::vector<carnot::BracketEntry> entries;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec v = minv.apply(alg.bracket(m.col(a), m.col(b)));
      if (!carnot::is_zero(v)) entries.push_back({a, b, std::move(v)});
    }
  return carnot::StratifiedAlgebra(alg.layer_dims(), entries, alg.small_dim_allowed());
}

}  // namespace testutil
