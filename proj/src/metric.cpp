#include "carnot/metric.hpp"

#include <stdexcept>

namespace carnot {

Matrix tensor_projection_matrix(const StratifiedAlgebra& alg, std::size_t j) {
  if (j < 1 || j > alg.step()) throw std::out_of_range("tensor projection: layer out of range");
  const std::size_t d1 = alg.layer_dim(1);
  // Columns of the current stage: images of E_{i_1} x ... x E_{i_p} in g_{-p},
  // lexicographic, held in ambient coordinates.
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < d1; ++i) cols.push_back(alg.unit(alg.layer_offset(1) + i));
  for (std::size_t p = 2; p <= j; ++p) {
    std::vector<Vec> next;
    next.reserve(cols.size() * d1);
    for (const auto& v : cols)
      for (std::size_t i = 0; i < d1; ++i)
        next.push_back(alg.bracket(v, alg.unit(alg.layer_offset(1) + i)));
    cols = std::move(next);
  }
  Matrix out(alg.layer_dim(j), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    out.set_col(c, alg.layer_component(cols[c], j));
  if (rank(out) != alg.layer_dim(j))
    throw std::runtime_error("tensor projection is not surjective: invalid stratification");
  return out;
}

SymmetricForm induced_gram(const StratifiedAlgebra& alg, std::size_t j) {
  Matrix p = tensor_projection_matrix(alg, j);
  return SymmetricForm(inverse(p * p.transpose()));
}

InnerProductAssignment induced_metric(const StratifiedAlgebra& alg) {
  InnerProductAssignment m;
  for (std::size_t j = 1; j <= alg.step(); ++j) m.grams.push_back(induced_gram(alg, j));
  return m;
}

Rational norm_squared(const StratifiedAlgebra& alg, const InnerProductAssignment& m,
                      const Vec& x) {
  Rational total(0);
  for (std::size_t j = 1; j <= alg.step(); ++j) {
    Vec xj = alg.layer_component(x, j);
    total += m.grams[j - 1].eval(xj, xj);
  }
  return total;
}

}  // namespace carnot
