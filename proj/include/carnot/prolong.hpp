#pragma once

#include <cstddef>
#include <vector>

#include "carnot/algebra.hpp"
#include "carnot/derivations.hpp"

namespace carnot {

/// Element of a positive prolongation layer of degree k, stored through its
/// component family: comp[p-1] maps g_{-p} into the degree (k-p) component
/// (coordinates in that component's basis; 0 rows when it vanishes).
struct ProlongElement {
  std::vector<Matrix> comp;
};

struct ProlongationLayer {
  int degree = 0;
  std::vector<ProlongElement> basis;
  std::size_t dim() const { return basis.size(); }
};

/// The graded algebra p = g_{-s} + ... + g_{-1} + g_0 + g_1 + ... + g_t.
/// Global coordinates run over degrees in ascending order.
struct Prolongation {
  StratifiedAlgebra base;
  std::vector<LayerMap> g0;
  std::vector<ProlongationLayer> positive;  // degrees 1..t
  bool truncated = false;

  int min_degree() const { return -static_cast<int>(base.step()); }
  int top_degree() const { return static_cast<int>(positive.size()); }
  std::size_t degree_dim(int k) const;
  std::size_t total_dim() const;
  std::size_t global_offset(int k) const;
  int degree_of_global(std::size_t idx) const;

  /// Synthesized structure constants on the global basis; empty until
  /// synthesize_brackets has run.
  std::vector<std::vector<Vec>> table;
  bool has_table() const { return !table.empty(); }

  Vec unit_global(std::size_t idx) const;
  Vec global_bracket(const Vec& x, const Vec& y) const;
  Matrix global_ad(const Vec& x) const;
  /// H as a global coordinate vector (degree-0 block).
  Vec global_H() const;
  /// Embeds a base-algebra ambient vector into global coordinates.
  Vec embed_base(const Vec& x) const;
};

/// One degree of the standard Tanaka recursion: basis of maps
/// u1 : g_{-1} -> g_{k-1} whose recursive extension is well defined.
/// Layers of degree < k must already be built.
ProlongationLayer prolong_step(const StratifiedAlgebra& alg,
                               const std::vector<LayerMap>& g0,
                               const std::vector<ProlongationLayer>& built, int k);

/// Full prolongation with g_0 given by a basis of derivations (must contain H
/// in its span and be a subalgebra of Der(g); throws otherwise). Stops at the
/// first zero layer, or sets `truncated` when max_degree is exceeded.
/// Synthesizes the bracket table unless truncated.
Prolongation prolong(const StratifiedAlgebra& alg, std::vector<LayerMap> g0,
                     std::size_t max_degree = 12);

/// Fills p.table from the layer data. Throws std::runtime_error
/// ("bracket escapes computed layer") if the graded product leaves the
/// computed range.
void synthesize_brackets(Prolongation& p);

}  // namespace carnot
