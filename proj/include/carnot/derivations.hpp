#pragma once

#include <vector>

#include "carnot/algebra.hpp"
#include "carnot/metric.hpp"

namespace carnot {

enum class DerivationKind { StrataPreserving, Isometric, Conformal };

/// A space of degree-0 graded derivations, held by a basis of layer maps.
struct DerivationSpace {
  DerivationKind kind;
  std::vector<LayerMap> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Der(g): strata-preserving derivations, solved as one nullspace problem
/// over full block-diagonal unknowns.
DerivationSpace strata_preserving_derivations(const StratifiedAlgebra& alg);

/// IsoDer(g): elements of Der(g) skew-symmetric on g_{-1} (orthonormal base Gram).
DerivationSpace iso_derivations(const StratifiedAlgebra& alg);

/// ConfDer(g) = R H + IsoDer(g).
DerivationSpace conf_derivations(const StratifiedAlgebra& alg);

/// Flattens a layer map to a coordinate vector over the block-diagonal
/// unknowns (layer by layer, row-major).
Vec flatten_layer_map(const StratifiedAlgebra& alg, const LayerMap& m);
LayerMap unflatten_layer_map(const StratifiedAlgebra& alg, const Vec& coords);

/// Commutator of two degree-0 maps as a layer map.
LayerMap layer_map_commutator(const StratifiedAlgebra& alg, const LayerMap& a,
                              const LayerMap& b);

}  // namespace carnot
