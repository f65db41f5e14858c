#pragma once

#include "comax/lie_algebra.hpp"

#include <map>
#include <vector>

namespace comax {

/// Every d-dimensional subspace of L exactly once, sorted.
///
/// Walks RREF patterns directly: each choice of d pivot columns, times every
/// assignment of the free entries (right of the row's pivot, outside pivot
/// columns). No deduplication is needed.
std::vector<Subspace> enumerate_subspaces(const AlgebraPtr& algebra, int d);

/// All nontrivial proper subalgebras of L grouped by dimension, with the
/// maximal subalgebras and the Frattini subalgebra.
struct SubalgebraInventory {
  AlgebraPtr algebra;
  std::map<int, std::vector<Subspace>> by_dim; // keys 1 .. n-1, each sorted
  std::vector<Subspace> maximals;
  Subspace frattini;

  /// Flattened by_dim in (dim, matrix) order; this is the vertex order.
  std::vector<Subspace> all() const;
  std::size_t count(int d) const;
  std::size_t total() const;
};

SubalgebraInventory enumerate_subalgebras(const AlgebraPtr& algebra);

/// Intersection of all maximal subalgebras (L itself if there are none).
Subspace frattini(const AlgebraPtr& algebra);

/// Number of worker threads: COMAX_THREADS if set and positive, otherwise
/// the hardware concurrency.
unsigned worker_threads();

} // namespace comax
