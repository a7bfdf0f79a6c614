#pragma once

// Distance-based matrices for a graph: the 0/1 level decomposition
// (M_k)[i][j] = 1 iff dist(i,j) = k, the exponential distance matrix with
// entries q^dist (cross-component entries are 0, matching q^infinity -> 0),
// and the fully symbolic matrix with an indeterminate t_k per distance.

#include <gmpxx.h>

#include "cospec/graph.hpp"
#include "cospec/matrix.hpp"
#include "cospec/multipoly.hpp"
#include "cospec/poly.hpp"

namespace cospec {

struct LevelDecomposition {
  int n = 0;
  int diam = 0;
  // levels[k][i] = bitmask over j of dist(i,j) == k, for k = 0..diam.
  std::vector<std::vector<uint64_t>> levels;
  // Pairs in different components; empty masks when connected.
  std::vector<uint64_t> infinite;

  RingMatrix<mpq_class> level_matrix(int k) const;  // M_k over Q
};

LevelDecomposition level_decomposition(const Graph& g);

// D_q with symbolic q: diagonal 1, entry q^dist(i,j), 0 across components.
RingMatrix<UniPoly> exp_distance_symbolic(const Graph& g);
// D_q at a fixed rational value (0^0 on the diagonal is 1, i.e. D_0 = I).
RingMatrix<mpq_class> exp_distance_at(const Graph& g, const mpq_class& q);

// D_f with one indeterminate per distance: entry t_{dist(i,j)}, diagonal t_0.
// Connected graphs only (there is no t_infinity; for disconnected graphs use
// the exponential matrix, whose q^infinity = 0 convention covers them).
// nvars >= diam+1 may be passed to embed two graphs into a common ring.
RingMatrix<MultiPoly> generalized_distance_symbolic(const Graph& g, int nvars = -1);

}  // namespace cospec
