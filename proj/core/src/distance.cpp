#include "cospec/distance.hpp"

#include <stdexcept>

namespace cospec {

LevelDecomposition level_decomposition(const Graph& g) {
  DistMatrix dm = bfs_distances(g);
  LevelDecomposition ld;
  ld.n = g.n;
  ld.diam = diameter(dm);
  ld.levels.assign(ld.diam + 1, std::vector<uint64_t>(g.n, 0));
  ld.infinite.assign(g.n, 0);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      int d = dm.at(i, j);
      if (d == DistMatrix::kInf)
        ld.infinite[i] |= uint64_t(1) << j;
      else
        ld.levels[d][i] |= uint64_t(1) << j;
    }
  return ld;
}

RingMatrix<mpq_class> LevelDecomposition::level_matrix(int k) const {
  RingMatrix<mpq_class> m(n);
  if (k < 0 || k > diam) return m;
  for (int i = 0; i < n; ++i)
    for (uint64_t row = levels[k][i]; row;) {
      int j = __builtin_ctzll(row);
      row &= row - 1;
      m.at(i, j) = 1;
    }
  return m;
}

RingMatrix<UniPoly> exp_distance_symbolic(const Graph& g) {
  DistMatrix dm = bfs_distances(g);
  RingMatrix<UniPoly> m(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      int d = dm.at(i, j);
      if (d != DistMatrix::kInf) m.at(i, j) = UniPoly::monomial(1, d);
    }
  return m;
}

RingMatrix<mpq_class> exp_distance_at(const Graph& g, const mpq_class& q) {
  // GMP comparisons assume canonical form; accept 2/4 and friends anyway.
  if (q.get_den() == 0)
    throw std::invalid_argument("exp_distance_at: q has denominator zero");
  mpq_class qc = q;
  qc.canonicalize();
  DistMatrix dm = bfs_distances(g);
  // Powers up to the diameter, with q^0 = 1 even at q = 0.
  std::vector<mpq_class> pw{1};
  for (int k = 1; k <= diameter(dm); ++k) pw.push_back(pw.back() * qc);
  RingMatrix<mpq_class> m(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      int d = dm.at(i, j);
      if (d != DistMatrix::kInf) m.at(i, j) = pw[d];
    }
  return m;
}

RingMatrix<MultiPoly> generalized_distance_symbolic(const Graph& g, int nvars) {
  if (!is_connected(g))
    throw std::invalid_argument(
        "generalized_distance_symbolic: graph must be connected (for "
        "disconnected graphs use the exponential matrix, where q^infinity = 0)");
  DistMatrix dm = bfs_distances(g);
  int d = diameter(dm);
  if (nvars < 0) nvars = d + 1;
  if (nvars < d + 1)
    throw std::invalid_argument("generalized_distance_symbolic: nvars below diameter+1");
  if (nvars > MultiPoly::kMaxVars)
    throw std::invalid_argument("generalized_distance_symbolic: diameter beyond packed-monomial capacity");
  RingMatrix<MultiPoly> m(g.n);
  std::vector<MultiPoly> vars;
  for (int k = 0; k <= d; ++k) {
    vars.push_back(MultiPoly::variable(k));
    // keep nvars metadata consistent across entries
    vars.back() += MultiPoly::term(0, 0, nvars);
  }
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) m.at(i, j) = vars[dm.at(i, j)];
  return m;
}

}  // namespace cospec
