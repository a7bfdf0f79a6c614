#include "cospec/matrix.hpp"

namespace cospec {

int rank_rational(RingMatrix<mpq_class> m) {
  int rank = 0;
  for (int col = 0; col < m.n && rank < m.n; ++col) {
    int piv = -1;
    for (int r = rank; r < m.n; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.n; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    mpq_class inv = 1 / m.at(rank, col);
    for (int j = col; j < m.n; ++j) m.at(rank, j) *= inv;
    for (int r = 0; r < m.n; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      mpq_class f = m.at(r, col);
      for (int j = col; j < m.n; ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace cospec
