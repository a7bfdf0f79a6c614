#pragma once

// Cospectrality analysis across the q parameter: exact bivariate
// characteristic polynomials, the locus of q values where two graphs agree,
// the all-q and fully generalized verdicts, and the sampling certificate that
// upgrades finitely many q checks to an all-q statement.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cospec/distance.hpp"
#include "cospec/graph.hpp"
#include "cospec/matrix.hpp"
#include "cospec/poly.hpp"
#include "cospec/switching.hpp"

namespace cospec {

// det(xI - D_q) over Z[q], monic in x of degree n.
BivarPoly charpoly_q(const Graph& g);
// Exact charpoly of D_q at a fixed rational q, ascending in x.
std::vector<mpq_class> charpoly_at(const Graph& g, const mpq_class& q);

bool cospectral_at(const Graph& a, const Graph& b, const mpq_class& q);
// Equality of the bivariate charpolys, i.e. cospectral at every q at once.
bool cospectral_all_q(const Graph& a, const Graph& b);
// Equality of the symbolic distance charpolys over Z[t_0..t_D], D the larger
// diameter.  Connected graphs only; implies cospectral_all_q.
bool cospectral_generalized(const Graph& a, const Graph& b);

struct QLocus {
  BivarPoly difference;        // charpoly_q(a) - charpoly_q(b)
  bool identically_zero;
  UniPoly g;                   // gcd over x-coefficients of the difference
  std::vector<mpq_class> roots;  // rational roots of g, ascending
};

// The pair is cospectral at exactly the rational q where every coefficient
// difference vanishes; g packages those common roots.  For connected graphs
// of equal order, q = 0 (D_0 = I) and q = 1 (D_1 = J) are always such roots.
QLocus q_locus(const Graph& a, const Graph& b);

enum class QSampleStatus { certified, incomplete, refuted };

struct QSampleReport {
  QSampleStatus status = QSampleStatus::incomplete;
  int required = 0;  // distinct nonzero q needed: the larger component diameter
  std::vector<mpq_class> accepted;  // distinct nonzero q where S intertwines
  std::vector<LevelCheck> levels;   // cross-check, filled when certified
  std::string detail;
};

// Checks S invertibility and D_q(a) S = S D_q(b) at each sample.  Since every
// entry of that residual is a polynomial in q of degree <= d with constant
// term zero, d distinct nonzero roots force it to vanish identically, which
// the per-level cross-check M_k(a) S = S M_k(b) then confirms exactly.
// Samples and S are brought to canonical form on entry, so 2/4 and 1/2 count
// as one sample; a zero denominator throws.
QSampleReport verify_qsample(const Graph& a, const Graph& b,
                             const RingMatrix<mpq_class>& s,
                             const std::vector<mpq_class>& qs);

struct ProbeReport {
  std::vector<mpq_class> intertwined;  // candidate q where D_q(a) S = S D_q(b)
  bool all_levels = false;             // S intertwines every level matrix
  // Two or more distinct nonzero non-one successes without all_levels would
  // witness a same-S counterexample; never observed, recorded for study.
  bool counterexample = false;
};

ProbeReport conjecture_probe(const Graph& a, const Graph& b,
                             const RingMatrix<mpq_class>& s,
                             std::vector<mpq_class> candidates = {});

}  // namespace cospec
