#include "cospec/qanalysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cospec/multipoly.hpp"

namespace cospec {

BivarPoly charpoly_q(const Graph& g) {
  std::vector<UniPoly> coeffs = charpoly_berkowitz(exp_distance_symbolic(g));
  // reinterpret: coefficient k of the Berkowitz output is the x^k coefficient
  return BivarPoly::from_xcoeffs(std::move(coeffs));
}

std::vector<mpq_class> charpoly_at(const Graph& g, const mpq_class& q) {
  return charpoly_berkowitz(exp_distance_at(g, q));
}

bool cospectral_at(const Graph& a, const Graph& b, const mpq_class& q) {
  if (a.n != b.n) return false;
  return charpoly_at(a, q) == charpoly_at(b, q);
}

bool cospectral_all_q(const Graph& a, const Graph& b) {
  if (a.n != b.n) return false;
  return charpoly_q(a) == charpoly_q(b);
}

bool cospectral_generalized(const Graph& a, const Graph& b) {
  if (a.n != b.n) return false;
  if (a.n > 31)
    throw std::invalid_argument(
        "cospectral_generalized: order beyond packed-monomial exponent cap");
  int da = diameter(bfs_distances(a)), db = diameter(bfs_distances(b));
  if (da != db) return false;  // the distance multiset is charpoly-visible
  int nvars = std::max(da, db) + 1;
  auto pa = charpoly_berkowitz(generalized_distance_symbolic(a, nvars));
  auto pb = charpoly_berkowitz(generalized_distance_symbolic(b, nvars));
  return pa == pb;
}

QLocus q_locus(const Graph& a, const Graph& b) {
  if (a.n != b.n)
    throw std::invalid_argument("q_locus: graphs must have the same order");
  QLocus loc;
  loc.difference = charpoly_q(a) - charpoly_q(b);
  loc.identically_zero = loc.difference.is_zero();
  if (loc.identically_zero) return loc;
  UniPoly g;
  for (int k = 0; k <= loc.difference.degree_x(); ++k)
    g = poly_gcd(g, loc.difference.coeff_x(k));
  loc.g = g.primitive_part();  // locus only cares about roots
  loc.roots = rational_roots(loc.g);
  return loc;
}

namespace {

RingMatrix<mpq_class> level_as_matrix(const LevelDecomposition& l, int k) {
  return k <= l.diam ? l.level_matrix(k) : RingMatrix<mpq_class>(l.n);
}

bool intertwines(const RingMatrix<mpq_class>& ma, const RingMatrix<mpq_class>& mb,
                 const RingMatrix<mpq_class>& s, int* fi = nullptr, int* fj = nullptr) {
  RingMatrix<mpq_class> lhs = mat_mul(ma, s), rhs = mat_mul(s, mb);
  for (int i = 0; i < lhs.n; ++i)
    for (int j = 0; j < lhs.n; ++j)
      if (lhs.at(i, j) != rhs.at(i, j)) {
        if (fi) *fi = i;
        if (fj) *fj = j;
        return false;
      }
  return true;
}

int max_component_diameter(const Graph& g) {
  int best = 0;
  for (uint64_t comp : components(g))
    best = std::max(best, diameter(bfs_distances(induced_subgraph(g, comp))));
  return best;
}

}  // namespace

QSampleReport verify_qsample(const Graph& a, const Graph& b,
                             const RingMatrix<mpq_class>& s,
                             const std::vector<mpq_class>& qs) {
  QSampleReport rep;
  if (a.n != b.n || s.n != a.n) {
    rep.status = QSampleStatus::refuted;
    rep.detail = "size mismatch";
    return rep;
  }
  rep.required = std::max(max_component_diameter(a), max_component_diameter(b));
  // Callers may hand over rationals that are not in canonical form; GMP
  // equality (and hence the dedup set and every entry comparison) assumes
  // canonical operands, so normalise both S and the samples up front.
  RingMatrix<mpq_class> sc = s;
  for (mpq_class& e : sc.a) e.canonicalize();
  if (rank_rational(sc) != sc.n) {
    rep.status = QSampleStatus::refuted;
    rep.detail = "similarity matrix is singular";
    return rep;
  }

  std::set<mpq_class> distinct;
  for (mpq_class q : qs) {
    if (q.get_den() == 0)
      throw std::invalid_argument("verify_qsample: sample has denominator zero");
    q.canonicalize();
    if (q == 0) continue;  // D_0 = I carries no information
    if (!intertwines(exp_distance_at(a, q), exp_distance_at(b, q), sc)) {
      rep.status = QSampleStatus::refuted;
      rep.detail = "S does not intertwine D_q at q = " + q.get_str();
      return rep;
    }
    distinct.insert(q);
  }
  rep.accepted.assign(distinct.begin(), distinct.end());
  if (static_cast<int>(rep.accepted.size()) < rep.required) {
    rep.status = QSampleStatus::incomplete;
    rep.detail = "need " + std::to_string(rep.required) +
                 " distinct nonzero samples, have " +
                 std::to_string(rep.accepted.size());
    return rep;
  }

  // Enough samples: each residual entry is a degree-<=d polynomial in q that
  // vanishes at 0 and at d nonzero points, hence identically.  Confirm by
  // checking the levels themselves.
  LevelDecomposition la = level_decomposition(a), lb = level_decomposition(b);
  int top = std::max(la.diam, lb.diam);
  bool all_ok = true;
  for (int k = 0; k <= top; ++k) {
    int i = -1, j = -1;
    bool ok = intertwines(level_as_matrix(la, k), level_as_matrix(lb, k), sc, &i, &j);
    rep.levels.push_back({k, ok, i, j});
    all_ok &= ok;
  }
  if (!all_ok) {
    // Cannot happen when the sample count is genuinely sufficient; kept as a
    // hard failure rather than an assert so bad inputs surface loudly.
    rep.status = QSampleStatus::refuted;
    rep.detail = "per-level cross-check failed despite sufficient samples";
    return rep;
  }
  rep.status = QSampleStatus::certified;
  return rep;
}

ProbeReport conjecture_probe(const Graph& a, const Graph& b,
                             const RingMatrix<mpq_class>& s,
                             std::vector<mpq_class> candidates) {
  if (candidates.empty()) {
    for (long num = -4; num <= 4; ++num)
      for (long den = 1; den <= 4; ++den) {
        if (num == 0) continue;
        mpq_class q(num, den);
        q.canonicalize();
        candidates.push_back(q);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
  } else {
    for (mpq_class& q : candidates) {
      if (q.get_den() == 0)
        throw std::invalid_argument(
            "conjecture_probe: candidate has denominator zero");
      q.canonicalize();
    }
  }
  RingMatrix<mpq_class> sc = s;
  for (mpq_class& e : sc.a) e.canonicalize();
  ProbeReport rep;
  for (const mpq_class& q : candidates)
    if (intertwines(exp_distance_at(a, q), exp_distance_at(b, q), sc))
      rep.intertwined.push_back(q);

  LevelDecomposition la = level_decomposition(a), lb = level_decomposition(b);
  int top = std::max(la.diam, lb.diam);
  rep.all_levels = true;
  for (int k = 0; k <= top && rep.all_levels; ++k)
    rep.all_levels = intertwines(level_as_matrix(la, k), level_as_matrix(lb, k), sc);

  int informative = 0;
  for (const mpq_class& q : rep.intertwined)
    if (q != 0 && q != 1) ++informative;
  rep.counterexample = informative >= 2 && !rep.all_levels;
  return rep;
}

}  // namespace cospec
