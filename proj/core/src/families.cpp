#include "cospec/families.hpp"

#include <stdexcept>

namespace cospec {

const char* family_name(Family f) {
  switch (f) {
    case Family::double_k4: return "double-k4";
    case Family::k6_minus_edge: return "k6-minus-edge";
  }
  return "?";
}

bool parse_family(const std::string& s, Family& out) {
  std::string t;
  for (char c : s) t += (c == '_' ? '-' : c);
  if (t == "double-k4") { out = Family::double_k4; return true; }
  if (t == "k6-minus-edge") { out = Family::k6_minus_edge; return true; }
  return false;
}

BivarPoly path_charpoly(int n) {
  if (n < 0) throw std::invalid_argument("path_charpoly: negative order");
  BivarPoly prev(1);                                       // P_0
  if (n == 0) return prev;
  BivarPoly cur = BivarPoly::term(1, 0, 1) - BivarPoly(1);  // P_1 = x - 1
  // (q^2+1)x - 1 + q^2  and  x^2 q^2
  BivarPoly a = BivarPoly::term(1, 2, 1) + BivarPoly::term(1, 0, 1) +
                BivarPoly::term(1, 2, 0) - BivarPoly(1);
  BivarPoly b = BivarPoly::term(1, 2, 2);
  for (int k = 2; k <= n; ++k) {
    BivarPoly next = a * cur - b * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

// Path 7-8-...-n in 0-based labels.
void add_tail_path(Graph& g, int n) {
  for (int v = 6; v + 1 < n; ++v) g.add_edge(v, v + 1);
}

void require_order(int n) {
  if (n < 8) throw std::invalid_argument("family pair needs n >= 8");
}

}  // namespace

FamilyPair double_k4_pair(int n) {
  require_order(n);
  Graph g(n);
  // Triangle {1,2,n} at the far end, triangles {3,4,7} and {5,6,7} sharing 7.
  g.add_edge(0, 1);
  g.add_edge(0, n - 1);
  g.add_edge(1, n - 1);
  g.add_edge(2, 3);
  g.add_edge(2, 6);
  g.add_edge(3, 6);
  g.add_edge(4, 5);
  g.add_edge(4, 6);
  g.add_edge(5, 6);
  add_tail_path(g, n);

  Graph h(n);
  // Two K_4 sharing the edge {3,4}: every pair on {1..6} except the four
  // pairs between {1,2} and {5,6}.
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      bool cut = (i <= 1) && (j >= 4);
      if (!cut) h.add_edge(i, j);
    }
  add_tail_path(h, n);
  return {Family::double_k4, n, g, h};
}

FamilyPair k6_minus_edge_pair(int n) {
  require_order(n);
  Graph g(n);
  // K_5 on {3..7}, tail path from 7, and the pendant pair {1,n},{2,n}.
  for (int i = 2; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) g.add_edge(i, j);
  g.add_edge(0, n - 1);
  g.add_edge(1, n - 1);
  add_tail_path(g, n);

  Graph h(n);
  // K_6 minus the edge {2,5}.
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (!(i == 1 && j == 4)) h.add_edge(i, j);
  add_tail_path(h, n);
  return {Family::k6_minus_edge, n, g, h};
}

FamilyPair family_pair(Family f, int n) {
  return f == Family::double_k4 ? double_k4_pair(n) : k6_minus_edge_pair(n);
}

BivarPoly closed_form_charpoly(Family f, int n) {
  require_order(n);
  BivarPoly x = BivarPoly::term(1, 0, 1), q = BivarPoly::term(1, 1, 0);
  BivarPoly q2 = BivarPoly::term(1, 2, 0), q3 = BivarPoly::term(1, 3, 0);
  BivarPoly lin = q + x - BivarPoly(1);  // (q + x - 1), cubed in both forms
  BivarPoly head, tail;
  if (f == Family::double_k4) {
    head = BivarPoly(2) * q2 - q + x - BivarPoly(1);
    tail = BivarPoly(2) * q3 - BivarPoly(2) * q2 * x - BivarPoly(5) * q2 -
           BivarPoly(2) * q * x + x * x + BivarPoly(2) * q - BivarPoly(2) * x +
           BivarPoly(1);
  } else {
    head = q2 + x - BivarPoly(1);
    tail = BivarPoly(3) * q3 - q2 * x - BivarPoly(7) * q2 - BivarPoly(3) * q * x +
           x * x + BivarPoly(3) * q - BivarPoly(2) * x + BivarPoly(1);
  }
  return head * lin * lin * lin * tail * path_charpoly(n - 6);
}

}  // namespace cospec
