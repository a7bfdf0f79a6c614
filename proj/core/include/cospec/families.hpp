#pragma once

// Two infinite families that are exponential-distance cospectral exactly at
// q = 1/2: each pair joins a fixed 6-vertex gadget to a path on n-6 vertices,
// as an attached subgraph in G and as a separate component in H.  Closed-form
// characteristic polynomials for H double as decoding oracles for the
// hand-transcribed gadgets.

#include <string>

#include "cospec/graph.hpp"
#include "cospec/poly.hpp"

namespace cospec {

// double_k4: H's gadget is two K_4 sharing an edge; G carries a triangle on
//   {1,2,n} and two triangles through vertex 7.
// k6_minus_edge: H's gadget is K_6 minus one edge; G carries K_5 on {3..7}
//   and the pendant pair {1,n},{2,n}.
enum class Family { double_k4, k6_minus_edge };

const char* family_name(Family f);
// Accepts the names above with 'h' or '-' separators; false if unrecognized.
bool parse_family(const std::string& s, Family& out);

struct FamilyPair {
  Family family;
  int n;    // total vertices, >= 8
  Graph g;  // connected: gadget wired into a path on vertices 7..n
  Graph h;  // gadget on {1..6} plus the path as its own component
};

// Characteristic polynomial of D_q for the path on n vertices, via the
// recursion P_n = ((q^2+1)x - 1 + q^2) P_{n-1} - x^2 q^2 P_{n-2} with
// P_0 = 1 and P_1 = x - 1 (the bases that reproduce the direct charpolys).
BivarPoly path_charpoly(int n);

// Vertex labels follow the 1-based drawings; stored 0-based.  n >= 8.
FamilyPair double_k4_pair(int n);
FamilyPair k6_minus_edge_pair(int n);
FamilyPair family_pair(Family f, int n);

// Exact expansion of the published product form for charpoly_q(H):
//   double_k4:     (2q^2-q+x-1)(q+x-1)^3 (2q^3-2q^2x-5q^2-2qx+x^2+2q-2x+1)
//   k6_minus_edge: (q^2+x-1)(q+x-1)^3 (3q^3-q^2x-7q^2-3qx+x^2+3q-2x+1)
// times path_charpoly(n-6).  Agreement with the directly computed
// charpoly_q(H) certifies both the transcription and the formula.
BivarPoly closed_form_charpoly(Family f, int n);

}  // namespace cospec
