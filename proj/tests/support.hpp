#pragma once

#include <random>

#include "wpoly/graph.hpp"
#include "wpoly/laurent.hpp"

namespace wpoly::testing {

inline LaurentPoly random_poly(std::mt19937& rng, int max_terms = 6, int span = 8,
                               int max_coeff = 5) {
  std::uniform_int_distribution<int> nterms(1, max_terms), exp(-span, span),
      coeff(-max_coeff, max_coeff);
  LaurentPoly p;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(coeff(rng), exp(rng));
  return p;
}

inline LaurentPoly random_nonzero_poly(std::mt19937& rng, int max_terms = 6) {
  LaurentPoly p;
  while (p.is_zero()) p = random_poly(rng, max_terms);
  return p;
}

/// Random multigraph; loops and parallel edges allowed, lengths in
/// [-max_len, max_len] minus zero.
inline ColoredGraph random_graph(std::mt19937& rng, int vmax, int emax, int max_len,
                                 bool connected = false) {
  std::uniform_int_distribution<int> vd(1, vmax), ed(0, emax), len(1, max_len), coin(0, 1);
  while (true) {
    ColoredGraph g;
    g.vcount = vd(rng);
    const int m = ed(rng);
    std::uniform_int_distribution<int> vert(0, g.vcount - 1);
    for (int i = 0; i < m; ++i) {
      Edge e;
      e.a = vert(rng);
      e.b = vert(rng);
      e.color = coin(rng) ? Color::Chain : Color::Sheaf;
      e.length = len(rng) * (coin(rng) ? 1 : -1);
      g.edges.push_back(e);
    }
    if (!connected || is_connected(g)) return g;
  }
}

inline int unit_edge_count(const ColoredGraph& g) {
  int n = 0;
  for (const Edge& e : g.edges) n += std::abs(e.length);
  return n;
}

}  // namespace wpoly::testing

namespace wpoly::testing {

/// a = +-A^k b for some k.
inline bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const int k = a.low() - b.low();
  return a == b.shifted(k) || a == -b.shifted(k);
}

}  // namespace wpoly::testing
