#pragma once

// W-polynomial at t = z1 = z2 = d: subset, deletion-contraction and
// spanning-tree formulations, the chain/sheaf bracket weights, an independent
// state-sum oracle and the Jones normalization.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wpoly/graph.hpp"
#include "wpoly/laurent.hpp"

namespace wpoly {

struct WeightPair {
  DRingElem x;
  DRingElem y;
};

using EdgeWeights = std::vector<WeightPair>;

/// Bracket weights of a chain or sheaf of signed length t (t != 0).
WeightPair twist_class_weights(Color color, int t);
EdgeWeights bracket_weights(const ColoredGraph& g);

/// Sum over edge subsets S of prod_S x * prod_{not S} y * d^(|S|+2k(S)-V-1),
/// grouped by the power of d.  R needs +=, * and a zero from R().
template <class R, class Weights>
std::map<int, R> subset_buckets(const ColoredGraph& g, const Weights& w, const R& one);

DRingElem w_subset(const ColoredGraph& g, const EdgeWeights& w);
DRingElem w_delcon(const ColoredGraph& g, const EdgeWeights& w);
DRingElem w_spantree(const ColoredGraph& g, const EdgeWeights& w);

enum class Formulation { Subset, Delcon, Spantree, Oracle };
Formulation parse_formulation(const std::string& name);
const char* formulation_name(Formulation f);

/// W at the bracket weights, reduced to a Laurent polynomial.  Throws
/// NormalizationFailure when a d denominator survives.
LaurentPoly kauffman_bracket(const ColoredGraph& g,
                             Formulation f = Formulation::Subset);
/// Plain state sum over the unit expansion, integer arithmetic only.
LaurentPoly bracket_oracle(const ColoredGraph& g);

/// (-A^3)^(-writhe) * bracket with A = q^-1.  Exponents of q are quarter
/// powers of the usual Jones variable.
LaurentPoly jones(const LaurentPoly& bracket, int writhe);

// ---------------------------------------------------------------------------

template <class R, class Weights>
std::map<int, R> subset_buckets(const ColoredGraph& g, const Weights& w, const R& one) {
  const int m = g.ecount();
  if (m > 30) throw GraphError("subset enumeration limited to 30 edges");
  std::map<int, R> buckets;
  // Depth-first over include/exclude decisions, carrying a union-find.
  struct Frame {
    int i;
    DisjointSets ds;
    int size;
    R prod;
  };
  std::vector<Frame> stack;
  stack.push_back({0, DisjointSets(g.vcount), 0, one});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.i == m) {
      const int e = f.size + 2 * f.ds.count() - g.vcount - 1;
      auto it = buckets.find(e);
      if (it == buckets.end()) buckets.emplace(e, std::move(f.prod));
      else it->second += f.prod;
      continue;
    }
    const Edge& ed = g.edges[f.i];
    Frame out{f.i + 1, f.ds, f.size, f.prod * w[f.i].y};
    f.ds.unite(ed.a, ed.b);
    Frame in{f.i + 1, std::move(f.ds), f.size + 1, f.prod * w[f.i].x};
    stack.push_back(std::move(out));
    stack.push_back(std::move(in));
  }
  return buckets;
}

}  // namespace wpoly
