#include "wpoly/wpoly.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace wpoly {

WeightPair twist_class_weights(Color color, int t) {
  if (t == 0) throw GraphError("edge length 0 has no bracket weight");
  const LaurentPoly& d = LaurentPoly::d();
  if (color == Color::Chain) {
    LaurentPoly x = LaurentPoly::A(t);
    LaurentPoly y = exact_div(LaurentPoly::monomial(t % 2 ? -1 : 1, -3 * t) - x, d);
    return {DRingElem(std::move(x)), DRingElem(std::move(y))};
  }
  LaurentPoly y = LaurentPoly::A(-t);
  LaurentPoly x = exact_div(LaurentPoly::monomial(t % 2 ? -1 : 1, 3 * t) - y, d);
  return {DRingElem(std::move(x)), DRingElem(std::move(y))};
}

EdgeWeights bracket_weights(const ColoredGraph& g) {
  EdgeWeights w;
  w.reserve(g.edges.size());
  for (const Edge& e : g.edges) w.push_back(twist_class_weights(e.color, e.length));
  return w;
}

namespace {

DRingElem collapse(const std::map<int, DRingElem>& buckets) {
  DRingElem total;
  for (const auto& [e, v] : buckets) total += v.times_dpow(e);
  return total;
}

}  // namespace

DRingElem w_subset(const ColoredGraph& g, const EdgeWeights& w) {
  if (w.size() != g.edges.size()) throw GraphError("weight count mismatch");
  return collapse(subset_buckets(g, w, DRingElem(1)));
}

// --- deletion-contraction ---------------------------------------------------

namespace {

struct MinorGraph {
  int n = 0;
  std::vector<std::array<int, 3>> edges;  // a, b, weight class
};

class DelCon {
 public:
  explicit DelCon(std::vector<WeightPair> classes) : classes_(std::move(classes)) {}

  DRingElem eval(MinorGraph g) {
    if (g.edges.empty()) return DRingElem::d_power(g.n - 1);
    // isolated vertices each contribute one factor of d
    std::vector<int> deg(g.n, 0);
    for (const auto& e : g.edges) {
      ++deg[e[0]];
      ++deg[e[1]];
    }
    const int isolated = static_cast<int>(std::count(deg.begin(), deg.end(), 0));
    canonicalize(g);
    if (isolated > 0) return eval(std::move(g)).times_dpow(isolated);

    std::vector<int> key;
    key.reserve(1 + 3 * g.edges.size());
    key.push_back(g.n);
    for (const auto& e : g.edges) key.insert(key.end(), e.begin(), e.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto [a, b, cls] = g.edges.back();
    const WeightPair& w = classes_[cls];
    MinorGraph del = g;
    del.edges.pop_back();
    DRingElem result;
    if (a == b) {
      result = (w.x.times_dpow(1) + w.y) * eval(std::move(del));
    } else {
      MinorGraph con = del;
      const int hi = std::max(a, b), lo = std::min(a, b);
      for (auto& e : con.edges)
        for (int k = 0; k < 2; ++k) {
          if (e[k] == hi) e[k] = lo;
          else if (e[k] > hi) --e[k];
        }
      --con.n;
      result = w.x * eval(std::move(con)) + w.y * eval(std::move(del));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t h = v.size();
      for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e3779b9);
      return h;
    }
  };

  // Drops isolated vertices, then relabels by first appearance and sorts the
  // edge list.  Two passes make the key stable for most simple relabelings;
  // a missed memo hit only costs time.
  static void canonicalize(MinorGraph& g) {
    for (int pass = 0; pass < 2; ++pass) {
      std::vector<int> label(g.n, -1);
      int next = 0;
      for (const auto& e : g.edges)
        for (int k = 0; k < 2; ++k)
          if (label[e[k]] < 0) label[e[k]] = next++;
      for (auto& e : g.edges) {
        e[0] = label[e[0]];
        e[1] = label[e[1]];
        if (e[0] > e[1]) std::swap(e[0], e[1]);
      }
      g.n = next;
      std::sort(g.edges.begin(), g.edges.end());
    }
  }

  std::vector<WeightPair> classes_;
  std::unordered_map<std::vector<int>, DRingElem, KeyHash> memo_;
};

}  // namespace

DRingElem w_delcon(const ColoredGraph& g, const EdgeWeights& w) {
  if (w.size() != g.edges.size()) throw GraphError("weight count mismatch");
  // Equal weight pairs share a class so that isomorphic minors share memo
  // entries.
  std::vector<WeightPair> classes;
  std::map<std::string, int> index;
  MinorGraph m;
  m.n = g.vcount;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const DRingElem x = w[i].x.normalized(), y = w[i].y.normalized();
    const std::string key = x.to_string() + "|" + y.to_string();
    auto [it, fresh] = index.emplace(key, static_cast<int>(classes.size()));
    if (fresh) classes.push_back({x, y});
    m.edges.push_back({g.edges[i].a, g.edges[i].b, it->second});
  }
  return DelCon(std::move(classes)).eval(std::move(m));
}

DRingElem w_spantree(const ColoredGraph& g, const EdgeWeights& w) {
  if (w.size() != g.edges.size()) throw GraphError("weight count mismatch");
  DRingElem total;
  for_each_spanning_tree(g, [&](const EdgeSubset& f) {
    const auto act = activities(g, f);
    DRingElem term(1);
    for (std::size_t i = 0; i < act.size(); ++i) {
      switch (act[i]) {
        case Activity::IA: term *= w[i].x + w[i].y.times_dpow(1); break;
        case Activity::EA: term *= w[i].x.times_dpow(1) + w[i].y; break;
        case Activity::II: term *= w[i].x; break;
        case Activity::EI: term *= w[i].y; break;
      }
    }
    total += term;
  });
  return total;
}

Formulation parse_formulation(const std::string& name) {
  if (name == "subset") return Formulation::Subset;
  if (name == "delcon") return Formulation::Delcon;
  if (name == "spantree") return Formulation::Spantree;
  if (name == "oracle") return Formulation::Oracle;
  throw Error("unknown formulation '" + name + "'");
}

const char* formulation_name(Formulation f) {
  switch (f) {
    case Formulation::Subset: return "subset";
    case Formulation::Delcon: return "delcon";
    case Formulation::Spantree: return "spantree";
    case Formulation::Oracle: return "oracle";
  }
  return "?";
}

LaurentPoly kauffman_bracket(const ColoredGraph& g, Formulation f) {
  g.validate();
  if (f == Formulation::Oracle) return bracket_oracle(g);
  const EdgeWeights w = bracket_weights(g);
  DRingElem value;
  switch (f) {
    case Formulation::Subset: value = w_subset(g, w); break;
    case Formulation::Delcon: value = w_delcon(g, w); break;
    case Formulation::Spantree: value = w_spantree(g, w); break;
    case Formulation::Oracle: break;
  }
  auto p = value.to_laurent();
  if (!p) throw NormalizationFailure("bracket keeps a d denominator: " + value.to_string());
  return *p;
}

LaurentPoly bracket_oracle(const ColoredGraph& g) {
  const ColoredGraph u = expand_to_unit(g);
  const int m = u.ecount();
  if (m > 30) throw GraphError("oracle limited to 30 unit edges");
  // state count per (A exponent, loop exponent)
  std::map<std::pair<int, int>, long long> counts;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    DisjointSets ds(u.vcount);
    int aexp = 0, size = 0;
    for (int i = 0; i < m; ++i) {
      const int sign = u.edges[i].length;
      if ((s >> i) & 1U) {
        ds.unite(u.edges[i].a, u.edges[i].b);
        aexp += sign;
        ++size;
      } else {
        aexp -= sign;
      }
    }
    ++counts[{aexp, size + 2 * ds.count() - u.vcount - 1}];
  }
  const LaurentPoly d = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  std::map<int, LaurentPoly> by_loops;
  for (const auto& [key, c] : counts)
    by_loops[key.second] += LaurentPoly::monomial(Integer(static_cast<long>(c)), key.first);
  LaurentPoly total, dk(1);
  int k = 0;
  for (const auto& [e, p] : by_loops) {
    if (e < 0) throw NormalizationFailure("negative loop count in state sum");
    while (k < e) {
      dk *= d;
      ++k;
    }
    total += p * dk;
  }
  return total;
}

LaurentPoly jones(const LaurentPoly& bracket, int writhe) {
  const LaurentPoly unit = LaurentPoly::monomial(writhe % 2 ? -1 : 1, -3 * writhe);
  return (unit * bracket).mirrored();
}

}  // namespace wpoly
