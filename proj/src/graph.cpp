#include "wpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace wpoly {

const char* color_name(Color c) { return c == Color::Chain ? "chain" : "sheaf"; }

const char* activity_name(Activity a) {
  switch (a) {
    case Activity::IA: return "IA";
    case Activity::II: return "II";
    case Activity::EA: return "EA";
    case Activity::EI: return "EI";
  }
  return "?";
}

void ColoredGraph::validate() const {
  if (vcount < 1) throw GraphError("graph needs at least one vertex");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.a < 0 || e.a >= vcount || e.b < 0 || e.b >= vcount)
      throw GraphError("edge " + std::to_string(i) + " references vertex out of range");
    if (e.length == 0)
      throw GraphError("edge " + std::to_string(i) + " has length 0");
  }
  if (marked) {
    auto [u, v] = *marked;
    if (u < 0 || u >= vcount || v < 0 || v >= vcount)
      throw GraphError("marked vertex out of range");
    if (u == v) throw GraphError("marked vertices must be distinct");
  }
}

EdgeSubset::EdgeSubset(std::uint64_t bits, int size) : bits_(bits), size_(size) {
  if (size < 0 || size > kMaxSubsetEdges)
    throw GraphError("edge subsets support at most 64 edges");
}

EdgeSubset EdgeSubset::full(int size) {
  return {size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1, size};
}

int EdgeSubset::count() const { return std::popcount(bits_); }

std::vector<int> EdgeSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < size_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

// --- parsing ----------------------------------------------------------------

namespace {

using nlohmann::json;

int get_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ParseError("unknown field '" + it.key() + "' in " + where);
  }
}

}  // namespace

ColoredGraph parse_graph(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed graph file: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("graph file must be an object");
  reject_unknown(root, {"vertices", "edges", "marked"}, "graph");
  if (!root.contains("vertices")) throw ParseError("missing field 'vertices'");
  if (!root.contains("edges")) throw ParseError("missing field 'edges'");

  ColoredGraph g;
  g.vcount = get_int(root["vertices"], "vertices");
  if (!root["edges"].is_array()) throw ParseError("'edges' must be an array");
  for (const json& je : root["edges"]) {
    if (!je.is_object()) throw ParseError("edge must be an object");
    reject_unknown(je, {"u", "v", "color", "t"}, "edge");
    for (const char* f : {"u", "v", "color", "t"})
      if (!je.contains(f)) throw ParseError(std::string("edge missing field '") + f + "'");
    Edge e;
    e.a = get_int(je["u"], "u");
    e.b = get_int(je["v"], "v");
    e.length = get_int(je["t"], "t");
    if (!je["color"].is_string()) throw ParseError("color must be a string");
    const auto c = je["color"].get<std::string>();
    if (c == "chain") e.color = Color::Chain;
    else if (c == "sheaf") e.color = Color::Sheaf;
    else throw ParseError("unknown color '" + c + "'");
    g.edges.push_back(e);
  }
  if (root.contains("marked")) {
    const json& m = root["marked"];
    if (!m.is_array() || m.size() != 2) throw ParseError("'marked' must be [u, v]");
    g.marked = std::pair{get_int(m[0], "marked"), get_int(m[1], "marked")};
  }
  g.validate();
  return g;
}

ColoredGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string graph_to_json(const ColoredGraph& g) {
  nlohmann::ordered_json root;
  root["vertices"] = g.vcount;
  root["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges) {
    nlohmann::ordered_json je;
    je["u"] = e.a;
    je["v"] = e.b;
    je["color"] = color_name(e.color);
    je["t"] = e.length;
    root["edges"].push_back(je);
  }
  if (g.marked) root["marked"] = {g.marked->first, g.marked->second};
  return root.dump();
}

// --- connectivity -----------------------------------------------------------

DisjointSets::DisjointSets(int n) : parent_(n), rank_(n, 0), count_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --count_;
  return true;
}

int components(const ColoredGraph& g, const EdgeSubset& s) {
  DisjointSets ds(g.vcount);
  for (int i = 0; i < g.ecount(); ++i)
    if (s.contains(i)) ds.unite(g.edges[i].a, g.edges[i].b);
  return ds.count();
}

int components(const ColoredGraph& g) {
  DisjointSets ds(g.vcount);
  for (const Edge& e : g.edges) ds.unite(e.a, e.b);
  return ds.count();
}

int cyclomatic(const ColoredGraph& g, const EdgeSubset& s) {
  return s.count() - g.vcount + components(g, s);
}

bool is_connected(const ColoredGraph& g) { return components(g) == 1; }

bool joins_marked(const ColoredGraph& g, const EdgeSubset& s) {
  if (!g.marked) throw GraphError("graph has no marked pair");
  DisjointSets ds(g.vcount);
  for (int i = 0; i < g.ecount(); ++i)
    if (s.contains(i)) ds.unite(g.edges[i].a, g.edges[i].b);
  return ds.find(g.marked->first) == ds.find(g.marked->second);
}

// --- spanning trees ---------------------------------------------------------

namespace {

struct TreeSearch {
  const ColoredGraph& g;
  const std::function<void(const EdgeSubset&)>& visit;
  int need;

  // Can the chosen edges plus edges from index i onward still span?
  bool still_spannable(std::uint64_t chosen, int i) const {
    DisjointSets ds(g.vcount);
    for (int e = 0; e < g.ecount(); ++e)
      if (((chosen >> e) & 1U) || e >= i) ds.unite(g.edges[e].a, g.edges[e].b);
    return ds.count() == 1;
  }

  void run(int i, std::uint64_t chosen, int size, DisjointSets ds) {
    if (size == need) {
      visit(EdgeSubset(chosen, g.ecount()));
      return;
    }
    if (i == g.ecount()) return;
    const Edge& e = g.edges[i];
    if (ds.find(e.a) != ds.find(e.b)) {
      DisjointSets with = ds;
      with.unite(e.a, e.b);
      run(i + 1, chosen | (std::uint64_t{1} << i), size + 1, with);
    }
    if (still_spannable(chosen, i + 1)) run(i + 1, chosen, size, ds);
  }
};

}  // namespace

void for_each_spanning_tree(const ColoredGraph& g,
                            const std::function<void(const EdgeSubset&)>& visit) {
  if (!is_connected(g)) throw GraphError("not connected");
  if (g.ecount() > kMaxSubsetEdges) throw GraphError("too many edges");
  TreeSearch search{g, visit, g.vcount - 1};
  search.run(0, 0, 0, DisjointSets(g.vcount));
}

std::vector<EdgeSubset> spanning_trees(const ColoredGraph& g) {
  std::vector<EdgeSubset> out;
  for_each_spanning_tree(g, [&](const EdgeSubset& f) { out.push_back(f); });
  return out;
}

mpz_class matrix_tree_count(const ColoredGraph& g) {
  const int n = g.vcount - 1;
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
  for (const Edge& e : g.edges) {
    if (e.is_loop()) continue;
    // drop row/column of vertex 0
    const int a = e.a - 1, b = e.b - 1;
    if (a >= 0) m[a][a] += 1;
    if (b >= 0) m[b][b] += 1;
    if (a >= 0 && b >= 0) {
      m[a][b] -= 1;
      m[b][a] -= 1;
    }
  }
  // Bareiss fraction-free elimination
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool is_spanning_tree(const ColoredGraph& g, const EdgeSubset& f) {
  if (f.count() != g.vcount - 1) return false;
  DisjointSets ds(g.vcount);
  for (int i = 0; i < g.ecount(); ++i)
    if (f.contains(i) && !ds.unite(g.edges[i].a, g.edges[i].b)) return false;
  return ds.count() == 1;
}

std::vector<Activity> activities(const ColoredGraph& g, const EdgeSubset& f) {
  if (!is_spanning_tree(g, f)) throw GraphError("edge set is not a spanning tree");
  const int m = g.ecount();
  std::vector<Activity> out(m);
  for (int e = 0; e < m; ++e) {
    const Edge& ed = g.edges[e];
    if (f.contains(e)) {
      // Cut(F, e): edges joining the two sides of F - e.
      DisjointSets ds(g.vcount);
      for (int i = 0; i < m; ++i)
        if (i != e && f.contains(i)) ds.unite(g.edges[i].a, g.edges[i].b);
      int first = m;
      for (int i = 0; i < m && first == m; ++i)
        if (ds.find(g.edges[i].a) != ds.find(g.edges[i].b)) first = i;
      out[e] = first == e ? Activity::IA : Activity::II;
    } else {
      // Cyc(F, e): e plus the tree path between its ends.  A tree edge lies
      // on that path iff removing it separates the endpoints of e.
      int first = e;
      if (!ed.is_loop()) {
        for (int i = 0; i < e; ++i) {
          if (!f.contains(i)) continue;
          DisjointSets ds(g.vcount);
          for (int j = 0; j < m; ++j)
            if (j != i && f.contains(j)) ds.unite(g.edges[j].a, g.edges[j].b);
          if (ds.find(ed.a) != ds.find(ed.b)) {
            first = i;
            break;
          }
        }
      }
      out[e] = first == e ? Activity::EA : Activity::EI;
    }
  }
  return out;
}

// --- constructions ----------------------------------------------------------

ColoredGraph expand_to_unit(const ColoredGraph& g) {
  ColoredGraph out;
  out.vcount = g.vcount;
  out.marked = g.marked;
  for (const Edge& e : g.edges) {
    const int n = std::abs(e.length);
    const int s = e.length > 0 ? 1 : -1;
    if (e.color == Color::Sheaf) {
      for (int k = 0; k < n; ++k) out.edges.push_back({e.a, e.b, Color::Sheaf, s});
    } else {
      int prev = e.a;
      for (int k = 0; k < n; ++k) {
        const int next = k + 1 == n ? e.b : out.vcount++;
        out.edges.push_back({prev, next, Color::Chain, s});
        prev = next;
      }
    }
  }
  return out;
}

ColoredGraph glue(const ColoredGraph& base, const ColoredGraph& tangle) {
  if (!base.marked || !tangle.marked) throw GraphError("glue needs marked pairs on both graphs");
  const auto [bu, bv] = *base.marked;
  const auto [tu, tv] = *tangle.marked;
  std::vector<int> map(tangle.vcount);
  int next = base.vcount;
  for (int x = 0; x < tangle.vcount; ++x) {
    if (x == tu) map[x] = bu;
    else if (x == tv) map[x] = bv;
    else map[x] = next++;
  }
  ColoredGraph out = base;
  out.vcount = next;
  for (const Edge& e : tangle.edges) out.edges.push_back({map[e.a], map[e.b], e.color, e.length});
  return out;
}

ColoredGraph glue_n(const ColoredGraph& base, const ColoredGraph& tangle, int n) {
  ColoredGraph out = base;
  for (int i = 0; i < n; ++i) out = glue(out, tangle);
  return out;
}

ColoredGraph disjoint_union(const ColoredGraph& g, const ColoredGraph& h) {
  ColoredGraph out = g;
  out.vcount = g.vcount + h.vcount;
  for (const Edge& e : h.edges)
    out.edges.push_back({e.a + g.vcount, e.b + g.vcount, e.color, e.length});
  return out;
}

ColoredGraph mirror(const ColoredGraph& g) {
  ColoredGraph out = g;
  for (Edge& e : out.edges) e.length = -e.length;
  return out;
}

ColoredGraph with_lengths(const ColoredGraph& g, const std::vector<int>& lengths) {
  if (lengths.size() != g.edges.size()) throw GraphError("length vector size mismatch");
  ColoredGraph out = g;
  for (std::size_t i = 0; i < lengths.size(); ++i) out.edges[i].length = lengths[i];
  out.validate();
  return out;
}

ColoredGraph permute_edges(const ColoredGraph& g, const std::vector<int>& order) {
  ColoredGraph out = g;
  out.edges.clear();
  for (int i : order) out.edges.push_back(g.edges.at(i));
  return out;
}

ColoredGraph empty_graph(int n) {
  ColoredGraph g;
  g.vcount = n;
  return g;
}

ColoredGraph cycle_graph(int m, Color c, int length) {
  ColoredGraph g;
  g.vcount = m;
  for (int i = 0; i < m; ++i) g.edges.push_back({i, (i + 1) % m, c, length});
  return g;
}

}  // namespace wpoly
