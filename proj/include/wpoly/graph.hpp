#pragma once

// Colored multigraphs: chain/sheaf edges with signed lengths, optional marked
// vertex pair, subgraph and spanning-tree machinery.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wpoly/error.hpp"

namespace wpoly {

enum class Color { Chain, Sheaf };

const char* color_name(Color c);

struct Edge {
  int a = 0;
  int b = 0;
  Color color = Color::Chain;
  int length = 1;

  bool is_loop() const { return a == b; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct ColoredGraph {
  int vcount = 1;
  std::vector<Edge> edges;
  std::optional<std::pair<int, int>> marked;

  int ecount() const { return static_cast<int>(edges.size()); }
  /// Throws GraphError on out-of-range endpoints, zero lengths or bad marks.
  void validate() const;
  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;
};

/// Spanning subgraph on all vertices with the selected edges (bit i = edge i).
class EdgeSubset {
 public:
  EdgeSubset() = default;
  EdgeSubset(std::uint64_t bits, int size);
  static EdgeSubset full(int size);

  std::uint64_t bits() const { return bits_; }
  int size() const { return size_; }
  bool contains(int e) const { return (bits_ >> e) & 1U; }
  int count() const;
  EdgeSubset with(int e) const { return {bits_ | (std::uint64_t{1} << e), size_}; }
  EdgeSubset without(int e) const {
    return {bits_ & ~(std::uint64_t{1} << e), size_};
  }
  std::vector<int> indices() const;
  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  std::uint64_t bits_ = 0;
  int size_ = 0;
};

inline constexpr int kMaxSubsetEdges = 64;

// --- parsing / printing -----------------------------------------------------

ColoredGraph parse_graph(std::string_view text);
ColoredGraph load_graph(const std::string& path);
std::string graph_to_json(const ColoredGraph& g);

// --- connectivity -----------------------------------------------------------

/// Small union-find over vertex ids.
class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int find(int x);
  bool unite(int a, int b);
  int count() const { return count_; }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int count_;
};

int components(const ColoredGraph& g, const EdgeSubset& s);
int components(const ColoredGraph& g);
int cyclomatic(const ColoredGraph& g, const EdgeSubset& s);
bool is_connected(const ColoredGraph& g);
/// True when the subgraph joins the marked vertices.
bool joins_marked(const ColoredGraph& g, const EdgeSubset& s);

// --- spanning trees ---------------------------------------------------------

/// Calls visit for every spanning tree, each exactly once.  Throws GraphError
/// "not connected" on a disconnected graph.
void for_each_spanning_tree(const ColoredGraph& g,
                            const std::function<void(const EdgeSubset&)>& visit);
std::vector<EdgeSubset> spanning_trees(const ColoredGraph& g);
/// Kirchhoff count: determinant of a reduced Laplacian (fraction-free).
mpz_class matrix_tree_count(const ColoredGraph& g);
bool is_spanning_tree(const ColoredGraph& g, const EdgeSubset& f);

enum class Activity { IA, II, EA, EI };
const char* activity_name(Activity a);
/// Tutte activities of every edge with respect to spanning tree f, using the
/// edge list order.
std::vector<Activity> activities(const ColoredGraph& g, const EdgeSubset& f);

// --- constructions ----------------------------------------------------------

ColoredGraph expand_to_unit(const ColoredGraph& g);
/// Identifies tangle's marked pair with base's; base edges come first.
ColoredGraph glue(const ColoredGraph& base, const ColoredGraph& tangle);
ColoredGraph glue_n(const ColoredGraph& base, const ColoredGraph& tangle, int n);
ColoredGraph disjoint_union(const ColoredGraph& g, const ColoredGraph& h);
/// Negates every edge length (mirror image).
ColoredGraph mirror(const ColoredGraph& g);
ColoredGraph with_lengths(const ColoredGraph& g, const std::vector<int>& lengths);
/// Reorders the edge list: result edge i is g.edges[order[i]].
ColoredGraph permute_edges(const ColoredGraph& g, const std::vector<int>& order);

// Small builders used by tests and the built-in families.
ColoredGraph empty_graph(int n);
ColoredGraph cycle_graph(int m, Color c, int length = 1);

}  // namespace wpoly
