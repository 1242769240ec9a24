#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zq {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Subset of the vertex range [0, universe) of some graph, stored as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet full(int universe);
  /// Only valid for universe <= 64.
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const noexcept { return universe_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  int size() const;
  bool empty() const;
  bool is_subset_of(const VertexSet& other) const;
  std::vector<Vertex> members() const;
  /// Only valid for universe <= 64.
  std::uint64_t to_mask() const;

  VertexSet& operator|=(const VertexSet& other);
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check(Vertex v) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Throws ValidationError on self-loops or endpoints outside [0, n).
  /// Duplicate edges (in either orientation) are collapsed.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int n() const noexcept { return static_cast<int>(adjacency_.size()); }
  int m() const noexcept { return static_cast<int>(edges_.size()); }
  /// Sorted neighbour list.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  /// Each edge once as (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Neighbourhood bitmasks; only valid for n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.n() == b.n(); }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

/// Induced subgraph together with the map back to the parent's vertex ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[i] = parent id of local vertex i
};

/// Parses the edge-list text format: one "u v" pair per line, `#` starts a comment,
/// an optional "n <count>" line fixes the vertex count.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string to_edge_list(const Graph& g);

/// Connected components of G[V \ filled], each sorted, ordered by smallest member.
std::vector<VertexSet> unfilled_components(const Graph& g, const VertexSet& filled);

/// Connected components of the whole graph as sorted vertex lists.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace zq
