#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pathsys/numtheory.hpp"

namespace pathsys {

/// Vertices carry stable integer labels (field elements, or 1..10 for Petersen).
using Vertex = int;
/// Unordered edge, stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph. Labels are kept sorted, so vertex index order is
/// label order and every iteration below is deterministic.
class Graph {
 public:
  Graph() = default;
  /// Throws InputError on duplicate labels, unknown endpoints, self-loops or
  /// parallel edges.
  Graph(std::vector<Vertex> labels, const std::vector<Edge>& edges);

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Vertex>& vertices() const { return labels_; }
  /// Sorted by (first, second); position in this list is the edge id.
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(Vertex v) const;
  /// Position of v in vertices(); throws InputError for unknown labels.
  std::size_t index_of(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  /// Edge id of {u, v}, or -1 when absent.
  int edge_id(Vertex u, Vertex v) const;
  /// Sorted neighbor labels.
  std::vector<Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return adj_[index_of(v)].size(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> edge_ids_;  // order() x order(), -1 for non-edges
  int offset_ = 0;             // labels_ == [offset_, offset_ + n) when dense_
  bool dense_ = false;
};

/// Paley graph on F_p; requires p = 1 (mod 4).
Graph paley_graph(const PrimeField& pf);

/// (Gamma(x) ∩ Gamma(y)) \ Gamma(z) for pairwise distinct x, y, z.
std::vector<Vertex> common_neighbors_excluding(const Graph& g, Vertex x, Vertex y, Vertex z);

/// Subgraph induced by s (labels preserved).
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& s);

using Arc = std::pair<Vertex, Vertex>;

/// Directed graph on labeled vertices; duplicate arcs are collapsed.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::vector<Vertex> labels);

  void add_arc(Vertex from, Vertex to);
  bool has_arc(Vertex from, Vertex to) const;

  std::size_t order() const { return labels_.size(); }
  std::size_t arc_count() const;
  const std::vector<Vertex>& vertices() const { return labels_; }
  std::size_t index_of(Vertex v) const;
  /// Successor indices of the vertex at index i, sorted.
  const std::vector<std::size_t>& successors(std::size_t i) const { return succ_[i]; }
  std::vector<Arc> arcs() const;

 private:
  std::vector<Vertex> labels_;
  std::vector<std::vector<std::size_t>> succ_;
};

struct SccResult {
  bool strongly_connected = true;
  /// Each component sorted; components ordered by smallest label.
  std::vector<std::vector<Vertex>> components;
};

/// Tarjan's algorithm, iterative. The empty digraph counts as strongly connected.
SccResult strongly_connected(const Digraph& d);

}  // namespace pathsys
