#include "pathsys/graph.hpp"

#include <algorithm>
#include <string>

namespace pathsys {

Graph::Graph(std::vector<Vertex> labels, const std::vector<Edge>& edges) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw InputError("graph: duplicate vertex label");
  }
  const std::size_t n = labels_.size();
  dense_ = n > 0 && static_cast<std::size_t>(labels_.back() - labels_.front()) + 1 == n;
  offset_ = n > 0 ? labels_.front() : 0;

  adj_.assign(n, {});
  edge_ids_.assign(n * n, -1);
  for (auto [u, v] : edges) {
    if (u == v) throw InputError("graph: self-loop at " + std::to_string(u));
    if (!contains(u) || !contains(v)) {
      throw InputError("graph: edge {" + std::to_string(u) + "," + std::to_string(v) + "} has unknown endpoint");
    }
    if (u > v) std::swap(u, v);
    const std::size_t i = index_of(u);
    const std::size_t j = index_of(v);
    if (edge_ids_[i * n + j] != -1) {
      throw InputError("graph: parallel edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    edge_ids_[i * n + j] = edge_ids_[j * n + i] = 0;
    edges_.emplace_back(u, v);
    adj_[i].push_back(j);
    adj_[j].push_back(i);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const std::size_t i = index_of(edges_[e].first);
    const std::size_t j = index_of(edges_[e].second);
    edge_ids_[i * n + j] = edge_ids_[j * n + i] = static_cast<int>(e);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::contains(Vertex v) const {
  if (dense_) return v >= offset_ && static_cast<std::size_t>(v - offset_) < labels_.size();
  return std::binary_search(labels_.begin(), labels_.end(), v);
}

std::size_t Graph::index_of(Vertex v) const {
  if (dense_) {
    if (v >= offset_ && static_cast<std::size_t>(v - offset_) < labels_.size()) {
      return static_cast<std::size_t>(v - offset_);
    }
  } else {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it != labels_.end() && *it == v) return static_cast<std::size_t>(it - labels_.begin());
  }
  throw InputError("unknown vertex " + std::to_string(v));
}

bool Graph::adjacent(Vertex u, Vertex v) const { return edge_id(u, v) >= 0; }

int Graph::edge_id(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return -1;
  return edge_ids_[index_of(u) * order() + index_of(v)];
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (auto j : adj_[index_of(v)]) out.push_back(labels_[j]);
  return out;
}

Graph paley_graph(const PrimeField& pf) {
  if (pf.p() % 4 != 1) {
    throw InputError("paley_graph: asymmetric residue relation (p = " + std::to_string(pf.p()) + " is 3 mod 4)");
  }
  const auto p = static_cast<Vertex>(pf.p());
  std::vector<Vertex> labels(static_cast<std::size_t>(p));
  for (Vertex a = 0; a < p; ++a) labels[static_cast<std::size_t>(a)] = a;
  std::vector<Edge> edges;
  for (Vertex a = 0; a < p; ++a) {
    for (Vertex b = a + 1; b < p; ++b) {
      if (pf.is_residue(b - a)) edges.emplace_back(a, b);
    }
  }
  return Graph(std::move(labels), edges);
}

std::vector<Vertex> common_neighbors_excluding(const Graph& g, Vertex x, Vertex y, Vertex z) {
  if (x == y || y == z || x == z) throw InputError("common_neighbors_excluding: vertices must be distinct");
  for (auto v : {x, y, z}) g.index_of(v);
  std::vector<Vertex> out;
  for (auto w : g.neighbors(x)) {
    if (g.adjacent(w, y) && !g.adjacent(w, z)) out.push_back(w);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& s) {
  std::vector<Vertex> labels = s;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (auto v : labels) {
    if (!g.contains(v)) throw InputError("induced_subgraph: unknown vertex " + std::to_string(v));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (std::binary_search(labels.begin(), labels.end(), e.first) &&
        std::binary_search(labels.begin(), labels.end(), e.second)) {
      edges.push_back(e);
    }
  }
  return Graph(std::move(labels), edges);
}

Digraph::Digraph(std::vector<Vertex> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw InputError("digraph: duplicate vertex label");
  }
  succ_.assign(labels_.size(), {});
}

std::size_t Digraph::index_of(Vertex v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) throw InputError("digraph: unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - labels_.begin());
}

void Digraph::add_arc(Vertex from, Vertex to) {
  auto& out = succ_[index_of(from)];
  const std::size_t j = index_of(to);
  auto it = std::lower_bound(out.begin(), out.end(), j);
  if (it == out.end() || *it != j) out.insert(it, j);
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  const auto& out = succ_[index_of(from)];
  return std::binary_search(out.begin(), out.end(), index_of(to));
}

std::size_t Digraph::arc_count() const {
  std::size_t total = 0;
  for (const auto& s : succ_) total += s.size();
  return total;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (std::size_t i = 0; i < succ_.size(); ++i) {
    for (auto j : succ_[i]) out.emplace_back(labels_[i], labels_[j]);
  }
  return out;
}

SccResult strongly_connected(const Digraph& d) {
  const std::size_t n = d.order();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> number(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;

  SccResult result;
  // Explicit DFS frames: (vertex, next successor position).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (number[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    number[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& succ = d.successors(v);
      if (pos < succ.size()) {
        const std::size_t w = succ[pos++];
        if (number[w] == kUnvisited) {
          number[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], number[w]);
        }
        continue;
      }
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == number[done]) {
        std::vector<Vertex> component;
        std::size_t w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(d.vertices()[w]);
        } while (w != done);
        std::sort(component.begin(), component.end());
        result.components.push_back(std::move(component));
      }
    }
  }
  std::sort(result.components.begin(), result.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  result.strongly_connected = result.components.size() <= 1;
  return result;
}

}  // namespace pathsys
