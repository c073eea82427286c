#include "pathsys/path_system.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace pathsys {

namespace {

std::string pair_name(Vertex u, Vertex v) {
  return "{" + std::to_string(std::min(u, v)) + "," + std::to_string(std::max(u, v)) + "}";
}

// Empty string when p is a simple u-v path in g, otherwise the reason.
std::string path_defect(const Graph& g, const Path& p) {
  if (p.size() < 2) return "path has fewer than two vertices";
  for (auto v : p) {
    if (!g.contains(v)) return "path uses unknown vertex " + std::to_string(v);
  }
  std::vector<Vertex> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    return "path is not simple (repeats " + std::to_string(*it) + ")";
  }
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    if (!g.adjacent(p[k], p[k + 1])) return "path uses non-edge " + pair_name(p[k], p[k + 1]);
  }
  return {};
}

Path oriented(Path p) {
  if (p.front() > p.back()) std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace

bool same_path(const Path& a, const Path& b) {
  return a == b || (a.size() == b.size() && std::equal(a.begin(), a.end(), b.rbegin()));
}

PathSystem::PathSystem(Graph g, const std::vector<Path>& paths) : graph_(std::move(g)) {
  const std::size_t n = order();
  paths_.assign(n * n, {});
  for (const auto& p : paths) {
    if (auto why = path_defect(graph_, p); !why.empty()) throw InputError("path system: " + why);
    const std::size_t i = graph_.index_of(p.front());
    const std::size_t j = graph_.index_of(p.back());
    auto& cell = paths_[slot(i, j)];
    if (!cell.empty()) throw InputError("path system: duplicate path for pair " + pair_name(p.front(), p.back()));
    cell = oriented(p);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (paths_[slot(i, j)].empty()) {
        throw InputError("pair " + pair_name(graph_.vertices()[i], graph_.vertices()[j]) + " has no path");
      }
    }
  }
}

const Path& PathSystem::path(Vertex u, Vertex v) const {
  if (u == v) throw InputError("path: endpoints coincide at " + std::to_string(u));
  return paths_[slot(graph_.index_of(u), graph_.index_of(v))];
}

Path PathSystem::path_from(Vertex u, Vertex v) const {
  Path p = path(u, v);
  if (p.front() != u) std::reverse(p.begin(), p.end());
  return p;
}

const Path& PathSystem::path_by_index(std::size_t i, std::size_t j) const { return paths_[slot(i, j)]; }

std::vector<Path> PathSystem::paths() const {
  std::vector<Path> out;
  out.reserve(pair_count());
  for (std::size_t i = 0; i < order(); ++i) {
    for (std::size_t j = i + 1; j < order(); ++j) out.push_back(paths_[slot(i, j)]);
  }
  return out;
}

PathSystem PathSystem::with_path(const Path& replacement) const {
  if (auto why = path_defect(graph_, replacement); !why.empty()) throw InputError("with_path: " + why);
  PathSystem copy = *this;
  copy.paths_[slot(graph_.index_of(replacement.front()), graph_.index_of(replacement.back()))] = oriented(replacement);
  return copy;
}

PathSystem build_paley_system(const PrimeField& pf) {
  if (auto why = admissibility_failure(pf.p())) throw InputError("build_paley_system: " + *why);
  const auto p = static_cast<Vertex>(pf.p());
  const std::int64_t three = 3;
  const std::int64_t minus_three = pf.neg(3);
  std::vector<Path> paths;
  paths.reserve(static_cast<std::size_t>(p) * static_cast<std::size_t>(p - 1) / 2);
  auto at = [&](std::int64_t x) { return static_cast<Vertex>(pf.reduce(x)); };
  for (Vertex a = 0; a < p; ++a) {
    for (Vertex b = a + 1; b < p; ++b) {
      const std::int64_t d = pf.sub(b, a);
      if (pf.is_residue(d)) {
        paths.push_back({a, b});
      } else if (d == three) {
        paths.push_back({a, at(a + 1), at(a + 2), b});
      } else if (d == minus_three) {
        // Read from b, the difference is a - b = 3.
        paths.push_back({b, at(b + 1), at(b + 2), a});
      } else {
        paths.push_back({a, static_cast<Vertex>(pf.div(a + b, 2)), b});
      }
    }
  }
  return PathSystem(paley_graph(pf), paths);
}

ConsistencyReport is_consistent(const PathSystem& ps) {
  const std::size_t n = ps.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Path& p = ps.path_by_index(i, j);
      for (std::size_t s = 0; s < p.size(); ++s) {
        for (std::size_t t = s + 1; t < p.size(); ++t) {
          if (s == 0 && t + 1 == p.size()) continue;
          const Path sub(p.begin() + static_cast<std::ptrdiff_t>(s), p.begin() + static_cast<std::ptrdiff_t>(t) + 1);
          const Path& stored = ps.path(p[s], p[t]);
          if (!same_path(sub, stored)) {
            return {false, ConsistencyViolation{p, p[s], p[t], sub, stored}};
          }
        }
      }
    }
  }
  return {};
}

bool check_cyclic_symmetry(const PathSystem& ps) {
  const auto& labels = ps.graph().vertices();
  const std::size_t n = labels.size();
  if (!is_prime(n)) throw InputError("check_cyclic_symmetry: vertex count " + std::to_string(n) + " is not prime");
  for (std::size_t k = 0; k < n; ++k) {
    if (labels[k] != static_cast<Vertex>(k)) throw InputError("check_cyclic_symmetry: labels are not 0..p-1");
  }
  const auto p = static_cast<Vertex>(n);
  Path shifted;
  for (const auto& path : ps.paths()) {
    for (Vertex x = 1; x < p; ++x) {
      shifted.clear();
      for (auto v : path) shifted.push_back((v + x) % p);
      if (!same_path(shifted, ps.path(shifted.front(), shifted.back()))) return false;
    }
  }
  return true;
}

Restriction restrict(const PathSystem& ps, const std::vector<Vertex>& s) {
  if (s.empty()) throw InputError("restrict: empty vertex set");
  std::vector<Vertex> keep = s;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  Graph sub = induced_subgraph(ps.graph(), keep);
  std::vector<Path> paths;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      const Path& p = ps.path(keep[a], keep[b]);
      for (auto v : p) {
        if (!std::binary_search(keep.begin(), keep.end(), v)) {
          return {std::nullopt, std::make_pair(keep[a], keep[b])};
        }
      }
      paths.push_back(p);
    }
  }
  return {PathSystem(std::move(sub), paths), std::nullopt};
}

PathSystem petersen_fixture() {
  std::vector<Vertex> labels{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const std::vector<Edge> edges{
      {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},        // outer cycle
      {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},       // spokes
      {6, 8}, {8, 10}, {7, 10}, {7, 9}, {6, 9},      // inner pentagram
  };
  Graph g(labels, edges);
  const std::vector<Path> exceptional{
      {2, 1, 6, 8}, {1, 5, 10, 7}, {3, 2, 7, 9}, {4, 3, 8, 10}, {5, 4, 9, 6},
  };
  std::vector<Path> paths;
  for (Vertex u = 1; u <= 10; ++u) {
    for (Vertex v = u + 1; v <= 10; ++v) {
      auto special = std::find_if(exceptional.begin(), exceptional.end(), [&](const Path& p) {
        return std::min(p.front(), p.back()) == u && std::max(p.front(), p.back()) == v;
      });
      if (special != exceptional.end()) {
        paths.push_back(*special);
      } else if (g.adjacent(u, v)) {
        paths.push_back({u, v});
      } else {
        // Girth 5 and diameter 2: exactly one common neighbor.
        for (auto w : g.neighbors(u)) {
          if (g.adjacent(w, v)) paths.push_back({u, w, v});
        }
      }
    }
  }
  return PathSystem(std::move(g), paths);
}

namespace {

Vertex parse_label(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer label, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "expected integer label, got '" + tok + "'");
  return static_cast<Vertex>(value);
}

}  // namespace

PathSystem read_path_system(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool header = false;
  std::optional<std::vector<Vertex>> labels;
  std::vector<Edge> edges;
  std::vector<std::pair<std::size_t, Path>> paths;
  std::size_t last_line = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    last_line = line_no;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "pathsystem" || tok[1] != "v1") {
        throw ParseError(line_no, "expected header 'pathsystem v1'");
      }
      header = true;
      continue;
    }
    if (tok[0] == "vertices") {
      if (labels) throw ParseError(line_no, "duplicate 'vertices' line");
      if (tok.size() < 3 || tok[2] != "labels") throw ParseError(line_no, "expected 'vertices <n> labels ...'");
      const Vertex n = parse_label(tok[1], line_no);
      if (n < 0 || static_cast<std::size_t>(n) != tok.size() - 3) {
        throw ParseError(line_no, "vertex count does not match label list");
      }
      std::vector<Vertex> l;
      for (std::size_t k = 3; k < tok.size(); ++k) l.push_back(parse_label(tok[k], line_no));
      std::vector<Vertex> sorted = l;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ParseError(line_no, "duplicate vertex label");
      }
      labels = std::move(l);
    } else if (tok[0] == "edge") {
      if (!labels) throw ParseError(line_no, "'edge' before 'vertices'");
      if (tok.size() != 3) throw ParseError(line_no, "expected 'edge <u> <v>'");
      const Vertex u = parse_label(tok[1], line_no);
      const Vertex v = parse_label(tok[2], line_no);
      for (auto x : {u, v}) {
        if (std::find(labels->begin(), labels->end(), x) == labels->end()) {
          throw ParseError(line_no, "unknown vertex " + std::to_string(x));
        }
      }
      if (u == v) throw ParseError(line_no, "self-loop at " + std::to_string(u));
      const Edge e{std::min(u, v), std::max(u, v)};
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
        throw ParseError(line_no, "duplicate edge " + pair_name(u, v));
      }
      edges.push_back(e);
    } else if (tok[0] == "path") {
      if (tok.size() < 6 || tok[3] != ":") throw ParseError(line_no, "expected 'path <u> <v> : <u> ... <v>'");
      const Vertex u = parse_label(tok[1], line_no);
      const Vertex v = parse_label(tok[2], line_no);
      Path p;
      for (std::size_t k = 4; k < tok.size(); ++k) p.push_back(parse_label(tok[k], line_no));
      if (p.front() != u || p.back() != v) throw ParseError(line_no, "path endpoints do not match pair " + pair_name(u, v));
      paths.emplace_back(line_no, std::move(p));
    } else {
      throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!header) throw ParseError(line_no + 1, "missing header 'pathsystem v1'");
  if (!labels) throw ParseError(line_no + 1, "missing 'vertices' line");

  Graph g(*labels, edges);
  std::map<std::pair<Vertex, Vertex>, std::size_t> seen;
  std::vector<Path> plain;
  for (auto& [line, p] : paths) {
    if (auto why = path_defect(g, p); !why.empty()) throw ParseError(line, why);
    const auto key = std::make_pair(std::min(p.front(), p.back()), std::max(p.front(), p.back()));
    if (auto [it, fresh] = seen.emplace(key, line); !fresh) {
      throw ParseError(line, "duplicate path for pair " + pair_name(key.first, key.second) + " (first on line " +
                                 std::to_string(it->second) + ")");
    }
    plain.push_back(p);
  }
  const auto& verts = g.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!seen.contains({verts[i], verts[j]})) {
        throw ParseError(last_line, "pair " + pair_name(verts[i], verts[j]) + " has no path");
      }
    }
  }
  return PathSystem(std::move(g), plain);
}

PathSystem read_path_system_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw InputError("cannot open " + filename);
  return read_path_system(in);
}

void write_path_system(std::ostream& out, const PathSystem& ps) {
  const Graph& g = ps.graph();
  out << "pathsystem v1\n";
  out << "vertices " << g.order() << " labels";
  for (auto v : g.vertices()) out << ' ' << v;
  out << '\n';
  for (const auto& [u, v] : g.edges()) out << "edge " << u << ' ' << v << '\n';
  for (const auto& p : ps.paths()) {
    out << "path " << p.front() << ' ' << p.back() << " :";
    for (auto v : p) out << ' ' << v;
    out << '\n';
  }
}

std::string to_text(const PathSystem& ps) {
  std::ostringstream os;
  write_path_system(os, ps);
  return os.str();
}

}  // namespace pathsys
