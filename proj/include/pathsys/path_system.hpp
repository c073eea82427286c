#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathsys/graph.hpp"
#include "pathsys/numtheory.hpp"

namespace pathsys {

/// Simple path (v_0, ..., v_k) in the ambient graph.
using Path = std::vector<Vertex>;

/// Exactly one simple path per unordered pair of distinct vertices.
///
/// Paths are stored oriented from the smaller label to the larger one;
/// P_{u,v} and P_{v,u} are the same object traversed in opposite directions.
class PathSystem {
 public:
  /// Validates totality and that every path is a simple path in g between
  /// its pair. Paths may be given in either orientation.
  PathSystem(Graph g, const std::vector<Path>& paths);

  const Graph& graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }
  std::size_t pair_count() const { return order() * (order() - (order() > 0 ? 1 : 0)) / 2; }

  /// Stored path between u and v, oriented from min(u,v) to max(u,v).
  const Path& path(Vertex u, Vertex v) const;
  /// Stored path between u and v, oriented to start at u.
  Path path_from(Vertex u, Vertex v) const;
  /// Same, by vertex index (hot loops).
  const Path& path_by_index(std::size_t i, std::size_t j) const;

  /// All stored paths in canonical pair order.
  std::vector<Path> paths() const;

  /// Copy with P_{u,v} replaced; `replacement` must still be a valid path.
  PathSystem with_path(const Path& replacement) const;

  friend bool operator==(const PathSystem& a, const PathSystem& b) {
    return a.graph_ == b.graph_ && a.paths_ == b.paths_;
  }

 private:
  std::size_t slot(std::size_t i, std::size_t j) const { return i < j ? i * order() + j : j * order() + i; }

  Graph graph_;
  std::vector<Path> paths_;  // order() x order(), only i < j used
};

/// Two paths coincide as vertex sequences up to reversal.
bool same_path(const Path& a, const Path& b);

/// P_p on the Paley graph G_p. Requires an admissible prime.
PathSystem build_paley_system(const PrimeField& pf);

struct ConsistencyViolation {
  Path path;
  Vertex x = 0;
  Vertex y = 0;
  Path subpath;
  Path stored;
};

struct ConsistencyReport {
  bool consistent = true;
  /// First violation in canonical pair order.
  std::optional<ConsistencyViolation> violation;
};

ConsistencyReport is_consistent(const PathSystem& ps);

/// Invariance under every rotation a -> a + x of F_p. The system must be
/// labeled 0..p-1 with p prime.
bool check_cyclic_symmetry(const PathSystem& ps);

struct Restriction {
  std::optional<PathSystem> system;
  /// Pair whose path leaves the vertex set, when restriction fails.
  std::optional<std::pair<Vertex, Vertex>> escaping_pair;
};

Restriction restrict(const PathSystem& ps, const std::vector<Vertex>& s);

/// Petersen graph on 1..10 with the non-metrizable, reducible path system:
/// outer cycle 1-2-3-4-5, spokes i-(i+5), inner pentagram 6-8-10-7-9-6.
/// Adjacent pairs use their edge, other pairs their unique 2-path, except the
/// five pairs {2,8}, {1,7}, {3,9}, {4,10}, {5,6}, which take the 3-paths
/// (2,1,6,8), (1,5,10,7), (3,2,7,9), (4,3,8,10), (5,4,9,6). These five were
/// transcribed from the colored edges of the published drawing.
PathSystem petersen_fixture();

/// Text format:
///   pathsystem v1
///   vertices <n> labels <l_1> ... <l_n>
///   edge <u> <v>
///   path <u> <v> : <u> <x_1> ... <v>
/// '#' starts a comment. Errors are ParseError with the line number.
PathSystem read_path_system(std::istream& in);
PathSystem read_path_system_file(const std::string& filename);
void write_path_system(std::ostream& out, const PathSystem& ps);
std::string to_text(const PathSystem& ps);

}  // namespace pathsys
