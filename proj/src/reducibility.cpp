#include "pathsys/reducibility.hpp"

#include <algorithm>

namespace pathsys {

namespace {

enum Side : signed char { kUndecided = 0, kA = 1, kB = 2 };

std::string pair_text(Vertex u, Vertex v) { return "{" + std::to_string(u) + "," + std::to_string(v) + "}"; }

// Incremental closure with an undo trail. Each vertex joining a side is
// paired with every vertex already there, so every same-side pair is seen
// exactly once.
class Propagator {
 public:
  explicit Propagator(const PathSystem& ps) : ps_(ps), n_(ps.order()), side_(n_, kUndecided) {}

  std::size_t mark() const { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::size_t v = trail_.back();
      trail_.pop_back();
      members_[side_[v] - 1].pop_back();
      side_[v] = kUndecided;
    }
    queue_.clear();
  }

  /// False on conflict; conflict_ then names the doubly forced vertex.
  bool assign(std::size_t v, Side s) {
    if (!force(v, s)) return false;
    return drain();
  }

  Side side(std::size_t v) const { return side_[v]; }
  std::size_t conflict() const { return conflict_; }

  std::optional<std::size_t> first_undecided() const {
    for (std::size_t v = 0; v < n_; ++v) {
      if (side_[v] == kUndecided) return v;
    }
    return std::nullopt;
  }

 private:
  bool force(std::size_t v, Side s) {
    if (side_[v] == s) return true;
    if (side_[v] != kUndecided) {
      conflict_ = v;
      return false;
    }
    side_[v] = s;
    trail_.push_back(v);
    members_[s - 1].push_back(v);
    queue_.push_back(v);
    return true;
  }

  bool drain() {
    while (!queue_.empty()) {
      const std::size_t v = queue_.back();
      queue_.pop_back();
      const Side s = side_[v];
      // members_ may grow while we scan it; index rather than iterate.
      for (std::size_t k = 0; k < members_[s - 1].size(); ++k) {
        const std::size_t u = members_[s - 1][k];
        if (u == v) continue;
        const Path& p = ps_.path_by_index(u, v);
        for (std::size_t t = 1; t + 1 < p.size(); ++t) {
          if (!force(ps_.graph().index_of(p[t]), s)) {
            queue_.clear();
            return false;
          }
        }
      }
    }
    return true;
  }

  const PathSystem& ps_;
  std::size_t n_;
  std::vector<Side> side_;
  std::vector<std::size_t> members_[2];
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> queue_;
  std::size_t conflict_ = 0;
};

class ReductionSearch {
 public:
  ReductionSearch(const PathSystem& ps, const SearchOptions& opts)
      : ps_(ps), opts_(opts), prop_(ps), pinned_(opts.swap_roles ? kB : kA), other_(opts.swap_roles ? kA : kB) {}

  SearchResult run() {
    const std::size_t n = ps_.order();
    for (std::size_t seed = 1; seed < n && !result_.reduction && !result_.budget_exhausted; ++seed) {
      const std::size_t base = prop_.mark();
      bool ok = prop_.assign(0, pinned_);
      for (std::size_t earlier = 1; ok && earlier < seed; ++earlier) ok = prop_.assign(earlier, pinned_);
      if (ok) ok = prop_.assign(seed, other_);
      if (ok) {
        dfs();
      } else {
        ++result_.branches;
      }
      prop_.undo(base);
    }
    return result_;
  }

 private:
  void dfs() {
    if (++result_.branches > opts_.budget) {
      result_.budget_exhausted = true;
      return;
    }
    const auto next = prop_.first_undecided();
    if (!next) {
      Reduction r;
      for (std::size_t v = 0; v < ps_.order(); ++v) {
        (prop_.side(v) == kA ? r.a : r.b).push_back(ps_.graph().vertices()[v]);
      }
      result_.reduction = std::move(r);
      return;
    }
    for (Side s : {pinned_, other_}) {
      const std::size_t m = prop_.mark();
      if (prop_.assign(*next, s)) dfs();
      prop_.undo(m);
      if (result_.reduction || result_.budget_exhausted) return;
    }
  }

  const PathSystem& ps_;
  SearchOptions opts_;
  Propagator prop_;
  Side pinned_;
  Side other_;
  SearchResult result_;
};

}  // namespace

ReductionCheck verify_reduction(const PathSystem& ps, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  const Graph& g = ps.graph();
  if (a.empty() || b.empty()) return {false, std::nullopt, "both sides must be nonempty"};
  std::vector<Side> side(g.order(), kUndecided);
  for (const auto* part : {&a, &b}) {
    const Side s = part == &a ? kA : kB;
    for (auto v : *part) {
      if (!g.contains(v)) return {false, std::nullopt, "unknown vertex " + std::to_string(v)};
      auto& slot = side[g.index_of(v)];
      if (slot != kUndecided) return {false, std::nullopt, "vertex " + std::to_string(v) + " listed twice"};
      slot = s;
    }
  }
  if (std::find(side.begin(), side.end(), kUndecided) != side.end()) {
    return {false, std::nullopt, "sides do not cover every vertex"};
  }
  const auto& labels = g.vertices();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (side[i] != side[j]) continue;
      for (auto w : ps.path_by_index(i, j)) {
        if (side[g.index_of(w)] != side[i]) {
          return {false, std::make_pair(labels[i], labels[j]),
                  "path of " + pair_text(labels[i], labels[j]) + " leaves its side at " + std::to_string(w)};
        }
      }
    }
  }
  return {true, std::nullopt, {}};
}

Propagation closure_propagate(const PathSystem& ps, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  const Graph& g = ps.graph();
  for (auto v : a) {
    if (std::find(b.begin(), b.end(), v) != b.end()) {
      throw InputError("closure_propagate: vertex " + std::to_string(v) + " is on both sides");
    }
  }
  Propagator prop(ps);
  Propagation out;
  for (const auto* part : {&a, &b}) {
    const Side s = part == &a ? kA : kB;
    for (auto v : *part) {
      if (!prop.assign(g.index_of(v), s)) {
        out.conflict = true;
        out.conflict_vertex = g.vertices()[prop.conflict()];
        break;
      }
    }
    if (out.conflict) break;
  }
  for (std::size_t v = 0; v < g.order(); ++v) {
    const Vertex label = g.vertices()[v];
    switch (prop.side(v)) {
      case kA: out.a.push_back(label); break;
      case kB: out.b.push_back(label); break;
      default: out.undecided.push_back(label); break;
    }
  }
  return out;
}

SearchResult find_reduction(const PathSystem& ps, const SearchOptions& options) {
  if (ps.order() < 2) throw InputError("find_reduction: need at least two vertices");
  SearchResult result = ReductionSearch(ps, options).run();
  if (result.reduction) {
    if (!verify_reduction(ps, result.reduction->a, result.reduction->b).valid) {
      throw std::logic_error("find_reduction: produced an invalid reduction");
    }
  }
  return result;
}

}  // namespace pathsys
