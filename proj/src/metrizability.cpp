#include "pathsys/metrizability.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace pathsys {

namespace {

// Collects rows, dropping 0 >= 0 and exact repeats.
class RowCollector {
 public:
  explicit RowCollector(LinearSystem& sys) : sys_(sys) {}

  void add(std::vector<Term> terms, const Rational& bound, const std::string& tag) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
    std::vector<Term> merged;
    for (auto& t : terms) {
      if (!merged.empty() && merged.back().var == t.var) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(t);
      }
    }
    std::erase_if(merged, [](const Term& t) { return sgn(t.coeff) == 0; });
    if (merged.empty() && sgn(bound) <= 0) return;
    std::string key = bound.get_str();
    for (const auto& t : merged) key += " " + std::to_string(t.var) + ":" + t.coeff.get_str();
    if (!seen_.insert(key).second) return;
    sys_.add_row(std::move(merged), bound, tag);
  }

 private:
  LinearSystem& sys_;
  std::set<std::string> seen_;
};

std::string label(Vertex v) { return std::to_string(v); }

void append_path_terms(const Graph& g, const Path& p, const Rational& sign, std::vector<Term>& out) {
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    out.push_back({static_cast<std::size_t>(g.edge_id(p[k], p[k + 1])), sign});
  }
}

void require_admissible(const PrimeField& pf, const char* who) {
  if (auto why = admissibility_failure(pf.p())) throw InputError(std::string(who) + ": " + *why);
}

}  // namespace

LinearSystem build_metrizability_system(const PathSystem& ps) {
  if (auto report = is_consistent(ps); !report.consistent) {
    const auto& v = *report.violation;
    throw InputError("build_metrizability_system: path system is inconsistent at pair {" + label(v.x) + "," +
                     label(v.y) + "}");
  }
  const Graph& g = ps.graph();
  LinearSystem sys;
  for (const auto& [u, v] : g.edges()) sys.add_variable("w_" + label(u) + "_" + label(v));
  for (std::size_t e = 0; e < g.size(); ++e) {
    sys.add_row({{e, 1}}, 1, "positive " + label(g.edges()[e].first) + " " + label(g.edges()[e].second));
  }
  RowCollector rows(sys);
  const Rational plus = 1;
  const Rational minus = -1;
  for (auto u : g.vertices()) {
    for (auto v : g.vertices()) {
      if (u == v) continue;
      const Path& puv = ps.path(u, v);
      for (auto z : g.neighbors(v)) {
        std::vector<Term> terms;
        if (z != u) append_path_terms(g, ps.path(u, z), plus, terms);
        terms.push_back({static_cast<std::size_t>(g.edge_id(z, v)), plus});
        append_path_terms(g, puv, minus, terms);
        rows.add(std::move(terms), 0, "extend u=" + label(u) + " v=" + label(v) + " z=" + label(z));
      }
    }
  }
  return sys;
}

Verdict is_metrizable(const PathSystem& ps) { return solve_feasibility(build_metrizability_system(ps)); }

LinearSystem build_symmetrized_system(const PrimeField& pf) {
  require_admissible(pf, "build_symmetrized_system");
  const auto& residues = pf.residues();
  LinearSystem sys;
  std::map<std::int64_t, std::size_t> var_of_class;
  for (auto a : residues) {
    const std::int64_t rep = std::min(a, pf.neg(a));
    if (!var_of_class.contains(rep)) var_of_class[rep] = 0;
  }
  for (auto& [rep, idx] : var_of_class) idx = sys.add_variable("x_" + std::to_string(rep));
  auto var = [&](std::int64_t a) { return var_of_class.at(std::min(pf.reduce(a), pf.neg(a))); };

  for (const auto& [rep, idx] : var_of_class) sys.add_row({{idx, 1}}, 1, "positive class " + std::to_string(rep));

  RowCollector rows(sys);
  for (std::size_t i = 0; i < residues.size(); ++i) {
    for (std::size_t j = i; j < residues.size(); ++j) {
      const std::int64_t b = residues[i];
      const std::int64_t c = residues[j];
      const std::int64_t sum = pf.add(b, c);
      const std::string bc = " b=" + std::to_string(b) + " c=" + std::to_string(c);
      if (sum == 3) {
        rows.add({{var(b), 1}, {var(c), 1}, {var(1), -3}}, 0, "three" + bc);
        continue;
      }
      const std::int64_t a = pf.div(sum, 2);
      if (!pf.is_residue(a)) continue;
      rows.add({{var(b), 1}, {var(c), 1}, {var(a), -2}}, 0, "midpoint a=" + std::to_string(a) + bc);
    }
  }
  return sys;
}

GeneralSystem::GeneralSystem(std::vector<Vertex> variables, std::vector<GeneralInequality> inequalities)
    : variables_(std::move(variables)), inequalities_(std::move(inequalities)) {
  for (const auto& q : inequalities_) {
    if (q.coeff < 2) throw InputError("general system: coefficient " + q.coeff.get_str() + " is below 2");
    for (auto idx : {q.lhs, q.rhs1, q.rhs2}) {
      if (idx >= variables_.size()) throw InputError("general system: variable index out of range");
    }
  }
}

Digraph system_digraph(const GeneralSystem& gs) {
  Digraph d(gs.variables());
  const auto& vars = gs.variables();
  for (const auto& q : gs.inequalities()) {
    d.add_arc(vars[q.lhs], vars[q.rhs1]);
    d.add_arc(vars[q.lhs], vars[q.rhs2]);
  }
  return d;
}

LinearSystem to_linear_system(const GeneralSystem& gs) {
  LinearSystem sys;
  for (auto v : gs.variables()) sys.add_variable("x_" + label(v));
  for (std::size_t i = 0; i < gs.variables().size(); ++i) sys.add_row({{i, 1}}, 1, "positive");
  for (std::size_t m = 0; m < gs.inequalities().size(); ++m) {
    const auto& q = gs.inequalities()[m];
    sys.add_row({{q.rhs1, 1}, {q.rhs2, 1}, {q.lhs, -q.coeff}}, 0, "inequality " + std::to_string(m));
  }
  return sys;
}

ReducedSystem build_reduced_system(const PrimeField& pf) {
  require_admissible(pf, "build_reduced_system");
  const std::int64_t excluded_hi = pf.div(3, 2);            // (p+3)/2
  const std::int64_t excluded_lo = pf.div(pf.neg(3), 2);    // (p-3)/2
  std::vector<Vertex> kept;
  for (auto a : pf.residues()) {
    if (a != excluded_hi && a != excluded_lo) kept.push_back(static_cast<Vertex>(a));
  }
  std::map<std::int64_t, std::size_t> index;
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = i;
  if (!index.contains(1)) throw std::logic_error("build_reduced_system: 1 missing from R'");

  std::vector<GeneralInequality> rows;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      const std::int64_t sum = pf.add(kept[i], kept[j]);
      if (sum == 3) {
        rows.push_back({3, index.at(1), i, j});
        continue;
      }
      const auto it = index.find(pf.div(sum, 2));
      if (it != index.end()) rows.push_back({2, it->second, i, j});
    }
  }
  GeneralSystem gs(kept, std::move(rows));
  Digraph d = system_digraph(gs);
  std::vector<std::vector<std::size_t>> by_lhs(kept.size());
  for (std::size_t m = 0; m < gs.inequalities().size(); ++m) by_lhs[gs.inequalities()[m].lhs].push_back(m);
  return {std::move(gs), std::move(d), std::move(by_lhs)};
}

const char* to_string(LemmaVerdict v) {
  switch (v) {
    case LemmaVerdict::InfeasibleByLemma: return "InfeasibleByLemma";
    case LemmaVerdict::FeasibleAllEqual: return "FeasibleAllEqual";
    case LemmaVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

LemmaVerdict strong_lemma_verdict(const GeneralSystem& gs) {
  if (!strongly_connected(system_digraph(gs)).strongly_connected) return LemmaVerdict::Inconclusive;
  const bool all_two = std::all_of(gs.inequalities().begin(), gs.inequalities().end(),
                                   [](const GeneralInequality& q) { return q.coeff == 2; });
  return all_two ? LemmaVerdict::FeasibleAllEqual : LemmaVerdict::InfeasibleByLemma;
}

namespace {

std::optional<WitnessArc> generating_arc(const ReducedSystem& reduced, Vertex from, Vertex to) {
  const auto& vars = reduced.system.variables();
  const auto& rows = reduced.system.inequalities();
  const auto it = std::lower_bound(vars.begin(), vars.end(), from);
  const auto from_idx = static_cast<std::size_t>(it - vars.begin());
  auto matches = [&](const GeneralInequality& q) {
    return vars[q.lhs] == from && (vars[q.rhs1] == to || vars[q.rhs2] == to);
  };
  if (from_idx < reduced.by_lhs.size()) {
    for (auto m : reduced.by_lhs[from_idx]) {
      const auto& q = rows[m];
      if (matches(q)) return WitnessArc{from, to, q.coeff, vars[q.lhs], vars[q.rhs1], vars[q.rhs2]};
    }
    return std::nullopt;
  }
  for (const auto& q : rows) {
    if (matches(q)) return WitnessArc{from, to, q.coeff, vars[q.lhs], vars[q.rhs1], vars[q.rhs2]};
  }
  return std::nullopt;
}

}  // namespace

std::optional<TwoStepWitness> two_step_witness(const PrimeField& pf, const ReducedSystem& reduced, Vertex a,
                                               Vertex b) {
  const auto& vars = reduced.system.variables();
  auto in_reduced = [&](std::int64_t x) { return std::binary_search(vars.begin(), vars.end(), static_cast<Vertex>(x)); };
  if (!in_reduced(a) || !in_reduced(b)) throw InputError("two_step_witness: arguments must lie in R'");
  if (a == b) throw InputError("two_step_witness: endpoints must differ");

  auto route_via = [&](Vertex beta) -> std::optional<TwoStepWitness> {
    auto first = generating_arc(reduced, a, beta);
    auto second = generating_arc(reduced, beta, b);
    if (!first || !second) return std::nullopt;
    return TwoStepWitness{beta, *first, *second};
  };

  if (pf.mul(4, a) == pf.reduce(b)) {
    for (auto beta : vars) {
      if (beta == a || beta == b) continue;
      if (reduced.digraph.has_arc(a, beta) && reduced.digraph.has_arc(beta, b)) return route_via(beta);
    }
    return std::nullopt;
  }
  const std::int64_t two_a = pf.mul(2, a);
  const std::int64_t half_b = pf.div(b, 2);
  for (auto beta : pf.residues()) {
    const bool in_s = pf.is_residue(two_a - beta) && !pf.is_residue(beta - half_b);
    if (!in_s || beta == a || beta == b) continue;
    if (!in_reduced(beta) || !in_reduced(pf.sub(two_a, beta)) || !in_reduced(pf.sub(pf.mul(2, beta), b))) continue;
    if (auto w = route_via(static_cast<Vertex>(beta))) return w;
  }
  return std::nullopt;
}

std::optional<TwoStepWitness> two_step_witness(const PrimeField& pf, Vertex a, Vertex b) {
  return two_step_witness(pf, build_reduced_system(pf), a, b);
}

}  // namespace pathsys
