#pragma once

#include <optional>
#include <vector>

#include "pathsys/graph.hpp"
#include "pathsys/linear_system.hpp"
#include "pathsys/numtheory.hpp"
#include "pathsys/path_system.hpp"

namespace pathsys {

/// Edge weights w_e >= 1, and for every ordered pair (u, v) and neighbor z
/// of v:  w(P_{u,z}) + w(zv) - w(P_{u,v}) >= 0  with w(P_{u,u}) = 0.
///
/// By induction on edge count this finite family implies w(P_{u,v}) <= w(Q)
/// for every u-v walk Q. Rows that cancel to 0 >= 0 are dropped and repeated
/// rows are kept once; the tag records the first (u, v, z) producing a row.
/// Variable i is edge i of ps.graph().edges(). Throws InputError when ps is
/// inconsistent.
LinearSystem build_metrizability_system(const PathSystem& ps);

/// Decides metrizability of ps; a Feasible witness is a metrizing weight
/// function with minimum at least 1.
Verdict is_metrizable(const PathSystem& ps);

/// Residue-class system for P_p: one variable per class {a, -a} of R, named
/// x_<min(a, p-a)>, and rows
///   x_a >= 1,
///   x_b + x_c - 2 x_a >= 0   for a, b, c in R, 2a = b + c != 3,
///   x_b + x_c - 3 x_1 >= 0   for b, c in R, b + c = 3,
/// with (b, c)/(c, b) duplicates and 0 >= 0 rows removed.
LinearSystem build_symmetrized_system(const PrimeField& pf);

/// One inequality  coeff * x_lhs <= x_rhs1 + x_rhs2  (indices into variables).
struct GeneralInequality {
  Rational coeff;
  std::size_t lhs = 0;
  std::size_t rhs1 = 0;
  std::size_t rhs2 = 0;
};

/// Inequalities a_m x_{i_m} <= x_{j_m} + x_{k_m} with every a_m >= 2, over
/// labeled positive variables.
class GeneralSystem {
 public:
  GeneralSystem() = default;
  /// Throws InputError if some coefficient is below 2 or an index is out of range.
  GeneralSystem(std::vector<Vertex> variables, std::vector<GeneralInequality> inequalities);

  const std::vector<Vertex>& variables() const { return variables_; }
  const std::vector<GeneralInequality>& inequalities() const { return inequalities_; }

 private:
  std::vector<Vertex> variables_;
  std::vector<GeneralInequality> inequalities_;
};

/// Digraph with an arc lhs -> rhs1 and lhs -> rhs2 for every inequality.
Digraph system_digraph(const GeneralSystem& gs);

/// Canonical-form system:  x_i >= 1  and  x_j + x_k - a x_i >= 0.
LinearSystem to_linear_system(const GeneralSystem& gs);

struct ReducedSystem {
  GeneralSystem system;
  Digraph digraph;
  /// Inequality indices grouped by left-hand variable index.
  std::vector<std::vector<std::size_t>> by_lhs;
};

/// Subsystem on R' = R \ {(p+3)/2, (p-3)/2} without the x_a = x_{-a}
/// identification:
///   2 x_a <= x_b + x_c  for a, b, c in R', 2a = b + c != 3, b != c,
///   3 x_1 <= x_b + x_c  for b, c in R', b + c = 3.
ReducedSystem build_reduced_system(const PrimeField& pf);

enum class LemmaVerdict { InfeasibleByLemma, FeasibleAllEqual, Inconclusive };

const char* to_string(LemmaVerdict v);

/// For a strongly connected system: feasible iff every coefficient is 2,
/// and then only with all variables equal. Inconclusive otherwise.
LemmaVerdict strong_lemma_verdict(const GeneralSystem& gs);

struct WitnessArc {
  Vertex from = 0;
  Vertex to = 0;
  /// Generating inequality, with labels rather than indices.
  Rational coeff;
  Vertex lhs = 0;
  Vertex rhs1 = 0;
  Vertex rhs2 = 0;
};

struct TwoStepWitness {
  Vertex beta = 0;
  WitnessArc first;
  WitnessArc second;
};

/// Two-step route a -> beta -> b in the digraph of build_reduced_system.
/// For 4a != b, beta ranges over (Gamma(2a) ∩ R) \ Gamma(b/2) subject to
/// beta, 2a - beta, 2beta - b in R' and beta not in {a, b}. For 4a = b any
/// beta in R' \ {a, b} whose two arcs exist is accepted. nullopt when no
/// such beta exists. Throws InputError when a or b lies outside R'.
std::optional<TwoStepWitness> two_step_witness(const PrimeField& pf, const ReducedSystem& reduced, Vertex a, Vertex b);
std::optional<TwoStepWitness> two_step_witness(const PrimeField& pf, Vertex a, Vertex b);

}  // namespace pathsys
