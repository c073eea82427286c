#pragma once

// Rational linear inequality systems in canonical form  sum_i c_i x_i >= d,
// exact feasibility decisions, and Farkas certificates.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pathsys/numtheory.hpp"

namespace pathsys {

using Rational = mpq_class;

struct Term {
  std::size_t var = 0;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// sum(terms) >= bound. Terms are sorted by variable, merged, and nonzero.
struct Row {
  std::vector<Term> terms;
  Rational bound;
  std::string tag;
};

class LinearSystem {
 public:
  /// Names must be non-empty and free of whitespace; duplicates are rejected.
  std::size_t add_variable(std::string name);

  /// Adds sum(terms) >= bound after canonicalizing the terms.
  std::size_t add_row(std::vector<Term> terms, Rational bound, std::string tag = {});
  /// Adds sum(terms) <= bound, stored negated.
  std::size_t add_row_le(std::vector<Term> terms, Rational bound, std::string tag = {});

  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(std::size_t k) const { return rows_.at(k); }

  /// Evaluates the left-hand side of row k at x.
  Rational lhs(std::size_t k, const std::vector<Rational>& x) const;

 private:
  std::vector<std::string> variables_;
  std::vector<Row> rows_;
};

struct Feasible {
  /// One value per variable, in declaration order.
  std::vector<Rational> witness;
};

struct Infeasible {
  /// Sparse nonnegative multipliers (row index, y_k), ascending row index.
  std::vector<std::pair<std::size_t, Rational>> certificate;
};

using Verdict = std::variant<Feasible, Infeasible>;

inline bool is_feasible(const Verdict& v) { return std::holds_alternative<Feasible>(v); }

struct SolveStats {
  std::uint64_t pivots = 0;
  std::uint64_t degenerate_pivots = 0;
};

/// Exact decision of feasibility. Either a witness satisfying every row, or
/// y >= 0 with sum_k y_k a_k = 0 and sum_k y_k d_k > 0.
///
/// Internally solves  max d.y  s.t.  A^T y = 0, 1.y <= 1, y >= 0  by a
/// revised simplex in exact integer arithmetic. Any basis with positive
/// objective already yields the certificate; at optimum value zero the
/// simplex multipliers of the first rows form a witness.
Verdict solve_feasibility(const LinearSystem& sys, SolveStats* stats = nullptr);

/// Exact re-check of a verdict against sys, independent of the solver.
/// Throws InputError on dimension mismatch.
bool verify_certificate(const LinearSystem& sys, const Verdict& v);

/// linsys v1 text format:
///   linsys v1
///   var <name> ...
///   row <d> : <coeff>*<name> ...
///   tag <row-index> <free text>
void write_linear_system(std::ostream& out, const LinearSystem& sys);
LinearSystem read_linear_system(std::istream& in);

/// `cert <row-index> <multiplier>` lines for Infeasible verdicts,
/// `witness <name> <value>` lines for Feasible ones.
void write_verdict(std::ostream& out, const LinearSystem& sys, const Verdict& v);
Verdict read_verdict(std::istream& in, const LinearSystem& sys);

struct LpDump {
  LinearSystem system;
  Verdict verdict;
};

/// A linsys block followed by its verdict, as written by `check --dump-certificate`.
LpDump read_lp_dump(std::istream& in);

}  // namespace pathsys
