#include "pathsys/linear_system.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace pathsys {

std::size_t LinearSystem::add_variable(std::string name) {
  if (name.empty() || std::any_of(name.begin(), name.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
    throw InputError("linear system: invalid variable name '" + name + "'");
  }
  if (std::find(variables_.begin(), variables_.end(), name) != variables_.end()) {
    throw InputError("linear system: duplicate variable '" + name + "'");
  }
  variables_.push_back(std::move(name));
  return variables_.size() - 1;
}

std::size_t LinearSystem::add_row(std::vector<Term> terms, Rational bound, std::string tag) {
  for (const auto& t : terms) {
    if (t.var >= variables_.size()) {
      throw InputError("linear system: row references undeclared variable index " + std::to_string(t.var));
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return sgn(t.coeff) == 0; });
  rows_.push_back(Row{std::move(merged), std::move(bound), std::move(tag)});
  return rows_.size() - 1;
}

std::size_t LinearSystem::add_row_le(std::vector<Term> terms, Rational bound, std::string tag) {
  for (auto& t : terms) t.coeff = -t.coeff;
  return add_row(std::move(terms), -bound, std::move(tag));
}

Rational LinearSystem::lhs(std::size_t k, const std::vector<Rational>& x) const {
  Rational total = 0;
  for (const auto& t : rows_.at(k).terms) total += t.coeff * x.at(t.var);
  return total;
}

namespace {

struct Entry {
  std::size_t row;
  mpz_class value;
};

using Column = std::vector<Entry>;

// Revised simplex on  max c.y  s.t.  Y y = e_last,  y >= 0, where Y is the
// (n+1) x (M+1+n) matrix [A^T 0 I; 1 1 0] (rows, slack, artificials). Each
// row of A is first scaled to integers. The basis inverse is kept
// fraction-free as M / d with d = |det B| and M integral, so a pivot is
// M_i <- (a_r M_i - a_i M_r) / d with exact division and no gcds.
class FeasibilitySimplex {
 public:
  explicit FeasibilitySimplex(const LinearSystem& sys) : n_(sys.num_variables()), rows_(sys.num_rows()) {
    m_ = n_ + 1;
    columns_.reserve(rows_ + 1 + n_);
    cost_.reserve(rows_ + 1 + n_);
    scale_.reserve(rows_);
    for (std::size_t k = 0; k < rows_; ++k) {
      const Row& row = sys.row(k);
      mpz_class s = row.bound.get_den();
      for (const auto& t : row.terms) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), t.coeff.get_den_mpz_t());
      Column col;
      for (const auto& t : row.terms) col.push_back({t.var, mpz_class(t.coeff.get_num() * (s / t.coeff.get_den()))});
      col.push_back({n_, s});
      columns_.push_back(std::move(col));
      cost_.push_back(row.bound.get_num() * (s / row.bound.get_den()));
      scale_.push_back(std::move(s));
    }
    columns_.push_back({{n_, 1}});  // slack of the normalization row
    cost_.push_back(0);
    for (std::size_t i = 0; i < n_; ++i) {
      columns_.push_back({{i, 1}});
      cost_.push_back(0);
    }
    binv_.assign(m_ * m_, mpz_class(0));
    for (std::size_t i = 0; i < m_; ++i) binv_[i * m_ + i] = 1;
    det_ = 1;
    basis_.resize(m_);
    for (std::size_t i = 0; i < n_; ++i) basis_[i] = artificial(i);
    basis_[n_] = rows_;
    xb_.assign(m_, mpz_class(0));
    xb_[n_] = 1;
    basic_.assign(columns_.size(), false);
    for (auto b : basis_) basic_[b] = true;
  }

  Verdict run(SolveStats* stats) {
    drive_out_artificials();
    optimize();
    if (stats) *stats = stats_;

    mpz_class objective = 0;
    for (std::size_t i = 0; i < m_; ++i) mpz_addmul(objective.get_mpz_t(), cost_[basis_[i]].get_mpz_t(), xb_[i].get_mpz_t());
    if (sgn(objective) > 0) {
      Infeasible out;
      for (std::size_t i = 0; i < m_; ++i) {
        const std::size_t k = basis_[i];
        if (k < rows_ && sgn(xb_[i]) != 0) {
          Rational y(xb_[i] * scale_[k], det_);
          y.canonicalize();
          out.certificate.emplace_back(k, std::move(y));
        }
      }
      std::sort(out.certificate.begin(), out.certificate.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      return out;
    }
    compute_duals();
    Feasible out;
    for (std::size_t i = 0; i < n_; ++i) {
      Rational w(pi_[i], det_);
      w.canonicalize();
      out.witness.push_back(std::move(w));
    }
    return out;
  }

 private:
  std::size_t artificial(std::size_t i) const { return rows_ + 1 + i; }
  bool is_artificial(std::size_t j) const { return j > rows_; }

  // d * B^-1 * Y_q
  std::vector<mpz_class> ftran(std::size_t q) const {
    std::vector<mpz_class> alpha(m_, mpz_class(0));
    for (const auto& e : columns_[q]) {
      for (std::size_t i = 0; i < m_; ++i) {
        const mpz_class& b = binv_[i * m_ + e.row];
        if (sgn(b) != 0) mpz_addmul(alpha[i].get_mpz_t(), b.get_mpz_t(), e.value.get_mpz_t());
      }
    }
    return alpha;
  }

  // d * c_B * B^-1
  void compute_duals() {
    pi_.assign(m_, mpz_class(0));
    for (std::size_t i = 0; i < m_; ++i) {
      const mpz_class& c = cost_[basis_[i]];
      if (sgn(c) == 0) continue;
      for (std::size_t k = 0; k < m_; ++k) {
        const mpz_class& b = binv_[i * m_ + k];
        if (sgn(b) != 0) mpz_addmul(pi_[k].get_mpz_t(), c.get_mpz_t(), b.get_mpz_t());
      }
    }
  }

  // d * (c_j - pi . Y_j)
  void reduced_cost(std::size_t j, mpz_class& r) const {
    r = cost_[j] * det_;
    for (const auto& e : columns_[j]) {
      if (sgn(pi_[e.row]) != 0) mpz_submul(r.get_mpz_t(), pi_[e.row].get_mpz_t(), e.value.get_mpz_t());
    }
  }

  void pivot(std::size_t r, std::size_t q, const std::vector<mpz_class>& alpha) {
    ++stats_.pivots;
    if (sgn(xb_[r]) == 0) ++stats_.degenerate_pivots;

    const mpz_class& ar = alpha[r];
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < m_; ++k) {
      if (sgn(binv_[r * m_ + k]) != 0) support.push_back(k);
    }
    mpz_class t;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      const mpz_class& ai = alpha[i];
      mpz_class* row = &binv_[i * m_];
      const mpz_class* prow = &binv_[r * m_];
      if (sgn(ai) == 0) {
        for (std::size_t k = 0; k < m_; ++k) {
          if (sgn(row[k]) == 0) continue;
          mpz_mul(t.get_mpz_t(), row[k].get_mpz_t(), ar.get_mpz_t());
          mpz_divexact(row[k].get_mpz_t(), t.get_mpz_t(), det_.get_mpz_t());
        }
      } else {
        for (std::size_t k = 0; k < m_; ++k) {
          mpz_mul(t.get_mpz_t(), row[k].get_mpz_t(), ar.get_mpz_t());
          if (sgn(prow[k]) != 0) mpz_submul(t.get_mpz_t(), ai.get_mpz_t(), prow[k].get_mpz_t());
          mpz_divexact(row[k].get_mpz_t(), t.get_mpz_t(), det_.get_mpz_t());
        }
      }
      mpz_mul(t.get_mpz_t(), xb_[i].get_mpz_t(), ar.get_mpz_t());
      mpz_submul(t.get_mpz_t(), ai.get_mpz_t(), xb_[r].get_mpz_t());
      mpz_divexact(xb_[i].get_mpz_t(), t.get_mpz_t(), det_.get_mpz_t());
    }
    det_ = ar;
    if (sgn(det_) < 0) {
      for (auto& b : binv_) b = -b;
      for (auto& x : xb_) x = -x;
      det_ = -det_;
    }

    basic_[basis_[r]] = false;
    basis_[r] = q;
    basic_[q] = true;
  }

  // Replaces the zero-valued artificial basics by real columns with
  // degenerate pivots. An artificial that cannot leave marks a variable that
  // occurs in no row; it stays basic at zero and never re-enters.
  void drive_out_artificials() {
    std::size_t remaining = n_;
    for (std::size_t q = 0; q <= rows_ && remaining > 0; ++q) {
      if (basic_[q]) continue;
      const auto alpha = ftran(q);
      for (std::size_t i = 0; i < n_; ++i) {
        if (is_artificial(basis_[i]) && sgn(alpha[i]) != 0) {
          pivot(i, q, alpha);
          --remaining;
          break;
        }
      }
    }
  }

  // Runs until the objective turns positive or no column prices in.
  // Dantzig pricing with a lexicographic ratio test: ties in xb_i / alpha_i
  // are broken by comparing row i of B^-1 scaled by 1 / alpha_i. Rows of B^-1
  // are linearly independent, so the choice is unique and no basis repeats.
  void optimize() {
    mpz_class r;
    mpz_class best;
    for (;;) {
      compute_duals();
      std::size_t q = columns_.size();
      for (std::size_t j = 0; j <= rows_; ++j) {
        if (basic_[j]) continue;
        reduced_cost(j, r);
        if (sgn(r) > 0 && (q == columns_.size() || r > best)) {
          q = j;
          mpz_swap(best.get_mpz_t(), r.get_mpz_t());
        }
      }
      if (q == columns_.size()) return;

      const auto alpha = ftran(q);
      std::size_t leave = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(alpha[i]) <= 0) continue;
        if (leave == m_ || lex_less(i, alpha[i], leave, alpha[leave])) leave = i;
      }
      if (leave == m_) throw std::logic_error("simplex: unbounded direction in a bounded program");
      const bool improves = sgn(xb_[leave]) != 0;
      pivot(leave, q, alpha);
      // The objective starts at 0 and any positive value is a certificate.
      if (improves) return;
    }
  }

  // (xb_i, row i of B^-1) / a_i  <lex  (xb_k, row k of B^-1) / a_k
  bool lex_less(std::size_t i, const mpz_class& ai, std::size_t k, const mpz_class& ak) const {
    const int first = cmp(xb_[i] * ak, xb_[k] * ai);
    if (first != 0) return first < 0;
    for (std::size_t c = 0; c < m_; ++c) {
      const mpz_class& bi = binv_[i * m_ + c];
      const mpz_class& bk = binv_[k * m_ + c];
      if (sgn(bi) == 0 && sgn(bk) == 0) continue;
      const int order = cmp(bi * ak, bk * ai);
      if (order != 0) return order < 0;
    }
    return false;
  }

  std::size_t n_;
  std::size_t rows_;
  std::size_t m_ = 0;
  std::vector<Column> columns_;
  std::vector<mpz_class> cost_;
  std::vector<mpz_class> scale_;
  std::vector<mpz_class> binv_;  // d * B^-1, m_ x m_, row-major
  mpz_class det_;
  std::vector<std::size_t> basis_;
  std::vector<mpz_class> xb_;  // d * x_B
  std::vector<mpz_class> pi_;  // d * duals
  std::vector<bool> basic_;
  SolveStats stats_;
};

bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x) {
  for (std::size_t k = 0; k < sys.num_rows(); ++k) {
    if (sys.lhs(k, x) < sys.row(k).bound) return false;
  }
  return true;
}

}  // namespace

Verdict solve_feasibility(const LinearSystem& sys, SolveStats* stats) {
  // All-ones is the natural witness of the homogeneous systems built here;
  // accept it outright when it works.
  std::vector<Rational> ones(sys.num_variables(), Rational(1));
  if (satisfies(sys, ones)) {
    if (stats) *stats = {};
    return Feasible{std::move(ones)};
  }
  return FeasibilitySimplex(sys).run(stats);
}

bool verify_certificate(const LinearSystem& sys, const Verdict& v) {
  if (const auto* f = std::get_if<Feasible>(&v)) {
    if (f->witness.size() != sys.num_variables()) {
      throw InputError("verify_certificate: witness has " + std::to_string(f->witness.size()) + " values for " +
                       std::to_string(sys.num_variables()) + " variables");
    }
    return satisfies(sys, f->witness);
  }
  const auto& cert = std::get<Infeasible>(v).certificate;
  std::vector<Rational> combo(sys.num_variables(), Rational(0));
  Rational rhs = 0;
  for (const auto& [k, y] : cert) {
    if (k >= sys.num_rows()) {
      throw InputError("verify_certificate: row index " + std::to_string(k) + " out of range");
    }
    if (sgn(y) < 0) return false;
    for (const auto& t : sys.row(k).terms) combo[t.var] += y * t.coeff;
    rhs += y * sys.row(k).bound;
  }
  return std::all_of(combo.begin(), combo.end(), [](const Rational& c) { return sgn(c) == 0; }) && sgn(rhs) > 0;
}

namespace {

Rational parse_rational(const std::string& s, std::size_t line) {
  const bool ok = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/';
  });
  Rational q;
  if (!ok || q.set_str(s, 10) != 0) throw ParseError(line, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError(line, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

void write_linear_system(std::ostream& out, const LinearSystem& sys) {
  out << "linsys v1\n";
  out << "var";
  for (const auto& name : sys.variables()) out << ' ' << name;
  out << '\n';
  for (const auto& row : sys.rows()) {
    out << "row " << row.bound.get_str() << " :";
    for (const auto& t : row.terms) out << ' ' << t.coeff.get_str() << '*' << sys.variables()[t.var];
    out << '\n';
  }
  for (std::size_t k = 0; k < sys.num_rows(); ++k) {
    if (!sys.row(k).tag.empty()) out << "tag " << k << ' ' << sys.row(k).tag << '\n';
  }
}

LinearSystem read_linear_system(std::istream& in) {
  LinearSystem sys;
  std::unordered_map<std::string, std::size_t> index;
  std::map<std::size_t, std::string> tags;
  std::string raw;
  std::size_t line = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (!header) {
      std::string version;
      ls >> version;
      if (kind != "linsys" || version != "v1") throw ParseError(line, "expected header 'linsys v1'");
      header = true;
      continue;
    }
    if (kind == "var") {
      if (sys.num_rows() > 0) throw ParseError(line, "'var' after first 'row'");
      for (std::string name; ls >> name;) {
        if (index.contains(name)) throw ParseError(line, "duplicate variable '" + name + "'");
        index[name] = sys.add_variable(name);
      }
    } else if (kind == "row") {
      std::string bound;
      std::string colon;
      if (!(ls >> bound >> colon) || colon != ":") throw ParseError(line, "expected 'row <d> : ...'");
      std::vector<Term> terms;
      for (std::string tok; ls >> tok;) {
        const auto star = tok.find('*');
        if (star == std::string::npos) throw ParseError(line, "expected <coeff>*<name>, got '" + tok + "'");
        const auto it = index.find(tok.substr(star + 1));
        if (it == index.end()) throw ParseError(line, "unknown variable '" + tok.substr(star + 1) + "'");
        terms.push_back({it->second, parse_rational(tok.substr(0, star), line)});
      }
      sys.add_row(std::move(terms), parse_rational(bound, line));
    } else if (kind == "tag") {
      std::size_t k = 0;
      if (!(ls >> k)) throw ParseError(line, "expected 'tag <row-index> <text>'");
      std::string text;
      std::getline(ls >> std::ws, text);
      tags[k] = text;
    } else {
      throw ParseError(line, "unknown directive '" + kind + "'");
    }
  }
  if (!header) throw ParseError(line + 1, "missing header 'linsys v1'");
  if (tags.empty()) return sys;
  // Tags may follow all rows, so rebuild with them attached.
  LinearSystem tagged;
  for (const auto& name : sys.variables()) tagged.add_variable(name);
  for (std::size_t k = 0; k < sys.num_rows(); ++k) {
    auto it = tags.find(k);
    tagged.add_row(sys.row(k).terms, sys.row(k).bound, it == tags.end() ? std::string{} : it->second);
  }
  for (const auto& [k, _] : tags) {
    if (k >= sys.num_rows()) throw InputError("linsys: tag for missing row " + std::to_string(k));
  }
  return tagged;
}

void write_verdict(std::ostream& out, const LinearSystem& sys, const Verdict& v) {
  if (const auto* f = std::get_if<Feasible>(&v)) {
    out << "verdict feasible\n";
    for (std::size_t i = 0; i < f->witness.size(); ++i) {
      out << "witness " << sys.variables().at(i) << ' ' << f->witness[i].get_str() << '\n';
    }
    return;
  }
  out << "verdict infeasible\n";
  for (const auto& [k, y] : std::get<Infeasible>(v).certificate) out << "cert " << k << ' ' << y.get_str() << '\n';
}

Verdict read_verdict(std::istream& in, const LinearSystem& sys) {
  std::string raw;
  std::size_t line = 0;
  std::optional<bool> feasible;
  Feasible f;
  Infeasible inf;
  std::vector<bool> assigned(sys.num_variables(), false);
  f.witness.assign(sys.num_variables(), Rational(0));
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "verdict") {
      std::string which;
      ls >> which;
      if (which != "feasible" && which != "infeasible") throw ParseError(line, "unknown verdict '" + which + "'");
      feasible = which == "feasible";
    } else if (kind == "cert" && feasible == false) {
      std::size_t k = 0;
      std::string y;
      if (!(ls >> k >> y)) throw ParseError(line, "expected 'cert <row-index> <multiplier>'");
      inf.certificate.emplace_back(k, parse_rational(y, line));
    } else if (kind == "witness" && feasible == true) {
      std::string name;
      std::string value;
      if (!(ls >> name >> value)) throw ParseError(line, "expected 'witness <name> <value>'");
      const auto& vars = sys.variables();
      const auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) throw ParseError(line, "unknown variable '" + name + "'");
      const auto i = static_cast<std::size_t>(it - vars.begin());
      f.witness[i] = parse_rational(value, line);
      assigned[i] = true;
    } else {
      throw ParseError(line, "unexpected '" + kind + "'");
    }
  }
  if (!feasible) throw InputError("verdict: missing 'verdict' line");
  if (*feasible) {
    if (std::find(assigned.begin(), assigned.end(), false) != assigned.end()) {
      throw InputError("verdict: witness does not assign every variable");
    }
    return f;
  }
  return inf;
}

LpDump read_lp_dump(std::istream& in) {
  std::string head;
  std::string tail;
  std::string raw;
  bool in_verdict = false;
  while (std::getline(in, raw)) {
    if (!in_verdict && raw.rfind("verdict", 0) == 0) in_verdict = true;
    (in_verdict ? tail : head) += raw + '\n';
  }
  std::istringstream sys_in(head);
  LpDump out{read_linear_system(sys_in), Feasible{}};
  std::istringstream verdict_in(tail);
  out.verdict = read_verdict(verdict_in, out.system);
  return out;
}

}  // namespace pathsys
