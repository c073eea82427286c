#include "pathsys/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pathsys/audit.hpp"
#include "pathsys/metrizability.hpp"
#include "pathsys/reducibility.hpp"

namespace pathsys {

namespace {

template <typename F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  return std::round(elapsed.count() * 1000.0) / 1000.0;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + "}";
}

std::string fixed(double x, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << x;
  return os.str();
}

std::string verdict_text(const Verdict& v) { return is_feasible(v) ? "FEASIBLE" : "INFEASIBLE"; }

std::string lp_artifact(const LinearSystem& sys, const Verdict& v, bool verified, const SolveStats& stats) {
  std::ostringstream os;
  os << "vars=" << sys.num_variables() << " rows=" << sys.num_rows();
  if (const auto* inf = std::get_if<Infeasible>(&v)) {
    os << " certificate-rows=" << inf->certificate.size();
  } else {
    os << " witness-values=" << std::get<Feasible>(v).witness.size();
  }
  os << " verified=" << (verified ? "yes" : "no") << " pivots=" << stats.pivots;
  std::ostringstream dump;
  write_verdict(dump, sys, v);
  os << " verdict-digest=" << digest(dump.str());
  return os.str();
}

void dump_lp(const std::string& path, const LinearSystem& sys, const Verdict& v) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_linear_system(out, sys);
  write_verdict(out, sys, v);
}

struct LpOutcome {
  Verdict verdict;
  bool verified = false;
  SolveStats stats;
};

LpOutcome solve_and_verify(const LinearSystem& sys) {
  SolveStats stats;
  Verdict v = solve_feasibility(sys, &stats);
  const bool ok = verify_certificate(sys, v);
  return {std::move(v), ok, stats};
}

std::string reduction_text(const Reduction& r) { return "A=" + join(r.a) + " B=" + join(r.b); }

}  // namespace

CommandResult cmd_paley_verify(const PaleyVerifyOptions& opts) {
  CommandResult out;
  out.report.command = "paley-verify --prime " + std::to_string(opts.prime) + (opts.direct_lp ? " --direct-lp" : "") +
                       (opts.search_reduction ? " --search-reduction --budget " + std::to_string(opts.budget) : "");
  if (auto why = admissibility_failure(opts.prime)) {
    out.exit_code = kExitInvalidInput;
    out.message = *why;
    out.report.status = "invalid-input: " + *why;
    return out;
  }
  const PrimeField pf(opts.prime);
  std::optional<PathSystem> built;
  const double build_ms = timed([&] { built.emplace(build_paley_system(pf)); });
  const PathSystem& ps = *built;
  out.report.input_digest = digest(to_text(ps));
  auto& checks = out.report.checks;
  checks.push_back({"construction", "built", "vertices=" + std::to_string(ps.order()) +
                                                 " edges=" + std::to_string(ps.graph().size()) +
                                                 " paths=" + std::to_string(ps.pair_count()), build_ms});

  ConsistencyReport consistency;
  const double cons_ms = timed([&] { consistency = is_consistent(ps); });
  checks.push_back({"consistency", consistency.consistent ? "yes" : "no",
                    consistency.consistent ? "all subpaths checked"
                                           : "violation at pair {" + std::to_string(consistency.violation->x) + "," +
                                                 std::to_string(consistency.violation->y) + "}",
                    cons_ms});

  bool symmetric = false;
  const double sym_ms = timed([&] { symmetric = check_cyclic_symmetry(ps); });
  checks.push_back({"cyclic-symmetry", symmetric ? "yes" : "no", "rotations checked=" + std::to_string(opts.prime - 1), sym_ms});

  auto run_lp = [&](const std::string& name, const LinearSystem& sys) {
    std::optional<LpOutcome> lp;
    const double ms = timed([&] { lp.emplace(solve_and_verify(sys)); });
    checks.push_back({name, verdict_text(lp->verdict), lp_artifact(sys, lp->verdict, lp->verified, lp->stats), ms});
    if (opts.certificate_dir) {
      dump_lp(*opts.certificate_dir + "/" + name + "-p" + std::to_string(opts.prime) + ".linsys", sys, lp->verdict);
    }
  };
  run_lp("symmetrized-lp", build_symmetrized_system(pf));
  if (opts.direct_lp) {
    if (consistency.consistent) {
      run_lp("direct-lp", build_metrizability_system(ps));
    } else {
      checks.push_back({"direct-lp", "SKIPPED", "path system is inconsistent", 0.0});
    }
  }

  std::optional<ReducedSystem> reduced;
  SccResult scc;
  const double red_ms = timed([&] {
    reduced.emplace(build_reduced_system(pf));
    scc = strongly_connected(reduced->digraph);
  });
  std::size_t i1_rows = 0;
  for (const auto& q : reduced->system.inequalities()) i1_rows += q.coeff == 3 ? 1 : 0;
  std::size_t largest = 0;
  for (const auto& c : scc.components) largest = std::max(largest, c.size());
  checks.push_back({"reduced-digraph", scc.strongly_connected ? "strongly-connected" : "not-strongly-connected",
                    "vertices=" + std::to_string(reduced->digraph.order()) +
                        " inequalities=" + std::to_string(reduced->system.inequalities().size()) +
                        " arcs=" + std::to_string(reduced->digraph.arc_count()) +
                        " components=" + std::to_string(scc.components.size()) +
                        " largest=" + std::to_string(largest) + " i1-rows=" + std::to_string(i1_rows),
                    red_ms});
  LemmaVerdict lemma = LemmaVerdict::Inconclusive;
  const double lemma_ms = timed([&] { lemma = strong_lemma_verdict(reduced->system); });
  checks.push_back({"strong-lemma", to_string(lemma),
                    scc.strongly_connected ? "digraph strongly connected" : "digraph not strongly connected", lemma_ms});

  std::size_t pairs = 0;
  std::size_t witnessed = 0;
  const double wit_ms = timed([&] {
    for (auto a : reduced->system.variables()) {
      for (auto b : reduced->system.variables()) {
        if (a == b) continue;
        ++pairs;
        if (two_step_witness(pf, *reduced, a, b)) ++witnessed;
      }
    }
  });
  checks.push_back({"two-step-witness", std::to_string(witnessed) + "/" + std::to_string(pairs),
                    "ordered pairs of R' joined by a two-arc route", wit_ms});

  out.report.status = "completed";
  if (opts.search_reduction) {
    SearchResult search;
    const double ms = timed([&] { search = find_reduction(ps, SearchOptions{opts.budget, false}); });
    if (search.budget_exhausted) {
      checks.push_back({"reduction-search", "BUDGET-EXHAUSTED", "branches=" + std::to_string(search.branches), ms});
      out.report.status = "budget-exhausted";
      out.exit_code = kExitBudget;
      out.message = "reduction search exceeded budget of " + std::to_string(opts.budget) + " branches";
    } else if (search.reduction) {
      // Rotations of a reduction of a cyclically symmetric system are reductions too.
      bool translates_ok = true;
      const auto p = static_cast<Vertex>(opts.prime);
      for (Vertex x = 1; x < p && translates_ok; ++x) {
        auto shift = [&](std::vector<Vertex> s) {
          for (auto& v : s) v = (v + x) % p;
          return s;
        };
        translates_ok = verify_reduction(ps, shift(search.reduction->a), shift(search.reduction->b)).valid;
      }
      checks.push_back({"reduction-search", "FOUND",
                        reduction_text(*search.reduction) + " translates-valid=" + (translates_ok ? "yes" : "no") +
                            " branches=" + std::to_string(search.branches),
                        ms});
    } else {
      checks.push_back({"reduction-search", "NONE", "certified-none branches=" + std::to_string(search.branches), ms});
    }
  }
  return out;
}

CommandResult cmd_check(const CheckOptions& opts) {
  CommandResult out;
  out.report.command = "check --input " + opts.input +
                       (opts.dump_certificate ? " --dump-certificate " + *opts.dump_certificate : "");
  std::ifstream in(opts.input, std::ios::binary);
  if (!in) {
    out.exit_code = kExitInvalidInput;
    out.message = "cannot open " + opts.input;
    out.report.status = "invalid-input: " + out.message;
    return out;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = buffer.str();
  out.report.input_digest = digest(bytes);

  std::optional<PathSystem> ps;
  try {
    std::istringstream text(bytes);
    ps.emplace(read_path_system(text));
  } catch (const InputError& e) {
    out.exit_code = kExitInvalidInput;
    out.message = e.what();
    out.report.status = std::string("invalid-input: ") + e.what();
    return out;
  }
  auto& checks = out.report.checks;

  ConsistencyReport consistency;
  const double cons_ms = timed([&] { consistency = is_consistent(*ps); });
  std::string cons_artifact = "all subpaths checked";
  if (!consistency.consistent) {
    const auto& v = *consistency.violation;
    std::string sub;
    for (auto x : v.subpath) sub += (sub.empty() ? "" : "-") + std::to_string(x);
    std::string stored;
    for (auto x : v.stored) stored += (stored.empty() ? "" : "-") + std::to_string(x);
    cons_artifact = "subpath " + sub + " differs from stored " + stored;
  }
  checks.push_back({"consistent", consistency.consistent ? "yes" : "no", cons_artifact, cons_ms});
  out.report.status = "completed";
  if (!consistency.consistent) {
    checks.push_back({"metrizable", "SKIPPED", "requires a consistent system", 0.0});
    checks.push_back({"reducible", "SKIPPED", "requires a consistent system", 0.0});
    return out;
  }

  std::optional<LinearSystem> sys;
  std::optional<LpOutcome> lp;
  const double lp_ms = timed([&] {
    sys.emplace(build_metrizability_system(*ps));
    lp.emplace(solve_and_verify(*sys));
  });
  std::string lp_art = lp_artifact(*sys, lp->verdict, lp->verified, lp->stats);
  if (const auto* f = std::get_if<Feasible>(&lp->verdict)) {
    const bool all_ones = std::all_of(f->witness.begin(), f->witness.end(), [](const Rational& x) { return x == 1; });
    if (all_ones) {
      lp_art += " witness=all-ones";
    } else {
      lp_art += " witness=";
      for (std::size_t i = 0; i < f->witness.size(); ++i) {
        lp_art += (i ? "," : "") + sys->variables()[i] + "=" + f->witness[i].get_str();
      }
    }
  }
  if (opts.dump_certificate) {
    dump_lp(*opts.dump_certificate, *sys, lp->verdict);
    lp_art += " dumped=" + *opts.dump_certificate;
  }
  checks.push_back({"metrizable", is_feasible(lp->verdict) ? "YES" : "NO", lp_art, lp_ms});

  SearchResult search;
  const double red_ms = timed([&] { search = find_reduction(*ps, SearchOptions{opts.budget, false}); });
  if (search.budget_exhausted) {
    checks.push_back({"reducible", "UNKNOWN", "budget exhausted branches=" + std::to_string(search.branches), red_ms});
    out.report.status = "budget-exhausted";
    out.exit_code = kExitBudget;
    out.message = "reduction search exceeded budget of " + std::to_string(opts.budget) + " branches";
  } else if (search.reduction) {
    checks.push_back({"reducible", "YES", reduction_text(*search.reduction) + " branches=" + std::to_string(search.branches),
                      red_ms});
  } else {
    checks.push_back({"reducible", "NO", "certified-none branches=" + std::to_string(search.branches), red_ms});
  }
  return out;
}

CommandResult cmd_audit(const AuditOptions& opts) {
  CommandResult out;
  out.report.command = "audit --min " + std::to_string(opts.min_prime) + " --max " + std::to_string(opts.max_prime) +
                       " --seed " + std::to_string(opts.seed);
  std::vector<std::uint64_t> primes;
  for (auto p : primes_up_to(opts.max_prime)) {
    if (p >= 3 && p >= opts.min_prime) primes.push_back(p);
  }
  if (primes.empty()) {
    out.exit_code = kExitInvalidInput;
    out.message = "no odd primes in [" + std::to_string(opts.min_prime) + ", " + std::to_string(opts.max_prime) + "]";
    out.report.status = "invalid-input: " + out.message;
    return out;
  }
  out.report.input_digest = digest(out.report.command);

  std::ostringstream csv;
  csv << "p,L_p,burgess_max_ratio,cn_max_deviation,admissible\n";
  std::uint64_t burgess_tuples = 0;
  std::uint64_t burgess_violations = 0;
  double burgess_ratio = 0.0;
  std::uint64_t cn_triples = 0;
  std::uint64_t cn_over = 0;
  std::uint64_t cn_over_improved = 0;
  double cn_worst = 0.0;
  std::vector<std::uint64_t> hummel_exceptions;
  std::uint64_t mod24_mismatches = 0;
  double burgess_ms = 0.0;
  double cn_ms = 0.0;
  double hummel_ms = 0.0;
  double adm_ms = 0.0;

  for (auto p : primes) {
    const PrimeField pf(p);
    std::uint64_t run = 0;
    hummel_ms += timed([&] { run = max_nonresidue_run(pf); });
    if (!within_hummel_bound(run, p)) hummel_exceptions.push_back(p);

    BurgessStats b;
    burgess_ms += timed([&] { b = burgess_check(pf, opts.max_k, opts.samples, opts.seed); });
    burgess_tuples += b.tuples;
    burgess_violations += b.violations;
    burgess_ratio = std::max(burgess_ratio, b.max_ratio);

    std::string cn_cell;
    if (p % 4 == 1) {
      CommonNeighborStats cn;
      cn_ms += timed([&] { cn = common_neighbor_deviation(pf, p > opts.exhaustive_triples_limit); });
      cn_triples += cn.triples;
      cn_over += cn.over_bound;
      cn_over_improved += cn.over_improved_bound;
      cn_worst = std::max(cn_worst, cn.max_deviation / std::sqrt(static_cast<double>(p)));
      cn_cell = fixed(cn.max_deviation, 3);
    }

    bool admissible = false;
    adm_ms += timed([&] {
      admissible = is_admissible(p);
      if (admissible != (p > 5 && p % 24 == 5)) ++mod24_mismatches;
    });
    csv << p << ',' << run << ',' << fixed(b.max_ratio, 6) << ',' << cn_cell << ',' << (admissible ? "true" : "false")
        << '\n';
  }
  out.csv = csv.str();

  auto& checks = out.report.checks;
  auto round3 = [](double ms) { return std::round(ms * 1000.0) / 1000.0; };
  checks.push_back({"burgess", "violations=" + std::to_string(burgess_violations),
                    "tuples=" + std::to_string(burgess_tuples) + " k<=" + std::to_string(opts.max_k) +
                        " max-ratio=" + fixed(burgess_ratio, 6),
                    round3(burgess_ms)});
  checks.push_back({"common-neighbor", "over-5sqrt(p)+1=" + std::to_string(cn_over),
                    "triples=" + std::to_string(cn_triples) + " over-2sqrt(p)+2=" + std::to_string(cn_over_improved) +
                        " max-deviation/sqrt(p)=" + fixed(cn_worst, 6) +
                        " x-fixed-above=" + std::to_string(opts.exhaustive_triples_limit),
                    round3(cn_ms)});
  std::string exceptions;
  for (auto p : hummel_exceptions) exceptions += (exceptions.empty() ? "" : ",") + std::to_string(p);
  checks.push_back({"hummel", "exceptions={" + exceptions + "}", "primes=" + std::to_string(primes.size()),
                    round3(hummel_ms)});
  checks.push_back({"admissible-vs-5-mod-24", "mismatches=" + std::to_string(mod24_mismatches),
                    "primes=" + std::to_string(primes.size()), round3(adm_ms)});
  out.report.status = "completed";
  return out;
}

}  // namespace pathsys
