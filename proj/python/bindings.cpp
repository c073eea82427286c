#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pathsys/commands.hpp"
#include "pathsys/metrizability.hpp"
#include "pathsys/reducibility.hpp"

namespace py = pybind11;
using namespace pathsys;

namespace {

// Rationals cross the boundary as exact strings such as "3/2".
py::dict verdict_dict(const LinearSystem& sys, const Verdict& v) {
  py::dict d;
  d["feasible"] = is_feasible(v);
  d["verified"] = verify_certificate(sys, v);
  if (const auto* f = std::get_if<Feasible>(&v)) {
    py::dict witness;
    for (std::size_t i = 0; i < f->witness.size(); ++i) witness[py::str(sys.variables()[i])] = f->witness[i].get_str();
    d["witness"] = witness;
  } else {
    py::list cert;
    for (const auto& [k, y] : std::get<Infeasible>(v).certificate) cert.append(py::make_tuple(k, y.get_str()));
    d["certificate"] = cert;
  }
  return d;
}

py::dict solve_dict(const LinearSystem& sys) {
  SolveStats stats;
  const Verdict v = solve_feasibility(sys, &stats);
  py::dict d = verdict_dict(sys, v);
  d["variables"] = sys.num_variables();
  d["rows"] = sys.num_rows();
  d["pivots"] = stats.pivots;
  return d;
}

py::dict command_dict(const CommandResult& r) {
  py::dict d;
  d["report"] = to_json(r.report).dump();
  d["text"] = to_text(r.report);
  d["exit_code"] = r.exit_code;
  d["message"] = r.message;
  d["csv"] = r.csv;
  return d;
}

PathSystem parse(const std::string& text) {
  std::istringstream in(text);
  return read_path_system(in);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Path systems, metrizability and reducibility";

  // Translators run newest first, so the subclass is registered last.
  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", input_error.ptr());

  m.def("legendre", [](std::uint64_t a, std::uint64_t p) { return legendre(a, p); }, py::arg("a"), py::arg("p"));
  m.def("is_admissible", &is_admissible, py::arg("p"));
  m.def("admissibility_failure", &admissibility_failure, py::arg("p"));
  m.def("admissible_primes", &admissible_primes, py::arg("limit"));
  m.def("max_nonresidue_run", [](std::uint64_t p) { return max_nonresidue_run(PrimeField(p)); }, py::arg("p"));

  py::class_<PathSystem>(m, "PathSystem")
      .def_static("from_text", &parse, py::arg("text"))
      .def_static("from_file", &read_path_system_file, py::arg("path"))
      .def_static("paley", [](std::uint64_t p) { return build_paley_system(PrimeField(p)); }, py::arg("p"))
      .def_static("petersen", &petersen_fixture)
      .def("to_text", [](const PathSystem& ps) { return to_text(ps); })
      .def("vertices", [](const PathSystem& ps) { return ps.graph().vertices(); })
      .def("edges", [](const PathSystem& ps) { return ps.graph().edges(); })
      .def("path", &PathSystem::path_from, py::arg("u"), py::arg("v"))
      .def("paths", &PathSystem::paths)
      .def("__len__", &PathSystem::order)
      .def("__eq__", [](const PathSystem& a, const PathSystem& b) { return a == b; });

  m.def("is_consistent", [](const PathSystem& ps) { return is_consistent(ps).consistent; }, py::arg("system"));
  m.def("is_metrizable", [](const PathSystem& ps) { return solve_dict(build_metrizability_system(ps)); },
        py::arg("system"));
  m.def("symmetrized_lp", [](std::uint64_t p) { return solve_dict(build_symmetrized_system(PrimeField(p))); },
        py::arg("p"));
  m.def(
      "reduced_digraph",
      [](std::uint64_t p) {
        const ReducedSystem red = build_reduced_system(PrimeField(p));
        const auto scc = strongly_connected(red.digraph);
        py::dict d;
        d["vertices"] = red.digraph.vertices();
        d["arcs"] = red.digraph.arcs();
        d["strongly_connected"] = scc.strongly_connected;
        d["components"] = scc.components;
        d["lemma"] = std::string(to_string(strong_lemma_verdict(red.system)));
        return d;
      },
      py::arg("p"));

  m.def(
      "find_reduction",
      [](const PathSystem& ps, std::uint64_t budget) {
        SearchOptions opts;
        opts.budget = budget;
        const SearchResult r = find_reduction(ps, opts);
        py::dict d;
        d["branches"] = r.branches;
        d["budget_exhausted"] = r.budget_exhausted;
        d["certified_none"] = r.certified_none();
        if (r.reduction) {
          d["a"] = r.reduction->a;
          d["b"] = r.reduction->b;
        }
        return d;
      },
      py::arg("system"), py::arg("budget") = 100'000'000);
  m.def(
      "verify_reduction",
      [](const PathSystem& ps, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
        return verify_reduction(ps, a, b).valid;
      },
      py::arg("system"), py::arg("a"), py::arg("b"));

  m.def(
      "paley_verify",
      [](std::uint64_t prime, bool direct_lp, bool search_reduction, std::uint64_t budget) {
        PaleyVerifyOptions opts;
        opts.prime = prime;
        opts.direct_lp = direct_lp;
        opts.search_reduction = search_reduction;
        opts.budget = budget;
        return command_dict(cmd_paley_verify(opts));
      },
      py::arg("prime"), py::arg("direct_lp") = false, py::arg("search_reduction") = false,
      py::arg("budget") = 100'000'000);
  m.def(
      "check",
      [](const std::string& input, std::uint64_t budget) {
        CheckOptions opts;
        opts.input = input;
        opts.budget = budget;
        return command_dict(cmd_check(opts));
      },
      py::arg("input"), py::arg("budget") = 100'000'000);
  m.def(
      "audit",
      [](std::uint64_t max_prime, std::uint64_t min_prime, std::uint64_t seed, std::size_t samples) {
        AuditOptions opts;
        opts.max_prime = max_prime;
        opts.min_prime = min_prime;
        opts.seed = seed;
        opts.samples = samples;
        return command_dict(cmd_audit(opts));
      },
      py::arg("max_prime"), py::arg("min_prime") = 3, py::arg("seed") = 20240229, py::arg("samples") = 200);
}
