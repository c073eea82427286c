#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pathsys/commands.hpp"
#include "pathsys/errors.hpp"

namespace {

int emit(const pathsys::CommandResult& result, const std::string& format) {
  if (format == "structured") {
    std::cout << pathsys::to_json(result.report).dump(2) << '\n';
  } else {
    std::cout << pathsys::to_text(result.report);
  }
  if (result.exit_code != pathsys::kExitOk) std::cerr << "pathsys: " << result.message << '\n';
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path-system verification on Paley graphs and user-supplied systems"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  pathsys::PaleyVerifyOptions pv;
  auto* verify = app.add_subcommand("paley-verify", "Check the Paley path system for an admissible prime");
  verify->add_option("--prime", pv.prime, "Prime p = 5 (mod 24), p > 5")->required();
  verify->add_flag("--direct-lp", pv.direct_lp, "Also solve the edge-weight system on G_p");
  verify->add_flag("--search-reduction", pv.search_reduction, "Exhaustively search for a reduction");
  verify->add_option("--budget", pv.budget, "Branch budget for the reduction search")->capture_default_str();
  verify->add_option("--certificate-dir", pv.certificate_dir, "Write systems and verdicts here")
      ->check(CLI::ExistingDirectory);

  pathsys::CheckOptions ck;
  auto* check = app.add_subcommand("check", "Check a path system file");
  check->add_option("--input", ck.input, "pathsystem v1 file")->required();
  check->add_option("--dump-certificate", ck.dump_certificate, "Write the linear system and its verdict here");
  check->add_option("--budget", ck.budget, "Branch budget for the reduction search")->capture_default_str();

  pathsys::AuditOptions au;
  std::optional<std::string> csv_path;
  auto* audit = app.add_subcommand("audit", "Empirical residue-pattern bounds over a range of primes");
  audit->add_option("--max", au.max_prime, "Largest prime")->required();
  audit->add_option("--min", au.min_prime, "Smallest prime")->capture_default_str();
  audit->add_option("--seed", au.seed, "Seed for sampled tuples")->capture_default_str();
  audit->add_option("--samples", au.samples, "Tuples per (p, k) when not enumerating")->capture_default_str();
  audit->add_option("--csv", csv_path, "Per-prime CSV output");

  for (auto* sub : {verify, check, audit}) {
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pathsys::kExitInvalidInput;
  }

  try {
    if (*verify) return emit(pathsys::cmd_paley_verify(pv), format);
    if (*check) return emit(pathsys::cmd_check(ck), format);
    auto result = pathsys::cmd_audit(au);
    if (csv_path && result.exit_code == pathsys::kExitOk) {
      std::ofstream out(*csv_path);
      if (!out) {
        std::cerr << "pathsys: cannot write " << *csv_path << '\n';
        return pathsys::kExitInvalidInput;
      }
      out << result.csv;
    }
    return emit(result, format);
  } catch (const pathsys::InputError& e) {
    std::cerr << "pathsys: " << e.what() << '\n';
    return pathsys::kExitInvalidInput;
  }
}
