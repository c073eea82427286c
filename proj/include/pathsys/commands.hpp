#pragma once

// The verification runs behind the command-line tool. Verdicts live in the
// report; the exit code only says whether the run completed.

#include <cstdint>
#include <optional>
#include <string>

#include "pathsys/report.hpp"

namespace pathsys {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitBudget = 3;

struct CommandResult {
  Report report;
  int exit_code = kExitOk;
  /// Explanation for a non-zero exit.
  std::string message;
  /// CSV rows (audit only).
  std::string csv;
};

struct PaleyVerifyOptions {
  std::uint64_t prime = 0;
  bool direct_lp = false;
  bool search_reduction = false;
  std::uint64_t budget = 100'000'000;
  /// When set, linsys dumps and verdicts are written here.
  std::optional<std::string> certificate_dir;
};

CommandResult cmd_paley_verify(const PaleyVerifyOptions& opts);

struct CheckOptions {
  std::string input;
  std::optional<std::string> dump_certificate;
  std::uint64_t budget = 100'000'000;
};

CommandResult cmd_check(const CheckOptions& opts);

struct AuditOptions {
  std::uint64_t min_prime = 3;
  std::uint64_t max_prime = 199;
  std::uint64_t seed = 20240229;
  std::size_t samples = 200;
  std::size_t max_k = 4;
  /// Above this prime the common-neighbor scan fixes x = 0.
  std::uint64_t exhaustive_triples_limit = 211;
};

CommandResult cmd_audit(const AuditOptions& opts);

}  // namespace pathsys
