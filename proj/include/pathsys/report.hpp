#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace pathsys {

/// One verification step: what ran, what it concluded, and the artifact
/// backing the conclusion (witness/certificate summary, branch count, ...).
struct CheckRecord {
  std::string name;
  std::string verdict;
  std::string artifact;
  double wall_ms = 0.0;  // rounded to microseconds

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
  std::string command;
  std::string input_digest;
  std::vector<CheckRecord> checks;
  std::string status;

  friend bool operator==(const Report&, const Report&) = default;

  const CheckRecord* find(std::string_view name) const;
};

/// 64-bit FNV-1a, rendered as "fnv1a64:<16 hex digits>".
std::string digest(std::string_view bytes);

/// Text mode:
///   command: <echo>
///   input-digest: <digest>
///   check <name> | <verdict> | <ms> ms | <artifact>
///   status: <status>
std::string to_text(const Report& r);
Report report_from_text(const std::string& text);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

}  // namespace pathsys
