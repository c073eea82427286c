#include "pathsys/report.hpp"

#include <cstdio>
#include <sstream>

#include "pathsys/errors.hpp"

namespace pathsys {

const CheckRecord* Report::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << '\n';
  os << "input-digest: " << r.input_digest << '\n';
  for (const auto& c : r.checks) {
    char ms[64];
    std::snprintf(ms, sizeof ms, "%.3f", c.wall_ms);
    os << "check " << c.name << " | " << c.verdict << " | " << ms << " ms | " << c.artifact << '\n';
  }
  os << "status: " << r.status << '\n';
  return os.str();
}

namespace {

std::string after_prefix(const std::string& line, const std::string& prefix, std::size_t line_no) {
  if (line.rfind(prefix, 0) != 0) throw ParseError(line_no, "expected '" + prefix + "'");
  return line.substr(prefix.size());
}

}  // namespace

Report report_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  Report r;
  auto next = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    return true;
  };
  if (!next()) throw ParseError(1, "empty report");
  r.command = after_prefix(line, "command: ", line_no);
  if (!next()) throw ParseError(line_no + 1, "missing input-digest");
  r.input_digest = after_prefix(line, "input-digest: ", line_no);
  while (next()) {
    if (line.rfind("status: ", 0) == 0) {
      r.status = line.substr(8);
      return r;
    }
    const std::string body = after_prefix(line, "check ", line_no);
    const auto s1 = body.find(" | ");
    const auto s2 = s1 == std::string::npos ? s1 : body.find(" | ", s1 + 3);
    const auto s3 = s2 == std::string::npos ? s2 : body.find(" ms | ", s2 + 3);
    if (s3 == std::string::npos) throw ParseError(line_no, "malformed check line");
    CheckRecord c;
    c.name = body.substr(0, s1);
    c.verdict = body.substr(s1 + 3, s2 - s1 - 3);
    c.wall_ms = std::stod(body.substr(s2 + 3, s3 - s2 - 3));
    c.artifact = body.substr(s3 + 6);
    r.checks.push_back(std::move(c));
  }
  throw ParseError(line_no + 1, "missing status line");
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"verdict", c.verdict}, {"artifact", c.artifact}, {"wall_ms", c.wall_ms}});
  }
  return {{"command", r.command}, {"input_digest", r.input_digest}, {"checks", checks}, {"status", r.status}};
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.input_digest = j.at("input_digest").get<std::string>();
  r.status = j.at("status").get<std::string>();
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("verdict").get<std::string>(),
                        c.at("artifact").get<std::string>(), c.at("wall_ms").get<double>()});
  }
  return r;
}

}  // namespace pathsys
