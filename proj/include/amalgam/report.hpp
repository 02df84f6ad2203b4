#pragma once

/**
 * @file report.hpp
 * @brief Check results and their JSON form.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "amalgam/pruefer_gaussian.hpp"
#include "amalgam/status.hpp"

namespace amalgam {

inline constexpr const char* kVersion = "0.1.0";

struct NamedCheck {
  std::string id;
  Status verdict = Status::pass;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
};

struct Report {
  nlohmann::ordered_json spec;  // null when the command takes no ring
  std::optional<PropertyReport> properties;
  std::vector<NamedCheck> paper_checks;
  double timing_seconds = 0;

  bool failed() const {
    return std::ranges::any_of(paper_checks, [](const NamedCheck& c) { return c.verdict == Status::fail; });
  }
};

inline nlohmann::ordered_json to_json(const PropertyReport& p) {
  nlohmann::ordered_json j;
  j["ring"] = p.label;
  j["order"] = p.order;
  j["is_local"] = p.is_local;
  j["is_arithmetical"] = p.arithmetical;
  j["is_gaussian"] = p.gaussian;
  j["is_pruefer"] = p.pruefer;
  nlohmann::ordered_json w = nlohmann::ordered_json::object();
  for (const auto& [k, v] : p.witnesses) w[k] = v;
  j["witnesses"] = w;
  j["pruefer_certificate"] = {{"two_generated_visited", p.pruefer_detail.two_generated_visited},
                              {"regular_visited", p.pruefer_detail.regular_visited},
                              {"every_regular_is_whole", p.pruefer_detail.every_regular_is_whole}};
  return j;
}

inline nlohmann::ordered_json to_json(const NamedCheck& c) {
  nlohmann::ordered_json j;
  j["id"] = c.id;
  j["verdict"] = to_string(c.verdict);
  j["witnesses"] = c.witnesses;
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j;
}

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["spec"] = r.spec;
  j["properties"] = r.properties ? to_json(*r.properties) : nlohmann::ordered_json();
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.paper_checks) checks.push_back(to_json(c));
  j["paper_checks"] = checks;
  j["timing"] = {{"seconds", r.timing_seconds}};
  j["version"] = kVersion;
  return j;
}

inline std::string to_text(const PropertyReport& p) {
  auto tf = [](bool b) { return b ? "T" : "F"; };
  std::string s = p.label + " (order " + std::to_string(p.order) + (p.is_local ? ", local" : ", not local") + ")\n";
  s += "  arithmetical " + std::string(tf(p.arithmetical)) + ", Gaussian " + tf(p.gaussian) + ", Pruefer " +
       tf(p.pruefer) + "\n";
  for (const auto& [k, v] : p.witnesses) {
    for (const auto& w : v) s += "  not " + k + ": " + w + "\n";
  }
  return s;
}

inline std::string to_text(const NamedCheck& c) {
  std::string s = "[" + to_string(c.verdict) + "] " + c.id + "\n";
  for (const auto& w : c.witnesses) s += "    witness: " + w + "\n";
  for (const auto& n : c.notes) s += "    " + n + "\n";
  return s;
}

}  // namespace amalgam
