#pragma once

// Replay reports: a flat list of named checks, each pass, fail or
// discrepancy. Checks are kept sorted by id so the rendered text and JSON are
// byte-identical for identical inputs. Nothing time-dependent goes in here.

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kantor {

inline constexpr int kReportSchemaVersion = 1;

enum class CheckStatus { pass, fail, discrepancy };

inline std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::discrepancy: return "discrepancy";
  }
  return "?";
}

struct Check {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::string details;
};

class ReplayReport {
 public:
  explicit ReplayReport(std::string command) : command_(std::move(command)) {}

  void set_parameter(const std::string& key, const std::string& value) { parameters_[key] = value; }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }
  void mark_sampled() { sampled_ = true; }

  void add(std::string id, CheckStatus status, std::string details = {}) {
    auto pos = std::lower_bound(checks_.begin(), checks_.end(), id,
                                [](const Check& c, const std::string& key) { return c.id < key; });
    if (pos != checks_.end() && pos->id == id) throw std::logic_error("duplicate check id " + id);
    checks_.insert(pos, Check{std::move(id), status, std::move(details)});
  }
  void add(std::string id, bool ok, std::string details = {}) {
    add(std::move(id), ok ? CheckStatus::pass : CheckStatus::fail, std::move(details));
  }

  /// Runs fn; an escaping exception becomes a failed check with its message.
  template <class Fn>
  void run(const std::string& id, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      add(id + ".exception", CheckStatus::fail, e.what());
    }
  }

  const std::vector<Check>& checks() const { return checks_; }
  const std::string& command() const { return command_; }
  bool sampled() const { return sampled_; }
  const Check* find(const std::string& id) const {
    for (const auto& c : checks_)
      if (c.id == id) return &c;
    return nullptr;
  }

  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.status == s; }));
  }

  /// 0 when nothing failed; discrepancies count as failures unless allowed.
  int exit_code(bool allow_discrepancies) const {
    if (count(CheckStatus::fail)) return 1;
    if (count(CheckStatus::discrepancy) && !allow_discrepancies) return 1;
    return 0;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = command_;
    doc["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : parameters_) doc["parameters"][k] = v;
    doc["sampled"] = sampled_;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_) doc["checks"].push_back({{"id", c.id}, {"status", status_name(c.status)}, {"details", c.details}});
    doc["summary"] = {{"total", checks_.size()},
                      {"pass", count(CheckStatus::pass)},
                      {"fail", count(CheckStatus::fail)},
                      {"discrepancy", count(CheckStatus::discrepancy)}};
    doc["notes"] = notes_;
    return doc;
  }

  std::string to_text() const {
    std::string out = command_ + (sampled_ ? " (sampled)" : "") + "\n";
    for (const auto& [k, v] : parameters_) out += "  " + k + " = " + v + "\n";
    for (const auto& c : checks_) {
      out += "[" + status_name(c.status) + "] " + c.id;
      if (!c.details.empty()) out += "  " + c.details;
      out += "\n";
    }
    for (const auto& n : notes_) out += "note: " + n + "\n";
    out += "summary: " + std::to_string(checks_.size()) + " checks, " + std::to_string(count(CheckStatus::pass)) +
           " pass, " + std::to_string(count(CheckStatus::fail)) + " fail, " +
           std::to_string(count(CheckStatus::discrepancy)) + " discrepancy\n";
    return out;
  }

 private:
  std::string command_;
  std::map<std::string, std::string> parameters_;
  std::vector<Check> checks_;
  std::vector<std::string> notes_;
  bool sampled_ = false;
};

}  // namespace kantor
