#include "chevkit/report.hpp"

#include <iomanip>
#include <sstream>

namespace chevkit {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Finding: return "finding";
  }
  return "?";
}

bool Report::has(Verdict v) const {
  for (auto& c : checks)
    if (c.verdict == v) return true;
  return false;
}

int Report::exit_code() const { return has(Verdict::Fail) || has(Verdict::Finding) ? 2 : 0; }

nlohmann::json to_json(const CheckRecord& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["anchor"] = r.anchor;
  j["parameters"] = r.params;
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  j["verdict"] = verdict_name(r.verdict);
  j["payload"] = r.payload;
  j["notes"] = r.notes;
  j["seconds"] = r.seconds;
  return j;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = r.suite;
  j["checks"] = nlohmann::json::array();
  for (auto& c : r.checks) j["checks"].push_back(to_json(c));
  return j;
}

std::string to_text(const CheckRecord& r) {
  std::ostringstream os;
  os << std::left << std::setw(8) << verdict_name(r.verdict) << r.id << "  " << r.title;
  if (r.seed) os << "  [seed " << *r.seed << "]";
  os << "  (" << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
  for (auto& n : r.notes) os << "        " << n << "\n";
  return os.str();
}

std::string to_text(const Report& r) {
  std::string out = "suite " + r.suite + "\n";
  int counts[3] = {0, 0, 0};
  for (auto& c : r.checks) {
    out += to_text(c);
    ++counts[(int)c.verdict];
  }
  out += std::to_string(counts[0]) + " pass, " + std::to_string(counts[1]) + " fail, " + std::to_string(counts[2]) +
         " finding\n";
  return out;
}

}  // namespace chevkit
