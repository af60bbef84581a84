#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace chevkit {

enum class Verdict { Pass, Fail, Finding };
std::string verdict_name(Verdict v);

/// One verification record. Field names of to_json are the stable contract.
struct CheckRecord {
  CheckRecord() = default;
  CheckRecord(std::string i, std::string t, std::string a) : id(std::move(i)), title(std::move(t)), anchor(std::move(a)) {}

  std::string id;
  std::string title;
  std::string anchor;  // quoted claim being checked
  nlohmann::json params = nlohmann::json::object();
  std::optional<uint64_t> seed;
  Verdict verdict = Verdict::Pass;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> notes;
  double seconds = 0;
};

inline constexpr int kReportSchemaVersion = 1;

struct Report {
  std::string suite;
  std::vector<CheckRecord> checks;
  bool has(Verdict v) const;
  /// 0 all pass, 2 findings or failures.
  int exit_code() const;
};

nlohmann::json to_json(const CheckRecord& r);
nlohmann::json to_json(const Report& r);
std::string to_text(const CheckRecord& r);
std::string to_text(const Report& r);

}  // namespace chevkit
