#include <set>

#include "doctest.h"

#include "chevkit/corpus.hpp"
#include "chevkit/report.hpp"

using namespace chevkit;

TEST_CASE("quick suite passes") {
  Report r = verify_paper_corpus("quick");
  CHECK(r.suite == "quick");
  CHECK(r.checks.size() == 5);
  for (auto& c : r.checks) {
    INFO(c.id);
    CHECK(c.verdict == Verdict::Pass);
  }
  CHECK(r.exit_code() == 0);
  CHECK_THROWS_AS(verify_paper_corpus("nonesuch"), std::invalid_argument);
}

TEST_CASE("full suite verdicts") {
  Report r = verify_paper_corpus("e7-chamber");
  std::set<std::string> findings;
  for (auto& c : r.checks) {
    INFO(c.id);
    CHECK(c.verdict != Verdict::Fail);
    if (c.verdict == Verdict::Finding) {
      findings.insert(c.id);
      CHECK_FALSE(c.notes.empty());
    }
  }
  CHECK(findings == std::set<std::string>{"e.e73-chambers", "i.orbits"});
  CHECK(r.exit_code() == 2);
}

TEST_CASE("seeded checks are reproducible") {
  CheckRecord a = check_charpoly(7, 10, 5), b = check_charpoly(7, 10, 5);
  CHECK(a.payload == b.payload);
  CHECK(a.seed == std::optional<uint64_t>(7));
  CHECK(a.verdict == Verdict::Pass);
  CHECK(a.payload["samples"] == 15);
  CheckRecord c = check_e74_forcing(kDefaultSeed, 1);
  CHECK(c.verdict == Verdict::Pass);
}

TEST_CASE("report schema") {
  Report r = verify_paper_corpus("quick");
  nlohmann::json j = to_json(r);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["suite"] == "quick");
  for (auto& c : j["checks"])
    for (auto key : {"id", "title", "anchor", "parameters", "seed", "verdict", "payload", "notes", "seconds"})
      CHECK(c.contains(key));
  std::string text = to_text(r);
  CHECK(text.find("a.magic-words") != std::string::npos);
  CHECK(verdict_name(Verdict::Finding) == "finding");
}
