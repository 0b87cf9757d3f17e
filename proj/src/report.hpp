#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cforge {

// One verdict line: a claim checked on a scenario instance. Witness text is a
// short human-readable justification (dimensions, counts, block shapes);
// entries with verdict INFO record measurements that have no pass/fail
// reading and never affect the summary outcome.
struct ReportEntry {
  std::string scenario;
  std::string claim;
  std::string verdict;  // PASS | FAIL | INFO
  std::string witness;
  int64_t ms = 0;
};

struct Report {
  std::vector<ReportEntry> entries;

  uint32_t pass_count() const;
  uint32_t fail_count() const;
  uint32_t info_count() const;
  bool all_pass() const { return fail_count() == 0; }
};

// one line per entry "<verdict> <claim> <scenario> <ms>", then a summary line
std::string render_text(const Report& r);
// {"entries":[{scenario, claim, verdict, witness, ms}...], "summary":{...}}
std::string render_json(const Report& r);
Report report_from_json(const std::string& text);

}  // namespace cforge
