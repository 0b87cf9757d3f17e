#include "report.hpp"

#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace cforge {

namespace {

uint32_t count_verdict(const Report& r, const char* v) {
  uint32_t n = 0;
  for (const auto& e : r.entries)
    if (e.verdict == v) ++n;
  return n;
}

}  // namespace

uint32_t Report::pass_count() const { return count_verdict(*this, "PASS"); }
uint32_t Report::fail_count() const { return count_verdict(*this, "FAIL"); }
uint32_t Report::info_count() const { return count_verdict(*this, "INFO"); }

std::string render_text(const Report& r) {
  std::ostringstream os;
  for (const auto& e : r.entries)
    os << e.verdict << " " << e.claim << " " << e.scenario << " " << e.ms << "\n";
  os << "summary pass=" << r.pass_count() << " fail=" << r.fail_count()
     << " info=" << r.info_count() << "\n";
  return os.str();
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json o;
    o["scenario"] = e.scenario;
    o["claim"] = e.claim;
    o["verdict"] = e.verdict;
    o["witness"] = e.witness;
    o["ms"] = e.ms;
    j["entries"].push_back(std::move(o));
  }
  j["summary"] = {{"pass", r.pass_count()}, {"fail", r.fail_count()}, {"info", r.info_count()}};
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what(), 1);
  }
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw ParseError("report JSON lacks an entries array", 1);
  Report r;
  for (const auto& o : j["entries"]) {
    if (!o.is_object()) throw ParseError("report entry is not an object", 1);
    ReportEntry e;
    for (const char* key : {"scenario", "claim", "verdict", "witness"})
      if (!o.contains(key) || !o[key].is_string())
        throw ParseError(std::string("report entry lacks string field ") + key, 1);
    e.scenario = o["scenario"].get<std::string>();
    e.claim = o["claim"].get<std::string>();
    e.verdict = o["verdict"].get<std::string>();
    e.witness = o["witness"].get<std::string>();
    if (!o.contains("ms") || !o["ms"].is_number_integer())
      throw ParseError("report entry lacks integer field ms", 1);
    e.ms = o["ms"].get<int64_t>();
    if (e.verdict != "PASS" && e.verdict != "FAIL" && e.verdict != "INFO")
      throw ParseError("report entry has unknown verdict " + e.verdict, 1);
    r.entries.push_back(std::move(e));
  }
  return r;
}

}  // namespace cforge
