// Command-line front end; talks to the library exclusively through the C API.
// Exit codes: 0 all checks passed, 1 verification failures, 2 usage or input
// errors.
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cliffordforge.h"

namespace {

std::string take_string(char* s) {
  std::string out = s ? s : "";
  cf_string_free(s);
  return out;
}

std::string last_error() {
  const char* e = cf_last_error();
  return e ? e : "unknown error";
}

// CLIFFORD_FORGE_SEED overrides the --seed option; rejects non-numeric values
bool apply_env_seed(uint64_t& seed, std::string& message) {
  const char* s = std::getenv("CLIFFORD_FORGE_SEED");
  if (!s || !*s) return true;
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (errno != 0 || end == s || *end != '\0') {
    message = std::string("CLIFFORD_FORGE_SEED is not a number: '") + s + "'";
    return false;
  }
  seed = v;
  return true;
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open " << path << " for writing\n";
    return 2;
  }
  out << text;
  return 0;
}

int emit_report(cf_report* rep, const std::string& format, const std::string& out_path) {
  char* rendered = cf_report_render(rep, format.c_str());
  if (!rendered) {
    std::cerr << last_error() << "\n";
    cf_report_free(rep);
    return 2;
  }
  const int write_rc = write_output(take_string(rendered), out_path);
  const int all_pass = cf_report_all_pass(rep);
  cf_report_free(rep);
  if (write_rc) return write_rc;
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("clifford-forge ") + cf_version() +
               " - exact verification of induced-module structure over prime fields"};
  app.require_subcommand(1);

  std::string suite_id;
  uint32_t max_order = 12;
  std::vector<uint32_t> primes;
  uint64_t seed = 0;
  uint32_t jobs = 1;
  bool timing = false;
  std::string format = "text";
  std::string out_path;

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite_id, "suite id (see `catalog`/docs; 'all' runs everything)")
      ->required();
  verify->add_option("--max-order", max_order, "largest catalog group order (default 12)");
  verify->add_option("--primes", primes, "field characteristics, comma separated")
      ->delimiter(',');
  verify->add_option("--seed", seed, "base seed for the randomized checks");
  verify->add_option("--jobs", jobs, "worker threads (default 1)");
  verify->add_flag("--timing", timing, "record per-entry wall time");
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "write the report here instead of stdout");

  std::string scenario_path;
  CLI::App* scenario = app.add_subcommand("scenario", "run a single scenario file");
  scenario->add_option("file", scenario_path, "scenario description file")->required();
  scenario->add_option("--seed", seed, "base seed for the randomized checks");
  scenario->add_flag("--timing", timing, "record per-entry wall time");
  scenario->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  scenario->add_option("--out", out_path, "write the report here instead of stdout");

  CLI::App* catalog = app.add_subcommand("catalog", "list the group catalog");
  catalog->add_option("--max-order", max_order, "largest group order (default 12)");

  std::string report_in;
  CLI::App* report = app.add_subcommand("report", "re-render a saved JSON report");
  report->add_option("--in", report_in, "JSON report file")->required();
  report->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  report->add_option("--out", out_path, "write the rendering here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (verify->parsed() || scenario->parsed()) {
    std::string message;
    if (!apply_env_seed(seed, message)) {
      std::cerr << message << "\n";
      return 2;
    }
  }

  if (verify->parsed()) {
    cf_options* opt = cf_options_new();
    if (!opt) {
      std::cerr << last_error() << "\n";
      return 2;
    }
    cf_options_set_max_order(opt, max_order);
    if (!primes.empty()) cf_options_set_primes(opt, primes.data(), primes.size());
    cf_options_set_seed(opt, seed);
    cf_options_set_jobs(opt, jobs);
    cf_options_set_timing(opt, timing ? 1 : 0);
    cf_report* rep = cf_run_suite(suite_id.c_str(), opt);
    cf_options_free(opt);
    if (!rep) {
      std::cerr << last_error() << "\n";
      std::cerr << "known suites:\n" << take_string(cf_suite_names());
      return 2;
    }
    return emit_report(rep, format, out_path);
  }

  if (scenario->parsed()) {
    cf_report* rep = cf_run_scenario_file(scenario_path.c_str(), seed, timing ? 1 : 0);
    if (!rep) {
      std::cerr << last_error() << "\n";
      return 2;
    }
    return emit_report(rep, format, out_path);
  }

  if (catalog->parsed()) {
    char* text = cf_catalog_text(max_order);
    if (!text) {
      std::cerr << last_error() << "\n";
      return 2;
    }
    return write_output(take_string(text), "");
  }

  // report re-render: stateless, exit reflects only I/O and parse health
  std::ifstream in(report_in, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << report_in << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  cf_report* rep = cf_report_load(buf.str().c_str());
  if (!rep) {
    std::cerr << last_error() << "\n";
    return 2;
  }
  char* rendered = cf_report_render(rep, format.c_str());
  cf_report_free(rep);
  if (!rendered) {
    std::cerr << last_error() << "\n";
    return 2;
  }
  return write_output(take_string(rendered), out_path);
}
