#include "cliffordforge.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "suite.hpp"

using cforge::Report;
using cforge::SuiteOptions;

struct cf_options {
  SuiteOptions opt;
};
struct cf_report {
  Report rep;
};

namespace {

thread_local std::string g_error;
thread_local bool g_has_error = false;

void clear_error() { g_has_error = false; }

void set_error(const std::string& msg) {
  g_error = msg;
  g_has_error = true;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) {
    set_error("out of memory");
    return nullptr;
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  clear_error();
  try {
    return fn();
  } catch (const std::exception& e) {
    set_error(e.what());
  } catch (...) {
    set_error("unknown error");
  }
  return nullptr;
}

}  // namespace

extern "C" {

const char* cf_version(void) { return "0.1.0"; }

const char* cf_last_error(void) { return g_has_error ? g_error.c_str() : nullptr; }

cf_options* cf_options_new(void) {
  clear_error();
  return new (std::nothrow) cf_options{};
}

void cf_options_free(cf_options* opt) { delete opt; }

int cf_options_set_max_order(cf_options* opt, uint32_t max_order) {
  clear_error();
  if (!opt) {
    set_error("options handle is null");
    return 1;
  }
  opt->opt.max_order = max_order;
  return 0;
}

int cf_options_set_primes(cf_options* opt, const uint32_t* primes, size_t count) {
  clear_error();
  if (!opt || (!primes && count)) {
    set_error(opt ? "primes pointer is null" : "options handle is null");
    return 1;
  }
  opt->opt.primes.assign(primes, primes + count);
  return 0;
}

int cf_options_set_seed(cf_options* opt, uint64_t seed) {
  clear_error();
  if (!opt) {
    set_error("options handle is null");
    return 1;
  }
  opt->opt.seed = seed;
  return 0;
}

int cf_options_set_jobs(cf_options* opt, uint32_t jobs) {
  clear_error();
  if (!opt) {
    set_error("options handle is null");
    return 1;
  }
  opt->opt.jobs = jobs;
  return 0;
}

int cf_options_set_timing(cf_options* opt, int enabled) {
  clear_error();
  if (!opt) {
    set_error("options handle is null");
    return 1;
  }
  opt->opt.timing = enabled != 0;
  return 0;
}

char* cf_suite_names(void) {
  return guarded([&]() -> char* {
    std::string out;
    for (const auto& name : cforge::suite_names()) out += name + "\n";
    return copy_out(out);
  });
}

char* cf_catalog_text(uint32_t max_order) {
  return guarded([&]() -> char* { return copy_out(cforge::catalog_text(max_order)); });
}

cf_report* cf_run_suite(const char* suite_id, const cf_options* opt) {
  return guarded([&]() -> cf_report* {
    if (!suite_id) throw std::invalid_argument("suite_id is null");
    const SuiteOptions options = opt ? opt->opt : SuiteOptions{};
    return new cf_report{cforge::run_suite(suite_id, options)};
  });
}

cf_report* cf_run_scenario_file(const char* path, uint64_t seed, int timing) {
  return guarded([&]() -> cf_report* {
    if (!path) throw std::invalid_argument("path is null");
    const cforge::Scenario sc = cforge::load_scenario_file(path);
    Report rep;
    rep.entries = cforge::run_scenario(sc, seed, timing != 0);
    return new cf_report{std::move(rep)};
  });
}

cf_report* cf_report_load(const char* json_text) {
  return guarded([&]() -> cf_report* {
    if (!json_text) throw std::invalid_argument("json_text is null");
    return new cf_report{cforge::report_from_json(json_text)};
  });
}

char* cf_report_render(const cf_report* rep, const char* format) {
  return guarded([&]() -> char* {
    if (!rep) throw std::invalid_argument("report handle is null");
    const std::string fmt = format ? format : "text";
    if (fmt == "text") return copy_out(cforge::render_text(rep->rep));
    if (fmt == "json") return copy_out(cforge::render_json(rep->rep));
    throw std::invalid_argument("unknown format '" + fmt + "' (use text or json)");
  });
}

size_t cf_report_entry_count(const cf_report* rep) {
  clear_error();
  return rep ? rep->rep.entries.size() : 0;
}

size_t cf_report_pass_count(const cf_report* rep) {
  clear_error();
  return rep ? rep->rep.pass_count() : 0;
}

size_t cf_report_fail_count(const cf_report* rep) {
  clear_error();
  return rep ? rep->rep.fail_count() : 0;
}

size_t cf_report_info_count(const cf_report* rep) {
  clear_error();
  return rep ? rep->rep.info_count() : 0;
}

int cf_report_all_pass(const cf_report* rep) {
  clear_error();
  return rep && rep->rep.all_pass() ? 1 : 0;
}

void cf_report_free(cf_report* rep) { delete rep; }

void cf_string_free(char* s) { std::free(s); }

}  // extern "C"
