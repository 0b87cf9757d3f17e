#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "cliffordforge.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out = s;
  cf_string_free(s);
  return out;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("capi-test-" + std::to_string(uint64_t(::getpid())));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = path / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p.string();
  }
};

cf_options* small_options() {
  cf_options* opt = cf_options_new();
  REQUIRE(opt != nullptr);
  CHECK(cf_options_set_max_order(opt, 6) == 0);
  const uint32_t primes[] = {3, 5};
  CHECK(cf_options_set_primes(opt, primes, 2) == 0);
  CHECK(cf_options_set_seed(opt, 42) == 0);
  CHECK(cf_options_set_jobs(opt, 2) == 0);
  CHECK(cf_options_set_timing(opt, 0) == 0);
  return opt;
}

}  // namespace

TEST_CASE("version and clean error state") {
  CHECK(std::string(cf_version()).find('.') != std::string::npos);
  cf_options* opt = cf_options_new();
  CHECK(cf_last_error() == nullptr);
  cf_options_free(opt);
}

TEST_CASE("null handles are reported, not dereferenced") {
  CHECK(cf_options_set_max_order(nullptr, 8) != 0);
  REQUIRE(cf_last_error() != nullptr);
  CHECK(std::string(cf_last_error()).find("null") != std::string::npos);
  CHECK(cf_options_set_seed(nullptr, 1) != 0);
  CHECK(cf_report_entry_count(nullptr) == 0);
  CHECK(cf_report_all_pass(nullptr) == 0);
  cf_options_free(nullptr);
  cf_report_free(nullptr);
  cf_string_free(nullptr);
}

TEST_CASE("suite run through the C surface") {
  cf_options* opt = small_options();
  cf_report* rep = cf_run_suite("product", opt);
  REQUIRE(rep != nullptr);
  CHECK(cf_last_error() == nullptr);
  CHECK(cf_report_entry_count(rep) == 4);
  CHECK(cf_report_pass_count(rep) == 4);
  CHECK(cf_report_fail_count(rep) == 0);
  CHECK(cf_report_info_count(rep) == 0);
  CHECK(cf_report_all_pass(rep) == 1);

  const std::string text = take(cf_report_render(rep, "text"));
  CHECK(text.find("summary pass=4 fail=0 info=0") != std::string::npos);
  const std::string json = take(cf_report_render(rep, "json"));
  CHECK(json.find("\"entries\"") != std::string::npos);

  cf_report* back = cf_report_load(json.c_str());
  REQUIRE(back != nullptr);
  CHECK(cf_report_entry_count(back) == 4);
  CHECK(take(cf_report_render(back, "json")) == json);
  cf_report_free(back);

  cf_report_free(rep);
  cf_options_free(opt);
}

TEST_CASE("two identical runs render identically") {
  cf_options* opt = small_options();
  cf_report* a = cf_run_suite("product", opt);
  cf_report* b = cf_run_suite("product", opt);
  REQUIRE(a != nullptr);
  REQUIRE(b != nullptr);
  CHECK(take(cf_report_render(a, "json")) == take(cf_report_render(b, "json")));
  cf_report_free(a);
  cf_report_free(b);
  cf_options_free(opt);
}

TEST_CASE("failures surface through cf_last_error") {
  cf_report* rep = cf_run_suite("no-such-suite", nullptr);
  CHECK(rep == nullptr);
  REQUIRE(cf_last_error() != nullptr);
  CHECK(std::string(cf_last_error()).find("unknown suite") != std::string::npos);

  rep = cf_run_suite(nullptr, nullptr);
  CHECK(rep == nullptr);
  CHECK(cf_last_error() != nullptr);

  cf_options* opt = cf_options_new();
  const uint32_t bad[] = {6};
  cf_options_set_primes(opt, bad, 1);
  rep = cf_run_suite("product", opt);
  CHECK(rep == nullptr);
  CHECK(std::string(cf_last_error()).find("not prime") != std::string::npos);
  cf_options_free(opt);

  CHECK(cf_report_load("this is not json") == nullptr);
  CHECK(cf_last_error() != nullptr);
}

TEST_CASE("render format is validated") {
  cf_report* rep = cf_run_suite("product", nullptr);
  REQUIRE(rep != nullptr);
  CHECK(cf_report_render(rep, "yaml") == nullptr);
  REQUIRE(cf_last_error() != nullptr);
  CHECK(std::string(cf_last_error()).find("format") != std::string::npos);
  char* text = cf_report_render(rep, nullptr);  // defaults to text
  CHECK(take(text).find("summary") != std::string::npos);
  cf_report_free(rep);
}

TEST_CASE("catalog and suite listings") {
  const std::string names = take(cf_suite_names());
  CHECK(names.find("mackey\n") != std::string::npos);
  CHECK(names.find("all\n") != std::string::npos);
  const std::string cat = take(cf_catalog_text(6));
  CHECK(cat.find("S3 6") != std::string::npos);
  CHECK(cf_catalog_text(10000) == nullptr);  // beyond the order cap
  CHECK(cf_last_error() != nullptr);
}

TEST_CASE("scenario file execution") {
  TempDir dir;
  dir.file("mod.txt", "rep whole dim 1 mod 7\n2\n");
  const std::string path = dir.file("inst.scn",
                                    "field=7\n"
                                    "group=perm:(0 1 2)\n"
                                    "normal=1\n"
                                    "module=@mod.txt\n"
                                    "claim=invariant true\n"
                                    "claim=induced-irreducible true\n");
  cf_report* rep = cf_run_scenario_file(path.c_str(), 3, 1);
  REQUIRE(rep != nullptr);
  CHECK(cf_report_entry_count(rep) == 2);
  CHECK(cf_report_all_pass(rep) == 1);
  cf_report_free(rep);

  CHECK(cf_run_scenario_file((dir.path / "absent.scn").string().c_str(), 0, 0) == nullptr);
  CHECK(cf_last_error() != nullptr);
}
