#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>

#include "error.hpp"
#include "suite.hpp"

using namespace cforge;

namespace {

std::map<std::string, std::string> claims_of(const Scenario& sc) {
  return {sc.expected.begin(), sc.expected.end()};
}

std::map<std::string, std::string> verdicts_of(const std::vector<ReportEntry>& entries) {
  std::map<std::string, std::string> out;
  for (const auto& e : entries) out[e.claim] = e.verdict;
  return out;
}

uint32_t element_of_order(const GroupPtr& g, uint32_t k) {
  for (uint32_t a = 0; a < g->order(); ++a)
    if (g->element_order(a) == k) return a;
  throw std::logic_error("no element of the requested order");
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("scenario-test-" + std::to_string(uint64_t(::getpid())));
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

}  // namespace

TEST_CASE("radical family builder") {
  const Scenario sc = build_radical_example(3, 2, 2);
  CHECK(sc.group->order() == 4);
  CHECK(sc.normal_sub.order() == 2);
  CHECK(sc.module_w.dim() == 1);
  const auto claims = claims_of(sc);
  CHECK(claims.at("invariant") == "true");
  CHECK(claims.at("induced-irreducible") == "true");
  CHECK(claims.at("end-degree") == "2");
  CHECK(claims.at("extends") == "false");
  CHECK(claims.at("split") == "false");
  CHECK_NOTHROW(validate_scenario(sc));

  const auto entries = run_scenario(sc, 7, false);
  CHECK(entries.size() == sc.expected.size());
  for (const auto& e : entries) CHECK(e.verdict == "PASS");
}

TEST_CASE("radical builder sizes the group by the multiplicative order") {
  const Scenario sc = build_radical_example(5, 2, 2);  // ord_5(2) = 4
  CHECK(sc.group->order() == 8);
  CHECK(sc.normal_sub.order() == 4);
  for (const auto& e : run_scenario(sc, 1, false)) CHECK(e.verdict == "PASS");
}

TEST_CASE("radical builder rejects reducible polynomials") {
  CHECK_THROWS_AS(build_radical_example(3, 2, 1), std::invalid_argument);  // t^2 - 1 splits
  CHECK_THROWS_AS(build_radical_example(7, 2, 2), std::invalid_argument);  // 3^2 = 2 mod 7
}

TEST_CASE("crossed product builder: trivial cocycle") {
  const Scenario sc = build_crossed_product(3, 2, 1, {});
  CHECK(sc.group->order() == 16);  // |K^*| = 8 times |Gamma| = 2
  CHECK(sc.normal_sub.order() == 8);
  REQUIRE(sc.crossed.has_value());
  CHECK(sc.crossed->gamma_order == 2);
  CHECK(sc.crossed->regular.dim == 4);
  const auto verdicts = verdicts_of(run_scenario(sc, 3, false));
  CHECK(verdicts.at("invariant") == "PASS");
  CHECK(verdicts.at("division-iff") == "PASS");
  CHECK(verdicts.at("end-dims") == "INFO");
}

TEST_CASE("crossed product over F_2 with r=2 is the symmetric group on three points") {
  const Scenario sc = build_crossed_product(2, 2, 1, {});
  const GroupPtr g = sc.group;
  REQUIRE(g->order() == 6);
  std::map<uint32_t, uint32_t> orders;
  for (uint32_t a = 0; a < 6; ++a) ++orders[g->element_order(a)];
  CHECK(orders[1] == 1);
  CHECK(orders[2] == 3);
  CHECK(orders[3] == 2);
}

TEST_CASE("crossed product with trivial Gamma acts as the field itself") {
  const Scenario sc = build_crossed_product(3, 2, 0, {});
  CHECK(sc.group->order() == 8);
  CHECK(sc.normal_sub.order() == 8);
  for (const auto& e : run_scenario(sc, 5, false))
    CHECK((e.verdict == "PASS" || e.verdict == "INFO"));
}

TEST_CASE("crossed product builder validates the factor table") {
  // constant 2 lies in the fixed field, so the twisted cocycle law holds
  CHECK_NOTHROW(build_crossed_product(3, 2, 1, {1, 1, 1, 2}));
  // the class of t is moved by Frobenius, breaking the law at (1,1,1)
  CHECK_THROWS_WITH_AS(build_crossed_product(3, 2, 1, {1, 1, 1, 3}),
                       doctest::Contains("cocycle law"), std::invalid_argument);
  CHECK_THROWS_AS(build_crossed_product(3, 0, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(build_crossed_product(3, 2, 1, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("scenario text round trip through files") {
  TempDir dir;
  PrimeField f{7};
  const GroupPtr c3 = parse_group_text("perm 3\n(0 1 2)\n", "walk");
  std::vector<MatrixF> imgs;
  for (uint32_t s : c3->generators()) {
    MatrixF m(f, 1, 1);
    uint32_t v = 1;
    for (uint32_t e = 0, cur = GroupTable::identity(); e < c3->order(); ++e) {
      if (cur == s) v = f.pow(2, e);
      cur = c3->mul(cur, 1);
    }
    m.set(0, 0, v);
    imgs.push_back(m);
  }
  const Representation w = rep_from_generators(c3, f, imgs);
  dir.file("mod.txt", rep_to_text(w, "whole"));
  const std::string text =
      "# cube-root character over the full group\n"
      "field=7\n"
      "group=perm:(0 1 2)\n"
      "normal=1\n"
      "module=@mod.txt\n"
      "claim=invariant true\n"
      "claim=induced-irreducible true\n"
      "claim=end-degree 1\n"
      "claim=extends true\n"
      "claim=split true\n";
  const std::string path = dir.file("inst.scn", text);

  const Scenario sc = load_scenario_file(path);
  CHECK(sc.group->order() == 3);
  CHECK(sc.normal_sub.order() == 3);
  CHECK(sc.expected.size() == 5);
  for (const auto& e : run_scenario(sc, 11, false)) CHECK(e.verdict == "PASS");
}

TEST_CASE("scenario parsing rejects malformed input") {
  TempDir dir;
  const std::string mod = dir.file("m.txt", "dim 1\nfield 7\ngroup any\ngen 0 = [1]\n");

  auto parse = [&](const std::string& text) {
    return parse_scenario_text(text, dir.path.string(), "t");
  };

  CHECK_THROWS_AS(parse("field=7\nbogus=3\n"), ParseError);
  CHECK_THROWS_AS(parse("field=6\ngroup=perm:(0 1)\nnormal=1\nmodule=@m.txt\n"), ParseError);
  CHECK_THROWS_AS(parse("group=perm:(0 1)\nnormal=1\nmodule=@m.txt\nclaim=invariant true\n"),
                  ParseError);  // no field
  CHECK_THROWS_AS(parse("field=7\ngroup=perm:(0 1)\nnormal=1\nclaim=invariant true\n"),
                  ParseError);  // no module
  CHECK_THROWS_AS(
      parse("field=7\ngroup=perm:(0 1)\nnormal=1\nmodule=@m.txt\nclaim=banana true\n"),
      ParseError);
  CHECK_THROWS_AS(
      parse("field=7\ngroup=perm:(0 1)\nnormal=1\nmodule=@m.txt\nclaim=invariant maybe\n"),
      ParseError);
  CHECK_THROWS_AS(
      parse("field=7\ngroup=perm:(0 1)\nnormal=1\nmodule=@missing.txt\nclaim=invariant true\n"),
      ParseError);
  CHECK_THROWS_AS(parse("field=7\nfield=7\ngroup=perm:(0 1)\nnormal=1\nmodule=@m.txt\n"),
                  ParseError);
}

TEST_CASE("scenario parsing insists the chosen subgroup is normal") {
  TempDir dir;
  const GroupPtr s3 = parse_group_text("perm 3\n(0 1)\n(0 1 2)\n", "probe");
  const uint32_t flip = element_of_order(s3, 2);
  PrimeField f{7};
  dir.file("m.txt", rep_to_text(trivial_rep(subgroup_generated(s3, {flip}).group(), f), "sub"));
  const std::string text = "field=7\ngroup=perm:(0 1);(0 1 2)\nnormal=" + std::to_string(flip) +
                           "\nmodule=@m.txt\nclaim=invariant true\n";
  CHECK_THROWS_WITH_AS(parse_scenario_text(text, dir.path.string(), "t"),
                       doctest::Contains("normal"), ParseError);
}

TEST_CASE("report JSON round trip") {
  Report r;
  r.entries.push_back({"inst-a", "claim-x", "PASS", "dims agree", 12});
  r.entries.push_back({"inst-a", "claim-y", "FAIL", "counterexample at 3", 0});
  r.entries.push_back({"inst-b", "note", "INFO", "recorded only", 7});
  CHECK(r.pass_count() == 1);
  CHECK(r.fail_count() == 1);
  CHECK(r.info_count() == 1);
  CHECK_FALSE(r.all_pass());

  const std::string js = render_json(r);
  const Report back = report_from_json(js);
  REQUIRE(back.entries.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(back.entries[i].scenario == r.entries[i].scenario);
    CHECK(back.entries[i].claim == r.entries[i].claim);
    CHECK(back.entries[i].verdict == r.entries[i].verdict);
    CHECK(back.entries[i].witness == r.entries[i].witness);
    CHECK(back.entries[i].ms == r.entries[i].ms);
  }
  CHECK(render_json(back) == js);

  const std::string text = render_text(r);
  CHECK(text.find("summary pass=1 fail=1 info=1") != std::string::npos);

  CHECK_THROWS_AS(report_from_json("{\"entries\": 3}"), ParseError);
  CHECK_THROWS_AS(report_from_json("not json"), ParseError);
  CHECK_THROWS_AS(
      report_from_json("{\"entries\":[{\"scenario\":\"a\",\"claim\":\"b\",\"verdict\":\"MAYBE\","
                       "\"witness\":\"\",\"ms\":0}]}"),
      ParseError);
}

TEST_CASE("fixed-family suites pass") {
  SuiteOptions opt;
  opt.seed = 2;
  for (const char* name : {"product", "radical", "crossed", "kernel"}) {
    const Report r = run_suite(name, opt);
    CHECK(r.all_pass());
    CHECK(r.entries.size() > 0);
  }
}

TEST_CASE("mackey suite covers the grid, the random draws and the worked ledger") {
  SuiteOptions opt;
  opt.max_order = 6;
  opt.primes = {3};
  opt.seed = 5;
  const Report r = run_suite("mackey", opt);
  CHECK(r.all_pass());
  bool ledger = false, random_draw = false;
  for (const auto& e : r.entries) {
    ledger = ledger || e.scenario == "mackey(S3-ledger)";
    random_draw = random_draw || e.scenario == "mackey-random0";
  }
  CHECK(ledger);
  CHECK(random_draw);
}

TEST_CASE("an empty catalog yields an empty passing report") {
  SuiteOptions opt;
  opt.max_order = 0;
  const Report r = run_suite("mackey", opt);
  CHECK(r.entries.empty());
  CHECK(r.all_pass());
}

TEST_CASE("suite options are validated") {
  SuiteOptions opt;
  CHECK_THROWS_AS(run_suite("no-such-suite", opt), std::invalid_argument);
  opt.primes = {4};
  CHECK_THROWS_AS(run_suite("product", opt), std::invalid_argument);
  opt.primes = {};
  CHECK_THROWS_AS(run_suite("product", opt), std::invalid_argument);
}

TEST_CASE("suite names list every family plus the catch-all") {
  const auto& names = suite_names();
  CHECK(names.size() == 12);
  CHECK(names.back() == "all");
  for (const char* expect : {"mackey", "clifford", "correspondence", "glue", "factor", "radical",
                             "collapse", "frobenius", "product", "kernel", "crossed"})
    CHECK(std::find(names.begin(), names.end(), expect) != names.end());
}

TEST_CASE("reports are deterministic for a fixed seed") {
  SuiteOptions opt;
  opt.max_order = 6;
  opt.primes = {5};
  opt.seed = 31;
  const std::string a = render_json(run_suite("correspondence", opt));
  const std::string b = render_json(run_suite("correspondence", opt));
  CHECK(a == b);
}

TEST_CASE("worker threads do not change the report") {
  SuiteOptions opt;
  opt.max_order = 5;
  opt.primes = {3};
  opt.seed = 17;
  const std::string serial = render_json(run_suite("frobenius", opt));
  opt.jobs = 4;
  const std::string threaded = render_json(run_suite("frobenius", opt));
  CHECK(serial == threaded);
}

TEST_CASE("instance keys give reproducible independent streams") {
  auto a1 = rng_for(9, "inst/a");
  auto a2 = rng_for(9, "inst/a");
  auto b = rng_for(9, "inst/b");
  CHECK(a1() == a2());
  CHECK(a1() != b());  // streams for distinct keys part ways immediately
}

TEST_CASE("catalog text lists names with orders") {
  const std::string text = catalog_text(6);
  CHECK(text.find("C1 1\n") == 0);
  CHECK(text.find("S3 6\n") != std::string::npos);
  CHECK(text.find("C2xC2 4\n") != std::string::npos);
  CHECK(catalog_text(0).empty());
}
