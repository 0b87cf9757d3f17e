#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "catalog.hpp"
#include "error.hpp"
#include "group.hpp"

using namespace cforge;

TEST_CASE("cyclic and permutation constructions") {
  GroupPtr c6 = cyclic_group(6);
  CHECK(c6->order() == 6);
  CHECK(c6->mul(4, 5) == 3);
  CHECK(c6->inv(2) == 4);
  CHECK(c6->element_order(1) == 6);
  CHECK(c6->is_abelian());

  GroupPtr s3 = symmetric_group(3);
  CHECK(s3->order() == 6);
  CHECK(!s3->is_abelian());
  CHECK(s3->generators().size() == 2);

  GroupPtr a4 = alternating_group_4();
  CHECK(a4->order() == 12);
  GroupPtr s4 = symmetric_group(4);
  CHECK(s4->order() == 24);
  GroupPtr d4 = dihedral_group(4);
  CHECK(d4->order() == 8);
  CHECK(d4->center().size() == 2);
}

TEST_CASE("quaternion group") {
  GroupPtr q8 = quaternion_group();
  CHECK(q8->order() == 8);
  // exactly one involution
  int involutions = 0;
  for (uint32_t a = 1; a < 8; ++a)
    if (q8->element_order(a) == 2) ++involutions;
  CHECK(involutions == 1);
  CHECK(!q8->is_abelian());
  CHECK(q8->center().size() == 2);
  // every subgroup is normal
  for (const auto& s : all_subgroups(q8)) CHECK(s.is_normal());
}

TEST_CASE("table validation witnesses") {
  // identity not at 0
  CHECK_THROWS_WITH_AS(group_from_table({{1, 0}, {0, 1}}, "bad"),
                       doctest::Contains("identity"), std::invalid_argument);
  // broken associativity: claw table (valid latin square, not a group)
  std::vector<std::vector<uint32_t>> t = {
      {0, 1, 2, 3, 4},
      {1, 0, 3, 4, 2},
      {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1},
      {4, 3, 1, 2, 0},
  };
  CHECK_THROWS_WITH_AS(group_from_table(t, "bad"), doctest::Contains("associativity"),
                       std::invalid_argument);
  // order cap
  std::vector<std::vector<uint32_t>> big(300, std::vector<uint32_t>(300, 0));
  CHECK_THROWS_WITH_AS(group_from_table(big, "big"), doctest::Contains("cap"),
                       std::invalid_argument);
}

TEST_CASE("subgroups, transversals, double cosets") {
  GroupPtr s3 = symmetric_group(3);
  // A3 inside S3: the rotation subgroup has the 3-cycles
  std::vector<uint32_t> three_cycles;
  for (uint32_t a = 0; a < 6; ++a)
    if (s3->element_order(a) == 3) three_cycles.push_back(a);
  REQUIRE(three_cycles.size() == 2);
  Subgroup a3 = subgroup_generated(s3, {three_cycles[0]});
  CHECK(a3.order() == 3);
  CHECK(a3.is_normal());
  CHECK(a3.group()->order() == 3);
  CHECK(a3.group()->is_abelian());

  Transversal t = left_transversal(a3);
  CHECK(t.reps.size() == 2);
  CHECK(t.reps[0] == 0);
  // reps are minimal in their coset
  for (uint32_t x = 0; x < 6; ++x) CHECK(t.reps[t.coset_of[x]] <= x);

  // order-2 subgroup is not normal; its double cosets with itself
  uint32_t invol = 0;
  for (uint32_t a = 1; a < 6; ++a)
    if (s3->element_order(a) == 2) {
      invol = a;
      break;
    }
  Subgroup h = subgroup_generated(s3, {invol});
  CHECK(h.order() == 2);
  CHECK(!h.is_normal());
  DoubleCosets dc = double_cosets(h, h);
  // |HxH| is 2 or 4; total 6 = 2 + 4 so exactly two classes
  CHECK(dc.reps.size() == 2);
  CHECK(dc.reps[0] == 0);
  // class_of is a partition covering everything
  std::set<uint32_t> seen(dc.class_of.begin(), dc.class_of.end());
  CHECK(seen.size() == dc.reps.size());
}

TEST_CASE("lagrange and random subgroup sanity") {
  std::mt19937 rng(2024);
  for (const auto& g : catalog(12)) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<uint32_t> seeds;
      for (int k = 0; k < 2; ++k) seeds.push_back(rng() % g->order());
      Subgroup s = subgroup_generated(g, seeds);
      CHECK(g->order() % s.order() == 0);
      Transversal t = left_transversal(s);
      CHECK(t.reps.size() * s.order() == g->order());
    }
  }
}

TEST_CASE("all_subgroups counts") {
  CHECK(all_subgroups(symmetric_group(3)).size() == 6);  // 1, three C2, A3, S3
  CHECK(all_subgroups(quaternion_group()).size() == 6);
  CHECK(all_subgroups(cyclic_group(12)).size() == 6);    // divisors of 12
  GroupPtr c2c2 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(all_subgroups(c2c2).size() == 5);
  // normal subgroups of S3: 1, A3, S3
  CHECK(normal_subgroups(symmetric_group(3)).size() == 3);
}

TEST_CASE("quotient group with section") {
  GroupPtr s3 = symmetric_group(3);
  Subgroup a3 = [&] {
    for (uint32_t a = 1; a < 6; ++a)
      if (s3->element_order(a) == 3) return subgroup_generated(s3, {a});
    throw std::logic_error("no 3-cycle");
  }();
  Quotient q = quotient_group(s3, a3);
  CHECK(q.group->order() == 2);
  // projection is a homomorphism
  for (uint32_t a = 0; a < 6; ++a)
    for (uint32_t b = 0; b < 6; ++b)
      CHECK(q.proj[s3->mul(a, b)] == q.group->mul(q.proj[a], q.proj[b]));
  // section picks minimal representatives and splits proj
  for (uint32_t i = 0; i < q.group->order(); ++i) CHECK(q.proj[q.section[i]] == i);
  CHECK(q.section[0] == 0);

  uint32_t invol = 0;
  for (uint32_t a = 1; a < 6; ++a)
    if (s3->element_order(a) == 2) {
      invol = a;
      break;
    }
  Subgroup h = subgroup_generated(s3, {invol});
  CHECK_THROWS_WITH_AS(quotient_group(s3, h), doctest::Contains("not normal"),
                       std::invalid_argument);
}

TEST_CASE("catalog contents") {
  auto cat8 = catalog(8);
  std::set<std::string> names;
  for (const auto& g : cat8) names.insert(g->name());
  for (const char* want : {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C2xC2", "C2xC4",
                           "C2xC2xC2", "D4", "Q8", "S3"})
    CHECK_MESSAGE(names.count(want) == 1, want);
  CHECK(names.size() == cat8.size());  // unique names

  auto cat16 = catalog(16);
  std::set<std::string> n16;
  for (const auto& g : cat16) n16.insert(g->name());
  for (const char* want : {"C16", "C2xC8", "C4xC4", "C2xC2xC4", "C2xC2xC2xC2", "C3xC3", "C2xC6",
                           "D5", "D6", "D7", "D8", "A4", "C12"})
    CHECK_MESSAGE(n16.count(want) == 1, want);
  // sorted by order then name
  for (size_t i = 1; i < cat16.size(); ++i) {
    CHECK(cat16[i - 1]->order() <= cat16[i]->order());
    if (cat16[i - 1]->order() == cat16[i]->order())
      CHECK(cat16[i - 1]->name() < cat16[i]->name());
  }
  auto cat24 = catalog(24);
  bool has_s4 = false;
  for (const auto& g : cat24) has_s4 |= g->name() == "S4";
  CHECK(has_s4);
}

TEST_CASE("group text parsing") {
  GroupPtr g = parse_group_text("perm 3\n(0 1)\n(0 1 2)\n", "S3");
  CHECK(g->order() == 6);
  GroupPtr klein = parse_group_text("perm 4\n(0 1)(2 3)\n(0 2)(1 3)\n", "V4");
  CHECK(klein->order() == 4);
  CHECK(klein->is_abelian());

  GroupPtr c3 = parse_group_text("table 3\n0 1 2\n1 2 0\n2 0 1\n", "C3");
  CHECK(c3->order() == 3);
  CHECK(group_to_table_text(*c3) == "table 3\n0 1 2\n1 2 0\n2 0 1\n");

  CHECK_THROWS_WITH_AS(parse_group_text("perm 3\n(0 3)\n", "x"), doctest::Contains("line 2"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_group_text("perm 3\n(0 1\n", "x"), doctest::Contains("unterminated"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_group_text("table 2\n0 1\n1\n", "x"), doctest::Contains("line 3"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_group_text("grp 2\n", "x"), doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_group_text("perm 3\n(0 0 1)\n", "x"), doctest::Contains("repeated"),
                       ParseError);
}

TEST_CASE("subgroup helpers") {
  GroupPtr d4 = dihedral_group(4);
  auto subs = all_subgroups(d4);
  CHECK(subs.size() == 10);
  for (const auto& s : subs) {
    // conjugates have equal order, intersection with self is self
    Subgroup c = conjugate_subgroup(s, 1);
    CHECK(c.order() == s.order());
    CHECK(intersect_subgroups(s, s).same_members(s));
  }
  // subgroup_within round trip
  Subgroup c4 = [&] {
    for (uint32_t a = 1; a < 8; ++a)
      if (d4->element_order(a) == 4) return subgroup_generated(d4, {a});
    throw std::logic_error("no rotation");
  }();
  Subgroup c2 = subgroup_generated(d4, {d4->mul(c4.to_parent(1), c4.to_parent(1))});
  Subgroup inner = subgroup_within(c4, c2);
  CHECK(inner.order() == 2);
  CHECK(inner.parent() == c4.group());
}
