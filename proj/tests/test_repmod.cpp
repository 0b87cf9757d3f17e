#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catalog.hpp"
#include "error.hpp"
#include "rep.hpp"

using namespace cforge;

namespace {

MatrixF random_matrix(PrimeField f, uint32_t r, uint32_t c, std::mt19937& rng) {
  MatrixF m(f, r, c);
  std::uniform_int_distribution<uint32_t> d(0, f.modulus() - 1);
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = 0; j < c; ++j) m.set(i, j, d(rng));
  return m;
}

uint32_t trace(const MatrixF& m) {
  uint32_t t = 0;
  for (uint32_t i = 0; i < m.rows(); ++i) t = m.field().add(t, m.at(i, i));
  return t;
}

// induced-character value at g, computed from the subgroup module alone
uint32_t induced_trace(const Representation& w, const Subgroup& h, uint32_t g) {
  const GroupPtr& p = h.parent();
  const Transversal t = left_transversal(h);
  uint32_t sum = 0;
  for (uint32_t x : t.reps) {
    const uint32_t y = p->mul(p->mul(p->inv(x), g), x);
    if (h.contains(y)) sum = w.field().add(sum, trace(w.image(h.to_sub(y))));
  }
  return sum;
}

uint32_t elt_of_order(const GroupPtr& g, uint32_t k) {
  for (uint32_t x = 0; x < g->order(); ++x)
    if (g->element_order(x) == k) return x;
  REQUIRE(false);
  return 0;
}

}  // namespace

TEST_CASE("sparse matrices agree with the dense kernels") {
  std::mt19937 rng(99);
  for (uint32_t p : {2u, 3u, 7u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 20; ++trial) {
      const uint32_t n = 1 + rng() % 6;
      const MatrixF a = random_matrix(f, n, n, rng);
      const MatrixF b = random_matrix(f, n, n, rng);
      const SparseMat sa = sparse_from_dense(a), sb = sparse_from_dense(b);
      CHECK(sparse_to_dense(f, sa) == a);
      CHECK(sparse_to_dense(f, sparse_mul(f, sa, sb)) == a * b);
      CHECK(sparse_to_dense(f, sparse_kron(f, sa, sb)) == kronecker(a, b));
      std::vector<uint32_t> v(n);
      for (auto& x : v) x = rng() % p;
      const auto y = sparse_apply(f, sa, v);
      for (uint32_t i = 0; i < n; ++i) {
        uint32_t want = 0;
        for (uint32_t j = 0; j < n; ++j) want = f.add(want, f.mul(a.at(i, j), v[j]));
        CHECK(y[i] == want);
      }
    }
    CHECK(sparse_to_dense(f, sparse_identity(3)) == MatrixF::identity(f, 3));
  }
}

TEST_CASE("regular module goldens and the full multiplicative check") {
  const auto c2 = cyclic_group(2);
  const PrimeField f3(3);
  const Representation reg = regular_rep(c2, f3);
  CHECK(reg.dim() == 2);
  CHECK(reg.image(0) == MatrixF::identity(f3, 2));
  CHECK(reg.image(1) == matrix_from_rows(f3, {{0, 1}, {1, 0}}));

  for (uint32_t p : {2u, 5u}) {
    const Representation r = regular_rep(symmetric_group(3), PrimeField(p));
    CHECK_NOTHROW(r.check_homomorphism_full());
    for (uint32_t g = 1; g < 6; ++g) CHECK(trace(r.image(g)) == 0);  // no fixed points
  }
}

TEST_CASE("module construction from generator images") {
  const auto s3 = symmetric_group(3);
  const PrimeField f5(5);
  std::vector<MatrixF> sign;
  for (uint32_t s : s3->generators()) {
    const uint32_t v = s3->element_order(s) == 2 ? 4 : 1;
    sign.push_back(matrix_from_rows(f5, {{v}}));
  }
  const Representation v = rep_from_generators(s3, f5, sign);
  uint32_t plus = 0, minus = 0;
  for (uint32_t g = 0; g < 6; ++g) {
    const uint32_t x = v.image(g).at(0, 0);
    if (x == 1) ++plus;
    if (x == 4) ++minus;
  }
  CHECK(plus == 3);
  CHECK(minus == 3);

  // images that break a relation are rejected with the offending pair named
  std::vector<MatrixF> bad;
  for (size_t i = 0; i < s3->generators().size(); ++i)
    bad.push_back(matrix_from_rows(f5, {{2}}));
  try {
    rep_from_generators(s3, f5, bad);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("multiplicative law fails") != std::string::npos);
  }

  // wedge: a hand-built image table with one wrong entry is caught
  const auto c4 = cyclic_group(4);
  const PrimeField f7(7);
  std::vector<SparseMat> imgs;
  for (uint32_t i = 0; i < 4; ++i) {
    MatrixF m(f7, 1, 1);
    m.set(0, 0, i == 3 ? 3 : (i == 0 ? 1 : (i == 1 ? 2 : 4)));  // 2^3 = 1 mod 7, not 3
    imgs.push_back(sparse_from_dense(m));
  }
  CHECK_THROWS_AS(Representation(c4, f7, 1, imgs, {}, false), std::invalid_argument);
}

TEST_CASE("permutation module equals induction of the trivial module") {
  const auto s3 = symmetric_group(3);
  const PrimeField f7(7);
  const Subgroup a3 = subgroup_generated(s3, {elt_of_order(s3, 3)});
  REQUIRE(a3.order() == 3);
  const Representation perm = permutation_module(a3, f7);
  const Representation ind = induce(trivial_rep(a3.group(), f7), a3);
  REQUIRE(perm.dim() == 2);
  REQUIRE(ind.dim() == 2);
  for (uint32_t g = 0; g < 6; ++g) CHECK(perm.image(g) == ind.image(g));

  // induction from the trivial subgroup is left translation on the group
  const Representation reg = regular_rep(s3, f7);
  const Representation ind1 = induce(trivial_rep(trivial_subgroup(s3).group(), f7),
                                     trivial_subgroup(s3));
  REQUIRE(ind1.dim() == 6);
  for (uint32_t g = 0; g < 6; ++g) CHECK(ind1.image(g) == reg.image(g));
}

TEST_CASE("induction matches the classical character formula") {
  const auto s3 = symmetric_group(3);
  const PrimeField f7(7);
  const Subgroup a3 = subgroup_generated(s3, {elt_of_order(s3, 3)});
  Representation w = trivial_rep(a3.group(), f7);
  {
    // nontrivial character of C3 over F_7: generator -> 2 (2^3 = 1)
    std::vector<MatrixF> img;
    for (size_t i = 0; i < a3.group()->generators().size(); ++i)
      img.push_back(matrix_from_rows(f7, {{2}}));
    w = rep_from_generators(a3.group(), f7, img);
  }
  const Representation ind = induce(w, a3);
  CHECK(ind.dim() == 2);
  for (uint32_t g = 0; g < 6; ++g) CHECK(trace(ind.image(g)) == induced_trace(w, a3, g));

  // two-step induction has the same character as the direct one
  const auto c12 = cyclic_group(12);
  const PrimeField f5(5);
  const Subgroup c2 = subgroup_generated(c12, {6});
  const Subgroup c6 = subgroup_generated(c12, {2});
  REQUIRE(c2.order() == 2);
  REQUIRE(c6.order() == 6);
  std::vector<MatrixF> mi{matrix_from_rows(f5, {{4}})};
  const Representation sgn = rep_from_generators(c2.group(), f5, mi);
  const Representation direct = induce(sgn, c2);
  const Subgroup c2_in_c6 = subgroup_within(c6, c2);
  const Representation step1 = induce(rep_from_generators(c2_in_c6.group(), f5, mi), c2_in_c6);
  const Representation two_step = induce(step1, c6);
  REQUIRE(direct.dim() == 6);
  REQUIRE(two_step.dim() == 6);
  for (uint32_t g = 0; g < 12; ++g)
    CHECK(trace(direct.image(g)) == trace(two_step.image(g)));

  // inducing from the whole group changes nothing
  const Subgroup whole = full_subgroup(s3);
  const Representation v = regular_rep(whole.group(), f7);
  const Representation same = induce(v, whole);
  for (uint32_t g = 0; g < 6; ++g) CHECK(same.image(g) == v.image(g));
}

TEST_CASE("tensor, direct sum and outer tensor against dense block kernels") {
  const auto d4 = dihedral_group(4);
  const PrimeField f3(3);
  const Representation reg = regular_rep(d4, f3);
  const Representation perm = permutation_module(subgroup_generated(d4, {1}), f3);
  const Representation t = tensor(reg, perm);
  const Representation s = direct_sum({reg, perm, perm});
  CHECK(t.dim() == reg.dim() * perm.dim());
  CHECK(s.dim() == reg.dim() + 2 * perm.dim());
  for (uint32_t g = 0; g < 8; ++g) {
    CHECK(t.image(g) == kronecker(reg.image(g), perm.image(g)));
    CHECK(s.image(g) == block_diag({reg.image(g), perm.image(g), perm.image(g)}));
  }

  const auto c2 = cyclic_group(2);
  const auto c3 = cyclic_group(3);
  const auto prod = direct_product(c2, c3);
  const PrimeField f5(5);
  const Representation outer = outer_tensor(prod, regular_rep(c2, f5), regular_rep(c3, f5));
  const Representation preg = regular_rep(prod, f5);
  for (uint32_t g = 0; g < 6; ++g) CHECK(outer.image(g) == preg.image(g));
}

TEST_CASE("restriction, conjugation and transport") {
  const auto s3 = symmetric_group(3);
  const PrimeField f7(7);
  const Subgroup a3 = subgroup_generated(s3, {elt_of_order(s3, 3)});
  std::vector<MatrixF> img;
  for (size_t i = 0; i < a3.group()->generators().size(); ++i)
    img.push_back(matrix_from_rows(f7, {{2}}));
  const Representation w = rep_from_generators(a3.group(), f7, img);

  // restricting the induced module back to A3 shows W and its conjugate
  const Representation res = restrict_rep(induce(w, a3), a3);
  CHECK(res.dim() == 2);
  for (uint32_t i = 0; i < 3; ++i) {
    const MatrixF m = res.image(i);
    CHECK(m.at(0, 1) == 0);
    CHECK(m.at(1, 0) == 0);
  }

  // conjugating by an inner element fixes W; by a transposition it inverts it
  const uint32_t rot = elt_of_order(s3, 3);
  const uint32_t flip = elt_of_order(s3, 2);
  const Representation fixed = conjugate_module(w, a3, rot);
  const Representation swapped = conjugate_module(w, a3, flip);
  for (uint32_t i = 0; i < 3; ++i) {
    CHECK(fixed.image(i) == w.image(i));
    CHECK(swapped.image(i) == w.image(a3.group()->inv(i)));
  }

  // transporting the sign character of <flip> lands on the conjugate subgroup
  const Subgroup h = subgroup_generated(s3, {flip});
  std::vector<MatrixF> sgn{matrix_from_rows(f7, {{6}})};
  const Representation wh = rep_from_generators(h.group(), f7, sgn);
  CHECK_THROWS_AS(conjugate_module(wh, h, rot), std::invalid_argument);
  const auto [k, moved] = transport_rep(wh, h, rot);
  CHECK_FALSE(k.same_members(h));
  CHECK(k.order() == 2);
  CHECK(moved.image(1).at(0, 0) == 6);
}

TEST_CASE("module text round trip and parse failures") {
  const auto d4 = dihedral_group(4);
  const PrimeField f3(3);
  const Representation perm = permutation_module(subgroup_generated(d4, {1}), f3);
  std::vector<MatrixF> gi = perm.generator_images();
  const Representation direct = rep_from_generators(d4, f3, gi);
  const std::string text = rep_to_text(direct, "D4");
  const Representation back = rep_from_text(text, d4);
  for (uint32_t g = 0; g < 8; ++g) CHECK(back.image(g) == direct.image(g));
  CHECK(rep_to_text(back, "D4") == text);

  const auto c4 = cyclic_group(4);
  CHECK_THROWS_AS(rep_from_text("module C4 dim 1 mod 5\n2\n", c4), ParseError);
  CHECK_THROWS_AS(rep_from_text("rep C4 dim 1 mod 6\n5\n", c4), ParseError);
  CHECK_THROWS_AS(rep_from_text("rep C4 dim 1 mod 5\n7\n", c4), ParseError);
  CHECK_THROWS_AS(rep_from_text("rep C4 dim 2 mod 5\n1 0\n0\n", c4), ParseError);
  CHECK_THROWS_AS(rep_from_text("rep C4 dim 1 mod 5\n2\n3\n", c4), ParseError);
  // 3^4 = 81 = 4 mod 7: not a homomorphism of C4
  CHECK_THROWS_AS(rep_from_text("rep C4 dim 1 mod 7\n3\n", c4), ParseError);
  try {
    rep_from_text("rep C4 dim 1 mod 5\n5\n", c4);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("induced basis labels record coset and source vector") {
  const auto s3 = symmetric_group(3);
  const Subgroup a3 = subgroup_generated(s3, {elt_of_order(s3, 3)});
  const Representation ind = induce(trivial_rep(a3.group(), PrimeField(5)), a3);
  REQUIRE(ind.basis_labels().size() == 2);
  CHECK(ind.basis_labels()[0] == "g0*1");
  CHECK(ind.basis_labels()[1] != ind.basis_labels()[0]);
}
