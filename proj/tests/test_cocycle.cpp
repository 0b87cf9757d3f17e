#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "catalog.hpp"
#include "cocycle.hpp"
#include "error.hpp"

using namespace cforge;

namespace {

// ground truth by sweeping every unit assignment on all of G, not just
// generators
bool oracle_is_coboundary(const FactorSet& a) {
  const GroupPtr& g = a.group();
  const PrimeField f = a.field();
  const uint32_t n = g->order();
  const uint32_t units = f.modulus() - 1;
  std::vector<uint32_t> mu(n, 1);
  while (true) {
    bool match = true;
    for (uint32_t x = 0; x < n && match; ++x)
      for (uint32_t y = 0; y < n; ++y)
        if (f.mul(f.mul(mu[x], mu[y]), f.inv(mu[g->mul(x, y)])) != a.at(x, y)) {
          match = false;
          break;
        }
    if (match) return true;
    uint32_t pos = 1;
    while (pos < n) {
      mu[pos] = mu[pos] % units + 1;
      if (mu[pos] != 1) break;
      ++pos;
    }
    if (pos == n) return false;
  }
}

FactorSet bilinear_klein_cocycle(const GroupPtr& klein, PrimeField f) {
  // on C2 x C2 with index (a1, a2) -> 2 a1 + a2: value (-1)^{a2 b1}
  const uint32_t n = 4;
  std::vector<uint32_t> vals(n * n, 1);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      if ((a % 2) * (b / 2) % 2 == 1) vals[a * n + b] = f.modulus() - 1;
  return FactorSet(klein, f, std::move(vals));
}

std::vector<uint32_t> random_mu(const GroupPtr& g, PrimeField f, std::mt19937_64& rng) {
  std::vector<uint32_t> mu(g->order());
  mu[0] = 1;
  for (uint32_t i = 1; i < g->order(); ++i) mu[i] = 1 + uint32_t(rng() % (f.modulus() - 1));
  return mu;
}

std::set<uint32_t> nth_powers(PrimeField f, uint32_t n) {
  std::set<uint32_t> out;
  for (uint32_t x = 1; x < f.modulus(); ++x) out.insert(f.pow(x, n));
  return out;
}

}  // namespace

TEST_CASE("factor set validation names the broken identity") {
  const auto c4 = cyclic_group(4);
  const PrimeField f5(5);
  CHECK_NOTHROW(trivial_factor_set(c4, f5));

  std::vector<uint32_t> vals(16, 1);
  vals[5] = 0;
  CHECK_THROWS_AS(FactorSet(c4, f5, vals), std::invalid_argument);

  vals[5] = 1;
  vals[2] = 3;  // a(0, 2) != 1
  CHECK_THROWS_AS(FactorSet(c4, f5, vals), std::invalid_argument);

  vals = std::vector<uint32_t>(16, 1);
  vals[5] = 3;  // a(1,1) alone breaks the cocycle identity
  try {
    FactorSet bad(c4, f5, vals);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("cocycle identity") != std::string::npos);
  }
}

TEST_CASE("coboundary decision agrees with the exhaustive assignment oracle") {
  std::mt19937_64 rng(61);
  const std::vector<GroupPtr> groups = {cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                        direct_product(cyclic_group(2), cyclic_group(2))};
  for (uint32_t p : {3u, 5u}) {
    const PrimeField f(p);
    for (const auto& g : groups) {
      for (int t = 0; t < 8; ++t) {
        const FactorSet a = coboundary_of(g, f, random_mu(g, f, rng));
        CHECK(oracle_is_coboundary(a));
        const auto mu = trivializer(a);
        REQUIRE(mu.has_value());
        CHECK(coboundary_of(g, f, *mu) == a);
      }
      if (g->order() == 4 && g->generators().size() == 1) {
        for (uint32_t c = 1; c < p; ++c) {
          const FactorSet a = cyclic_carry_cocycle(g, f, c);
          CHECK(is_coboundary(a) == oracle_is_coboundary(a));
        }
      }
    }
    const auto klein = direct_product(cyclic_group(2), cyclic_group(2));
    const FactorSet bl = bilinear_klein_cocycle(klein, f);
    CHECK(is_coboundary(bl) == oracle_is_coboundary(bl));
    CHECK_FALSE(is_coboundary(bl));
  }
}

TEST_CASE("carry cocycles are trivial exactly on power classes") {
  const std::vector<std::pair<uint32_t, uint32_t>> cases = {
      {2, 3}, {2, 5}, {4, 5}, {3, 7}, {6, 7}};
  for (const auto& [n, p] : cases) {
    const auto g = cyclic_group(n);
    const PrimeField f(p);
    const auto powers = nth_powers(f, n);
    for (uint32_t c = 1; c < p; ++c)
      CHECK(is_coboundary(cyclic_carry_cocycle(g, f, c)) == (powers.count(c) == 1));
  }
}

TEST_CASE("trivializer honors extra unit constraints") {
  const auto c4 = cyclic_group(4);
  const PrimeField f5(5);

  const FactorSet a = coboundary_of(c4, f5, {1, 2, 1, 2});
  const auto mu = trivializer(a, {0, 2});
  REQUIRE(mu.has_value());
  CHECK((*mu)[2] == 1);
  CHECK(coboundary_of(c4, f5, *mu) == a);

  // (1,1,3,1): solutions differ from it by a character, and no character
  // moves the value 3 at the half turn back to 1
  const FactorSet b = coboundary_of(c4, f5, {1, 1, 3, 1});
  CHECK(trivializer(b).has_value());
  CHECK_FALSE(trivializer(b, {0, 2}).has_value());
}

TEST_CASE("strict equivalence is coboundary of the ratio") {
  std::mt19937_64 rng(8);
  const auto c4 = cyclic_group(4);
  const PrimeField f5(5);
  const FactorSet a = cyclic_carry_cocycle(c4, f5, 2);
  const FactorSet shifted = factor_product(a, coboundary_of(c4, f5, random_mu(c4, f5, rng)));
  CHECK(strictly_equivalent(a, shifted));
  CHECK(strictly_equivalent(a, a));
  // ratio 2/3 = 4 is not a fourth power mod 5
  CHECK_FALSE(strictly_equivalent(a, cyclic_carry_cocycle(c4, f5, 3)));
}

TEST_CASE("twisted group algebras split as the carry unit dictates") {
  std::mt19937_64 rng(19);
  const auto c4 = cyclic_group(4);
  const PrimeField f5(5);

  // t^4 - 2 irreducible: one simple module, the algebra is a degree-4 field
  {
    const FactorSet a = cyclic_carry_cocycle(c4, f5, 2);
    const auto irr = twisted_irreducibles(a, rng);
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].dim == 4);
    const auto rec = recognize_field(end_ring(irr[0]), f5, rng);
    CHECK(rec.kind == FieldRecognition::Field);
    CHECK(rec.degree == 4);
  }

  // t^4 - 4 = (t^2 - 2)(t^2 + 2): two non-isomorphic quadratic fields
  {
    const FactorSet a = cyclic_carry_cocycle(c4, f5, 4);
    const auto irr = twisted_irreducibles(a, rng);
    REQUIRE(irr.size() == 2);
    CHECK(irr[0].dim == 2);
    CHECK(irr[1].dim == 2);
    CHECK_FALSE(is_isomorphic_irreducible(irr[0], irr[1]));
    for (const auto& m : irr) {
      const auto rec = recognize_field(end_ring(m), f5, rng);
      CHECK(rec.kind == FieldRecognition::Field);
      CHECK(rec.degree == 2);
    }
  }

  // trivial twist recovers the plain group algebra: four characters
  {
    const auto irr = twisted_irreducibles(trivial_factor_set(c4, f5), rng);
    CHECK(irr.size() == 4);
    for (const auto& m : irr) CHECK(m.dim == 1);
  }

  // the anticommuting Klein twist is a full 2x2 matrix algebra
  {
    const auto klein = direct_product(cyclic_group(2), cyclic_group(2));
    const PrimeField f3(3);
    const auto irr = twisted_irreducibles(bilinear_klein_cocycle(klein, f3), rng);
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].dim == 2);
    CHECK(end_ring(irr[0]).size() == 1);
  }
}

TEST_CASE("twisted units multiply by the factor set") {
  const auto c4 = cyclic_group(4);
  const PrimeField f5(5);
  const FactorSet a = cyclic_carry_cocycle(c4, f5, 3);
  CHECK(twisted_unit(a, 0).is_identity());
  for (uint32_t x = 0; x < 4; ++x)
    for (uint32_t y = 0; y < 4; ++y)
      CHECK(twisted_unit(a, x) * twisted_unit(a, y) ==
            twisted_unit(a, c4->mul(x, y)).scaled(a.at(x, y)));
}

TEST_CASE("projective representations and scalar twists") {
  const auto s3 = symmetric_group(3);
  const PrimeField f5(5);
  const Representation reg = regular_rep(s3, f5);
  const ProjectiveRep plain = ordinary_as_projective(reg);
  CHECK(plain.alpha == trivial_factor_set(s3, f5));

  std::mt19937_64 rng(77);
  const auto mu = random_mu(s3, f5, rng);
  const ProjectiveRep twisted = scalar_twist(plain, mu);
  CHECK(twisted.alpha == coboundary_of(s3, f5, mu));

  std::vector<uint32_t> muinv(mu.size());
  for (size_t i = 0; i < mu.size(); ++i) muinv[i] = f5.inv(mu[i]);
  const ProjectiveRep back = scalar_twist(twisted, muinv);
  for (uint32_t g = 0; g < 6; ++g) CHECK(back.images[g] == plain.images[g]);

  CHECK_NOTHROW(projective_to_ordinary(plain));
  CHECK_THROWS_AS(projective_to_ordinary(twisted), std::invalid_argument);

  // tampering with one image breaks proportionality
  std::vector<MatrixF> broken = plain.images;
  broken[3].set(0, 0, 1);
  CHECK_THROWS_AS(make_projective(s3, f5, broken), std::invalid_argument);
}

TEST_CASE("modules over the twisted algebra lift to projective representations") {
  std::mt19937_64 rng(23);
  const auto c4 = cyclic_group(4);
  const PrimeField f5(5);
  const FactorSet a = cyclic_carry_cocycle(c4, f5, 4);

  // lifting the left regular module recovers the units themselves
  const ProjectiveRep lreg = lift_to_projective(a, twisted_left_regular(a));
  CHECK(lreg.alpha == a);
  for (uint32_t g = 0; g < 4; ++g) CHECK(lreg.images[g] == twisted_unit(a, g));

  for (const auto& m : twisted_irreducibles(a, rng)) {
    const ProjectiveRep x = lift_to_projective(a, m);
    CHECK(x.alpha == a);
    CHECK(x.dim == m.dim);
    for (const auto& img : x.images) CHECK(inverse(img).has_value());
  }
}

TEST_CASE("coset constancy, quotients and inflation") {
  const auto c4 = cyclic_group(4);
  const auto c2 = cyclic_group(2);
  const PrimeField f3(3);
  const Subgroup n = subgroup_generated(c4, {2});

  const FactorSet beta = cyclic_carry_cocycle(c2, f3, 2);
  const Quotient q = quotient_group(c4, n);
  const FactorSet inflated = inflate_factor_set(beta, c4, q);
  CHECK(is_coset_constant(inflated, n));
  const QuotientFactorSet back = quotient_factor_set(inflated, n);
  CHECK(back.beta.values() == beta.values());

  const FactorSet carry = cyclic_carry_cocycle(c4, f3, 2);
  CHECK_FALSE(is_coset_constant(carry, n));
  CHECK_THROWS_AS(quotient_factor_set(carry, n), std::invalid_argument);
}

TEST_CASE("cocycle text round trip and parse failures") {
  const auto c4 = cyclic_group(4);
  const PrimeField f5(5);
  const FactorSet a = cyclic_carry_cocycle(c4, f5, 3);
  const std::string text = cocycle_to_text(a, "C4");
  const FactorSet back = cocycle_from_text(text, c4);
  CHECK(back == a);
  CHECK(cocycle_to_text(back, "C4") == text);

  CHECK_THROWS_AS(cocycle_from_text("factor C4 mod 5\n", c4), ParseError);
  CHECK_THROWS_AS(cocycle_from_text("cocycle C4 mod 9\n", c4), ParseError);
  const std::string rows1 = "1 1 1 1\n1 1 1 1\n1 1 1 1\n1 1 1 1\n";
  CHECK_NOTHROW(cocycle_from_text("cocycle C4 mod 5\n" + rows1, c4));
  CHECK_THROWS_AS(cocycle_from_text("cocycle C4 mod 5\n1 1 0 1\n" + rows1, c4), ParseError);
  CHECK_THROWS_AS(cocycle_from_text("cocycle C4 mod 5\n1 1 1\n" + rows1, c4), ParseError);
  CHECK_THROWS_AS(cocycle_from_text("cocycle C4 mod 5\n" + rows1 + "1 1 1 1\n", c4), ParseError);
  // a non-cocycle table is rejected after parsing
  std::string bad = "cocycle C4 mod 5\n1 1 1 1\n1 3 1 1\n1 1 1 1\n1 1 1 1\n";
  CHECK_THROWS_AS(cocycle_from_text(bad, c4), ParseError);
}
