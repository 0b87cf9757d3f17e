#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "catalog.hpp"
#include "clifford.hpp"
#include "mackey.hpp"
#include "meataxe.hpp"

using namespace cforge;

namespace {

uint32_t element_of_order(const GroupPtr& g, uint32_t k) {
  for (uint32_t a = 0; a < g->order(); ++a)
    if (g->element_order(a) == k) return a;
  throw std::logic_error("no element of the requested order");
}

// character of a cyclic group sending a fixed generator to `value`; listed
// generators may be redundant, so images follow their discrete logs
Representation character(const Subgroup& h, PrimeField f, uint32_t value) {
  const auto g = h.group();
  uint32_t c = 0;
  for (uint32_t a = 0; a < g->order(); ++a)
    if (g->element_order(a) == g->order()) c = a;
  std::vector<uint32_t> exponent(g->order(), 0);
  uint32_t cur = GroupTable::identity();
  for (uint32_t k = 0; k < g->order(); ++k) {
    exponent[cur] = k;
    cur = g->mul(cur, c);
  }
  std::vector<MatrixF> images;
  for (uint32_t s : g->generators()) {
    MatrixF m(f, 1, 1);
    m.set(0, 0, f.pow(value, exponent[s]));
    images.push_back(m);
  }
  return rep_from_generators(g, f, images);
}

std::vector<uint32_t> block_dims(const MackeyWitness& w) {
  std::vector<uint32_t> out;
  for (const auto& b : w.block_map) out.push_back(b.dim);
  std::sort(out.begin(), out.end());
  return out;
}

const Representation& two_dimensional(const std::vector<Representation>& irr) {
  for (const auto& v : irr)
    if (v.dim() == 2) return v;
  throw std::logic_error("no two-dimensional irreducible");
}

}  // namespace

TEST_CASE("tensor decomposition reproduces the coset ledger") {
  std::mt19937_64 rng(11);
  const auto s3 = symmetric_group(3);
  const PrimeField f5(5);
  const Subgroup h = subgroup_generated(s3, {element_of_order(s3, 2)});
  const Representation triv = trivial_rep(h.group(), f5);

  const MackeyWitness w = mackey_tensor(triv, h, triv, h);
  CHECK(w.lhs.dim() == 9);
  CHECK(block_dims(w) == std::vector<uint32_t>{3, 6});
  CHECK(witness_checks(w));

  // the six-dimensional summand has trivial stabilizer: it is the regular module
  const DoubleCosets dc = double_cosets(h, h);
  REQUIRE(dc.reps.size() == 2);
  const TensorBlock big = tensor_block(triv, h, triv, h, GroupTable::identity(), dc.reps[1]);
  CHECK(big.stab.order() == 1);
  CHECK(big.block.dim() == 6);
  CHECK(find_isomorphism(module_of(big.block), module_of(regular_rep(s3, f5)), rng).has_value());

  const std::string lines = block_lines(w);
  CHECK(lines.find("block g0 dim 3 from ind(V1*V2^g0)") != std::string::npos);
  CHECK(lines.find(" dim 6 from ") != std::string::npos);
}

TEST_CASE("degenerate subgroup choices pin the conventions") {
  std::mt19937_64 rng(12);
  const auto s3 = symmetric_group(3);
  const PrimeField f7(7);

  // both subgroups full: a single summand, the plain tensor product
  const Subgroup full = full_subgroup(s3);
  const auto irr = enumerate_irreducibles(s3, f7, rng);
  const Representation& two = two_dimensional(irr);
  const MackeyWitness w1 = mackey_tensor(two, full, two, full);
  CHECK(w1.block_map.size() == 1);
  CHECK(w1.lhs.dim() == 4);
  CHECK(witness_checks(w1));

  // trivial second subgroup: one summand per right coset of the first, each
  // induced from the trivial stabilizer and hence of full group size
  const Subgroup h = subgroup_generated(s3, {element_of_order(s3, 2)});
  const Subgroup e = trivial_subgroup(s3);
  const Representation trivH = trivial_rep(h.group(), f7);
  const Representation trivE = trivial_rep(e.group(), f7);
  const MackeyWitness w2 = mackey_tensor(trivH, h, trivE, e);
  CHECK(w2.lhs.dim() == 18);
  CHECK(w2.block_map.size() == 3);
  for (const auto& b : w2.block_map) CHECK(b.dim == 6);

  // mirrored: trivial first subgroup
  const MackeyWitness w3 = mackey_tensor(trivE, e, trivH, h);
  CHECK(w3.lhs.dim() == 18);
  CHECK(w3.block_map.size() == 3);
}

TEST_CASE("restriction decomposition over the alternating subgroup") {
  std::mt19937_64 rng(13);
  const auto s3 = symmetric_group(3);
  const PrimeField f7(7);
  const Subgroup h = subgroup_generated(s3, {element_of_order(s3, 2)});
  const Subgroup a3 = subgroup_generated(s3, {element_of_order(s3, 3)});
  const Representation triv = trivial_rep(h.group(), f7);

  // one double coset; the restriction is the regular module of the subgroup
  const MackeyWitness w = mackey_restriction(triv, h, a3);
  CHECK(w.block_map.size() == 1);
  CHECK(w.rhs.dim() == 3);
  CHECK(witness_checks(w));
  CHECK(find_isomorphism(module_of(w.rhs), module_of(regular_rep(a3.group(), f7)), rng)
            .has_value());

  // restricting to the whole group keeps a single block
  const MackeyWitness wf = mackey_restriction(triv, h, full_subgroup(s3));
  CHECK(wf.block_map.size() == 1);
  CHECK(wf.rhs.dim() == 3);

  // restricting to the trivial subgroup splits one block per coset
  const MackeyWitness we = mackey_restriction(triv, h, trivial_subgroup(s3));
  CHECK(we.block_map.size() == 3);
  for (const auto& b : we.block_map) CHECK(b.dim == 1);
}

TEST_CASE("induced tensor identity") {
  std::mt19937_64 rng(17);
  const auto s3 = symmetric_group(3);
  const PrimeField f7(7);
  const Subgroup a3 = subgroup_generated(s3, {element_of_order(s3, 3)});
  const Representation w = character(a3, f7, 2);
  const auto irr = enumerate_irreducibles(s3, f7, rng);
  const Representation& two = two_dimensional(irr);

  const MackeyWitness m = resext_iso(w, a3, two);
  CHECK(m.lhs.dim() == 4);
  CHECK(m.rhs.dim() == 4);
  CHECK(witness_checks(m));

  // trivial outer factor: a reshuffle of the induced module itself
  const MackeyWitness mt = resext_iso(w, a3, trivial_rep(s3, f7));
  CHECK(mt.lhs.dim() == 2);
  CHECK(witness_checks(mt));

  // full subgroup: the ordinary tensor identity
  const MackeyWitness mf = resext_iso(two, full_subgroup(s3), two);
  CHECK(mf.lhs.dim() == 4);
  CHECK(witness_checks(mf));
}

TEST_CASE("permutation tensor identity assembled through its proof chain") {
  std::mt19937_64 rng(19);
  const auto s3 = symmetric_group(3);
  const PrimeField f7(7);
  const Subgroup h1 = subgroup_generated(s3, {element_of_order(s3, 2)});
  const Subgroup a3 = subgroup_generated(s3, {element_of_order(s3, 3)});
  const Representation chi = character(a3, f7, 2);

  const MackeyWitness w = perm_tensor_corollary(h1, chi, a3);
  CHECK(w.lhs.dim() == 6);
  CHECK(w.rhs.dim() == 6);
  CHECK(w.block_map.size() == 1);
  CHECK(witness_checks(w));

  // full first subgroup: the permutation factor is trivial
  const MackeyWitness wf = perm_tensor_corollary(full_subgroup(s3), chi, a3);
  CHECK(wf.lhs.dim() == 2);
  CHECK(witness_checks(wf));

  // full second subgroup
  const auto irr = enumerate_irreducibles(s3, f7, rng);
  const Representation& two = two_dimensional(irr);
  const MackeyWitness wg = perm_tensor_corollary(h1, two, full_subgroup(s3));
  CHECK(wg.lhs.dim() == 6);
  CHECK(witness_checks(wg));
}

TEST_CASE("any admissible pair choice produces the same summand") {
  std::mt19937_64 rng(23);
  const auto s3 = symmetric_group(3);
  const PrimeField f5(5);
  std::vector<uint32_t> refl;
  for (uint32_t a = 1; a < s3->order(); ++a)
    if (s3->element_order(a) == 2) refl.push_back(a);
  REQUIRE(refl.size() == 3);
  const Subgroup h1 = subgroup_generated(s3, {refl[0]});
  const Subgroup h2 = subgroup_generated(s3, {refl[1]});
  const Representation c1 = character(h1, f5, 4);
  const Representation c2 = character(h2, f5, 4);

  const DoubleCosets dc = double_cosets(h1, h2);
  std::uniform_int_distribution<uint32_t> pick(0, s3->order() - 1);
  for (uint32_t ci = 0; ci < uint32_t(dc.reps.size()); ++ci) {
    const TensorBlock canon =
        tensor_block(c1, h1, c2, h2, GroupTable::identity(), dc.reps[ci]);
    std::vector<TensorBlock> alts;
    while (alts.size() < 10) {
      const uint32_t x = pick(rng), y = pick(rng);
      if (dc.class_of[s3->mul(s3->inv(x), y)] != ci) continue;
      alts.push_back(tensor_block(c1, h1, c2, h2, x, y));
    }
    for (const auto& alt : alts) {
      CHECK(alt.block.dim() == canon.block.dim());
      const MatrixF z = pair_change_iso(canon, alt);
      CHECK(rank(z) == z.cols());
    }
    // two non-canonical choices compare directly as well
    const MatrixF z12 = pair_change_iso(alts[0], alts[1]);
    CHECK(z12.rows() == alts[0].block.dim());
  }
}

TEST_CASE("dimension ledgers across a small grid") {
  const PrimeField f5(5);
  for (const auto& g : {cyclic_group(6), dihedral_group(4), quaternion_group()}) {
    const auto subs = all_subgroups(g);
    for (const auto& h1 : subs)
      for (const auto& h2 : subs) {
        const Representation v1 = regular_rep(h1.group(), f5);
        const Representation v2 = trivial_rep(h2.group(), f5);

        const MackeyWitness w = mackey_tensor(v1, h1, v2, h2);
        CHECK(w.lhs.dim() == g->order() * (g->order() / h2.order()));
        for (const auto& b : w.block_map) {
          const Subgroup stab = intersect_subgroups(conjugate_subgroup(h1, b.x),
                                                    conjugate_subgroup(h2, b.y));
          CHECK(b.dim == (g->order() / stab.order()) * v1.dim() * v2.dim());
        }

        const MackeyWitness r = mackey_restriction(v1, h1, h2);
        CHECK(r.lhs.dim() == (g->order() / h1.order()) * v1.dim());
        for (const auto& b : r.block_map) {
          const Subgroup stab = intersect_subgroups(h2, conjugate_subgroup(h1, b.x));
          CHECK(b.dim == (h2.order() / stab.order()) * v1.dim());
        }
      }
  }
}

TEST_CASE("random instances verify end to end") {
  std::mt19937_64 rng(31);
  const auto groups = catalog(10);
  const uint32_t primes[] = {3, 5, 7};
  uint32_t ran = 0;
  for (uint32_t trial = 0; trial < 40 && ran < 12; ++trial) {
    const auto& g = groups[rng() % groups.size()];
    const PrimeField f(primes[rng() % 3]);
    const auto subs = all_subgroups(g);
    const Subgroup& h1 = subs[rng() % subs.size()];
    const Subgroup& h2 = subs[rng() % subs.size()];

    auto module_pool = [&](const Subgroup& h) {
      std::vector<Representation> pool;
      pool.push_back(trivial_rep(h.group(), f));
      pool.push_back(regular_rep(h.group(), f));
      for (auto& v : enumerate_irreducibles(h.group(), f, rng)) pool.push_back(std::move(v));
      return pool;
    };
    const auto pool1 = module_pool(h1);
    const auto pool2 = module_pool(h2);
    const Representation& v1 = pool1[rng() % pool1.size()];
    const Representation& v2 = pool2[rng() % pool2.size()];
    const uint32_t lhs_dim =
        (g->order() / h1.order()) * v1.dim() * (g->order() / h2.order()) * v2.dim();
    if (lhs_dim > 100) continue;
    ++ran;

    const MackeyWitness a = mackey_tensor(v1, h1, v2, h2);
    CHECK(witness_checks(a));
    const MackeyWitness b = mackey_restriction(v1, h1, h2);
    CHECK(witness_checks(b));
    const MackeyWitness c = resext_iso(v2, h2, induce(v1, h1));
    CHECK(witness_checks(c));
    const MackeyWitness d = perm_tensor_corollary(h1, v2, h2);
    CHECK(witness_checks(d));
  }
  CHECK(ran >= 8);
}
