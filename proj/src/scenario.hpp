#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "clifford.hpp"
#include "report.hpp"

namespace cforge {

// deterministic generator for a (seed, instance-key) pair; every randomized
// check in a suite draws from its own key so results do not depend on the
// order instances happen to run in
std::mt19937_64 rng_for(uint64_t seed, const std::string& key);

// The crossed-product algebra (K, Gamma, f): K = F_p[t]/(modulus) of degree r,
// Gamma generated by the frob_step-th power of the Frobenius map, and f a
// normalized Gamma-cocycle valued in K^*. Elements of K^* are encoded as
// sum c_i p^i of their coefficient vectors (so 1 encodes the unit); f_vals
// holds f(s_i, s_j) at index i*gamma_order + j. The left regular module of
// the algebra is kept for the division-ring test.
struct CrossedProduct {
  Polynomial modulus;
  uint32_t gamma_order = 1;
  uint32_t frob_step = 0;
  std::vector<uint32_t> f_vals;
  AlgebraModule regular;
};

// One verification instance: a group with a chosen normal subgroup, a module
// of the normal subgroup, and the claims expected of it. Claims are pairs
// (claim-id, expected-value); run_scenario checks each and emits one report
// entry per claim.
struct Scenario {
  std::string id;
  PrimeField field;
  GroupPtr group;
  Subgroup normal_sub;
  Representation module_w;
  std::vector<std::pair<std::string, std::string>> expected;
  std::optional<CrossedProduct> crossed;
};

// claim ids run_scenario understands:
//   invariant            bool: the inertia group of W is the whole group
//   induced-irreducible  bool: induce(W) is irreducible
//   end-degree           int:  End(induce(W)) is a field of this degree
//   extends              bool: the action of the normal subgroup extends
//   split                bool: the normal subgroup has a complement
//   division-iff         "true": induce(W) irreducible iff the crossed
//                        product is a division ring (crossed scenarios only)
//   end-dims             "record": INFO entry comparing endomorphism-ring
//                        dimensions with the crossed product (crossed only)
const std::vector<std::string>& scenario_claim_ids();

// throws std::invalid_argument on unknown claims, malformed expected values,
// or claims that need crossed-product data the scenario does not carry
void validate_scenario(const Scenario& sc);

// Cyclic group generated by a root x of t^m - a over F_p, with the normal
// subgroup generated by x^m acting on a line through the root's m-th power.
// m > 1 and t^m - a must be irreducible.
Scenario build_radical_example(uint32_t p, uint32_t m, uint32_t a);

// Extension of N = K^* by Gamma with multiplication
// x_s k * x_t l = x_{st} (f(s,t) k^t l), W = K as an N-module. f_table lists
// f(s_i, s_j) row-major in the K^* encoding above; empty means trivial.
Scenario build_crossed_product(uint32_t p, uint32_t r, uint32_t gamma_power,
                               const std::vector<uint32_t>& f_table);

// Line-oriented description: field=<p>, group=perm:<cycles>;<cycles>... or
// group=table:@<file>, normal=<parent indices>, module=@<file>, and one
// claim=<id> <expected> per claim. @-paths resolve against base_dir.
Scenario parse_scenario_text(const std::string& text, const std::string& base_dir,
                             const std::string& id);
Scenario load_scenario_file(const std::string& path);

// one entry per expected claim, in order; ms filled only when timing is set
std::vector<ReportEntry> run_scenario(const Scenario& sc, uint64_t seed, bool timing);

}  // namespace cforge
