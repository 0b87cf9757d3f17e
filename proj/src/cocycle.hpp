#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meataxe.hpp"

namespace cforge {

// Normalized 2-cocycle with values in F_p^*: a(e,.) = a(.,e) = 1 and
// a(x,y) a(xy,z) = a(y,z) a(x,yz). Validated on construction.
class FactorSet {
 public:
  FactorSet(GroupPtr group, PrimeField field, std::vector<uint32_t> vals);

  const GroupPtr& group() const { return group_; }
  PrimeField field() const { return field_; }
  uint32_t at(uint32_t a, uint32_t b) const { return vals_[size_t(a) * group_->order() + b]; }
  const std::vector<uint32_t>& values() const { return vals_; }

  bool operator==(const FactorSet& o) const {
    return field_.modulus() == o.field_.modulus() && vals_ == o.vals_ &&
           same_group_table(*group_, *o.group_);
  }

 private:
  GroupPtr group_;
  PrimeField field_;
  std::vector<uint32_t> vals_;
};

FactorSet trivial_factor_set(const GroupPtr& g, PrimeField f);
FactorSet factor_product(const FactorSet& a, const FactorSet& b);
FactorSet factor_inverse(const FactorSet& a);

// the coboundary (d mu)(x,y) = mu(x) mu(y) / mu(xy); mu(e) must be 1
FactorSet coboundary_of(const GroupPtr& g, PrimeField f, const std::vector<uint32_t>& mu);

// mu with d(mu) = a and mu = 1 on `fixed_one`, if one exists. mu is determined
// by its values on the generators, so the search sweeps those and verifies the
// candidate on every pair; the sweep is capped at 2^20 assignments.
std::optional<std::vector<uint32_t>> trivializer(const FactorSet& a,
                                                 const std::vector<uint32_t>& fixed_one = {});
bool is_coboundary(const FactorSet& a);
bool strictly_equivalent(const FactorSet& a, const FactorSet& b);

// does a(x, y) depend on (xN, yN) only
bool is_coset_constant(const FactorSet& a, const Subgroup& n);

struct QuotientFactorSet {
  Quotient quotient;
  FactorSet beta;
};
QuotientFactorSet quotient_factor_set(const FactorSet& a, const Subgroup& n);
FactorSet inflate_factor_set(const FactorSet& beta, const GroupPtr& g, const Quotient& q);

// carry cocycle on C_n with unit c: a(x^i, x^j) = c when i + j wraps past n
FactorSet cyclic_carry_cocycle(const GroupPtr& cyclic, PrimeField f, uint32_t c);

// Map X with X(x) X(y) = a(x,y) X(xy) and X(e) = I, images invertible.
struct ProjectiveRep {
  GroupPtr group;
  PrimeField field;
  uint32_t dim = 0;
  std::vector<MatrixF> images;
  FactorSet alpha;
};

// derives the factor set from the images and validates every pair
ProjectiveRep make_projective(const GroupPtr& g, PrimeField f, std::vector<MatrixF> images);
ProjectiveRep ordinary_as_projective(const Representation& v);
Representation projective_to_ordinary(const ProjectiveRep& x);  // needs trivial factor set
ProjectiveRep scalar_twist(const ProjectiveRep& x, const std::vector<uint32_t>& mu);

// left regular module of the twisted group algebra F^a[G]: the unit u_s acts
// by u_s e_b = a(s,b) e_{sb}; generators follow the group's generator list
AlgebraModule twisted_left_regular(const FactorSet& a);
MatrixF twisted_unit(const FactorSet& a, uint32_t g);

// irreducible modules of F^a[G], one per isomorphism class
std::vector<AlgebraModule> twisted_irreducibles(const FactorSet& a, std::mt19937_64& rng);

// turn a module over the twisted algebra into the projective rep it carries
ProjectiveRep lift_to_projective(const FactorSet& a, const AlgebraModule& m);

std::string cocycle_to_text(const FactorSet& a, const std::string& group_ref);
FactorSet cocycle_from_text(const std::string& text, const GroupPtr& g);

}  // namespace cforge
