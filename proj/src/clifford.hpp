#pragma once

#include <map>
#include <optional>

#include "cocycle.hpp"

namespace cforge {

// Inertia group of an irreducible module W of a normal subgroup N: the
// elements g whose conjugate module W^g is isomorphic to W. Membership is
// constant on cosets of N (W^{tx} ~ W^t via the image of txt^{-1}), so it is
// decided on coset representatives only; one intertwiner per member coset is
// kept as the witness.
struct InertiaResult {
  Subgroup t;
  std::map<uint32_t, MatrixF> intertwiners;  // member coset rep -> iso W -> W^rep
  std::vector<uint32_t> refuted;             // coset reps outside t
};
InertiaResult inertia_group(const Representation& w, const Subgroup& n,
                            std::mt19937_64& rng);

// whether W occurs among the composition factors of the restriction of V to N
bool lies_over(const Representation& v, const Representation& w, const Subgroup& n,
               std::mt19937_64& rng);

// One representative per isomorphism class of irreducible modules, obtained
// from the composition factors of the regular module (which meets every class
// in any characteristic), sorted by dimension.
std::vector<Representation> enumerate_irreducibles(const GroupPtr& g, PrimeField f,
                                                   std::mt19937_64& rng);

// An invariant subspace of V spanning an isotypic piece of its restriction,
// carried as a module over a subgroup containing the stabilizer.
struct IsotypicPart {
  Representation factor;  // the irreducible class
  MatrixF component;      // column basis of its homogeneous component
  uint32_t multiplicity = 0;
};

// Restriction structure of an irreducible V over a normal subgroup: the
// restriction is semisimple, the group permutes the homogeneous components
// transitively, the stabilizer of one equals the inertia group of its class,
// and V is recovered by inducing that component from the stabilizer. The
// recovery witness is the explicit change of basis sending the induced basis
// (coset i, component vector j) to rho_V(t_i) b_j.
struct Stage1Report {
  bool semisimple = false;
  std::vector<IsotypicPart> parts;
  bool transitive = false;
  bool stabilizer_is_inertia = false;
  Subgroup t;
  Representation s;  // parts[0].component as a module over t
  bool induced_iso = false;
  MatrixF iso;
  bool all() const { return semisimple && transitive && stabilizer_is_inertia && induced_iso; }
};
Stage1Report verify_stage1(const Representation& v, const Subgroup& n, std::mt19937_64& rng);

// Inducing an irreducible of the full inertia group that lies over W yields an
// irreducible module of the parent group.
struct Stage2Report {
  bool preconditions = false;  // t is the inertia group; s irreducible over w
  bool induced_irreducible = false;
  bool ok() const { return preconditions && induced_irreducible; }
};
Stage2Report verify_stage2(const Representation& s, const Subgroup& t,
                           const Representation& w, const Subgroup& n, std::mt19937_64& rng);

// Induction and the homogeneous-component map between irreducibles of the
// inertia group lying over W and irreducibles of the parent lying over W,
// verified to be mutually inverse bijections on isomorphism classes.
struct CorrespondenceReport {
  Subgroup t;
  std::vector<Representation> over_t;
  std::vector<Representation> over_g;
  std::vector<uint32_t> forward;   // over_t index -> over_g index, by induction
  std::vector<uint32_t> backward;  // over_g index -> over_t index, by component
  bool round_trip_ok = false;
};
CorrespondenceReport verify_correspondence(const Representation& w, const Subgroup& n,
                                           std::mt19937_64& rng);

// Every intertwiner of U1 (x) W -> U2 (x) W, where the algebra acts through W
// alone and End(W) is scalar, factors as S (x) 1. Extracts S and verifies the
// Kronecker reconstruction entrywise; throws if t is not an intertwiner or the
// factorization fails.
MatrixF factor_intertwiner(const MatrixF& t, uint32_t dim_u1, uint32_t dim_u2,
                           const AlgebraModule& w);

// For invariant W with scalar endomorphisms: a projective extension X of W to
// the whole group, with X(tx) = X(t) W(x) along the minimal transversal, X(t)
// the unique intertwiner W -> W^t normalized to leading entry 1, X(e) = 1.
// The derived factor set is verified to depend only on the cosets of N.
ProjectiveRep extend_to_projective(const Representation& w, const Subgroup& n,
                                   std::mt19937_64& rng);

// An ordinary representation of the parent group whose restriction to N is
// exactly W, when one exists: X rescaled by a trivializer of its factor set
// that is 1 on N.
std::optional<Representation> extend_ordinary(const Representation& w, const Subgroup& n,
                                              std::mt19937_64& rng);

// Module of the twisted algebra of the quotient, read back as a projective
// representation of g that is trivial on the kernel of the projection; its
// factor set is the inflation of delta.
ProjectiveRep lift_through_quotient(const FactorSet& delta, const Quotient& q,
                                    const GroupPtr& g, const AlgebraModule& u);

// g -> Y(g) (x) X(g); requires the factor sets to cancel, and returns a fully
// validated ordinary representation.
Representation glue(const ProjectiveRep& y, const ProjectiveRep& x);

// invertible f with f Y1(g) = Y2(g) f on the nose (no scalar slack)
std::optional<MatrixF> strict_equivalence(const ProjectiveRep& y1, const ProjectiveRep& y2,
                                          std::mt19937_64& rng);

// The classification pipeline over an invariant scalar-End irreducible W:
// extend W projectively, push the factor set to the quotient, invert it, chop
// the twisted algebra of the quotient, lift each simple back and glue it onto
// the extension. Checks that every glued module is irreducible, restricts to a
// W-homogeneous module of the predicted multiplicity, and that the list is an
// irredundant classification of the irreducibles lying over W.
struct GlueReport {
  ProjectiveRep x;
  QuotientFactorSet gamma;
  FactorSet delta;
  std::vector<AlgebraModule> twisted;
  std::vector<Representation> glued;
  bool all_irreducible = false;
  bool restrictions_homogeneous = false;
  bool injective = false;
  bool exhaustive = false;
  bool ok() const {
    return all_irreducible && restrictions_homogeneous && injective && exhaustive;
  }
};
GlueReport verify_glue(const Representation& w, const Subgroup& n, std::mt19937_64& rng);

// u composed with the quotient projection, as a representation of g
Representation inflate_rep(const Representation& u, const Quotient& q, const GroupPtr& g);

// Given an ordinary extension s_ext of W: tensoring s_ext with the inflations
// of the quotient's irreducibles classifies the irreducibles lying over W.
struct GallagherReport {
  std::vector<Representation> tensors;
  bool each_irreducible = false;
  bool injective = false;
  bool exhaustive = false;
  bool count_matches = false;
  bool ok() const { return each_irreducible && injective && exhaustive && count_matches; }
};
GallagherReport verify_gallagher(const Representation& w, const Representation& s_ext,
                                 const Subgroup& n, std::mt19937_64& rng);

// Outer tensor products V1 (x) V2 with End(V2) scalar: each irreducible over
// the direct product, pairwise distinct, and covering every irreducible of the
// product whose factor over the second group has scalar endomorphisms.
struct ProductReport {
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  std::vector<Representation> outer;
  uint32_t product_class_count = 0;
  std::vector<uint32_t> product_dims;  // sorted
  std::vector<uint32_t> outer_dims;    // sorted
  bool each_irreducible = false;
  bool pairwise_distinct = false;
  bool covers_scalar_socle = false;
  bool ok() const { return each_irreducible && pairwise_distinct && covers_scalar_socle; }
};
ProductReport verify_direct_product(const GroupPtr& g1, const GroupPtr& g2, PrimeField f,
                                    std::mt19937_64& rng);

// Reciprocity between Hom_H(W, V|H) and Hom_G(ind W, V): f maps to the block
// matrix [V(t_0) f | V(t_1) f | ...] over the coset transversal.
MatrixF frobenius_hat(const MatrixF& f_map, const Representation& w, const Subgroup& h,
                      const Representation& v);

struct FrobeniusReport {
  uint32_t hom_res_dim = 0;
  uint32_t hom_ind_dim = 0;
  bool dims_equal = false;
  bool round_trip = false;      // hat inverts restriction to the identity block
  bool central_linear = false;  // hat commutes with Z(G) cap H post-composition
  bool ok() const { return dims_equal && round_trip && central_linear; }
};
FrobeniusReport verify_frobenius(const Representation& w, const Subgroup& h,
                                 const Representation& v);

// whether n has a complement in g
bool is_split_extension(const GroupPtr& g, const Subgroup& n);

// Three sufficient conditions for the inertia group of W to collapse to N,
// evaluated when ind W is irreducible: (a) endomorphisms of W span the
// endomorphisms of ind W through the reciprocity map; (e) W extends to its
// inertia group; (f) W has dimension 1 and the inertia group splits over N.
// Conditions that need an algebraically closed field are reported untestable.
enum class CondStatus { Holds, Fails, NotEvaluated };
struct CollapseReport {
  bool hypothesis_ok = false;  // ind W irreducible
  CondStatus cond_a = CondStatus::NotEvaluated;
  CondStatus cond_e = CondStatus::NotEvaluated;
  CondStatus cond_f = CondStatus::NotEvaluated;
  bool t_equals_n = false;
  std::string untestable;
  bool consistent() const {
    return (cond_a != CondStatus::Holds || t_equals_n) &&
           (cond_e != CondStatus::Holds || t_equals_n) &&
           (cond_f != CondStatus::Holds || t_equals_n);
  }
};
CollapseReport inertia_collapse_conditions(const Representation& w, const Subgroup& n,
                                           std::mt19937_64& rng);

}  // namespace cforge
