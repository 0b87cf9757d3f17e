#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "poly.hpp"
#include "rep.hpp"

namespace cforge {

// Module over the matrix algebra generated by `gens`: the unital subalgebra of
// End(F_p^dim) they span multiplicatively. A group representation yields one
// via its generator images; a twisted group algebra via left multiplications.
struct AlgebraModule {
  PrimeField field;
  uint32_t dim = 0;
  std::vector<MatrixF> gens;
};

AlgebraModule module_of(const Representation& v);
AlgebraModule transposed_module(const AlgebraModule& m);

// thrown when the decision procedures exhaust their budgets; carries a
// diagnosis, and in practice signals an input far outside the supported sizes
struct MeataxeUndecided : std::runtime_error {
  explicit MeataxeUndecided(const std::string& what) : std::runtime_error(what) {}
};

// smallest invariant subspace containing the seed columns; echelonized basis
MatrixF spin(const AlgebraModule& m, const MatrixF& seed_cols);

// basis of the unital subalgebra spanned by all words in the generators
std::vector<MatrixF> enveloping_basis(const AlgebraModule& m, uint32_t max_dim = 4096);

struct ChopResult {
  bool irreducible = false;
  MatrixF submodule;  // nonzero proper invariant subspace when reducible
};

ChopResult chop(const AlgebraModule& m, std::mt19937_64& rng);
bool is_irreducible(const AlgebraModule& m, std::mt19937_64& rng);

// action induced on an invariant subspace and on the quotient by it
struct SubQuotient {
  AlgebraModule sub;
  AlgebraModule quot;
  MatrixF basis;  // invertible [submodule | complement]
};
SubQuotient split_along(const AlgebraModule& m, const MatrixF& submodule_cols);

// factors of a composition series, bottom-up; deterministic for a fixed rng
std::vector<AlgebraModule> composition_factors(const AlgebraModule& m, std::mt19937_64& rng);

// basis of {T : T a_i = b_i T}, the module homomorphisms a -> b
std::vector<MatrixF> hom_basis(const AlgebraModule& a, const AlgebraModule& b);

// for irreducible inputs a nonzero homomorphism is already invertible
bool is_isomorphic_irreducible(const AlgebraModule& a, const AlgebraModule& b);
std::optional<MatrixF> find_isomorphism(const AlgebraModule& a, const AlgebraModule& b,
                                        std::mt19937_64& rng, uint32_t tries = 500);

std::vector<MatrixF> end_ring(const AlgebraModule& m);

// What a spanned matrix algebra is: a field (certified by a primitive element
// whose minimal polynomial has the algebra's dimension), or not one (certified
// by a nonzero singular element), or undecided within the budget.
struct FieldRecognition {
  enum Kind { Field, NotField, Undecided } kind = Undecided;
  uint32_t degree = 0;        // [A : F_p] when a field
  Polynomial min_poly;        // of the primitive element
  MatrixF primitive;          // generates A over F_p
  MatrixF singular_witness;   // nonzero zero divisor when not a field
};
FieldRecognition recognize_field(const std::vector<MatrixF>& algebra_basis, PrimeField f,
                                 std::mt19937_64& rng, uint32_t budget = 5000);

// column span of the images of all homomorphisms simple -> m
MatrixF homogeneous_component(const AlgebraModule& m, const AlgebraModule& simple);

// some monic nontrivial factor, or nullopt when f is irreducible; degree >= 1
std::optional<Polynomial> nontrivial_factor(const Polynomial& f, std::mt19937_64& rng);

MatrixF eval_poly_at(const Polynomial& f, const MatrixF& m);

}  // namespace cforge
