#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "group.hpp"
#include "matrix.hpp"
#include "rep.hpp"

namespace cforge {

// One summand of a decomposition witness: the double coset it came from, the
// pair choice that produced it, and a short description of its construction.
struct BlockInfo {
  uint32_t coset_rep;
  uint32_t x, y;
  uint32_t dim;
  std::string construction;
};

// Explicit isomorphism certificate. The columns of iso are the images of the
// rhs basis vectors in lhs coordinates; it intertwines the two actions over
// every element of the (shared) group, not just generators.
struct MackeyWitness {
  Representation lhs;
  Representation rhs;
  MatrixF iso;
  std::vector<BlockInfo> block_map;
};

// invertibility plus the intertwining law over the whole group
bool witness_checks(const MackeyWitness& w);
// "block <rep> dim <n> from <construction>" per summand
std::string block_lines(const MackeyWitness& w);

// The summand of ind V1 (x) ind V2 attached to the double coset H1 x^{-1}y H2,
// for one admissible pair choice (x, y): the module induced from
// xH1x^{-1} n yH2y^{-1}, together with its embedding into the tensor product.
// Embeddings for two choices over the same double coset share their column
// span, which is what pair_change_iso exploits.
struct TensorBlock {
  Subgroup stab;         // xH1x^{-1} n yH2y^{-1} inside the parent group
  Representation inner;  // V1^x (x) V2^y over the stabilizer's own table
  Representation block;  // the stabilizer module induced up to the parent
  MatrixF embedding;
};
TensorBlock tensor_block(const Representation& v1, const Subgroup& h1, const Representation& v2,
                         const Subgroup& h2, uint32_t x, uint32_t y);

// invertible intertwiner b.block -> a.block obtained from the shared span
MatrixF pair_change_iso(const TensorBlock& a, const TensorBlock& b);

// ind V1 (x) ind V2 decomposed into one summand per (H1,H2)-double coset,
// with the canonical pair choice (identity, coset rep)
MackeyWitness mackey_tensor(const Representation& v1, const Subgroup& h1,
                            const Representation& v2, const Subgroup& h2);

// ind_H V restricted to K, decomposed over the (K,H)-double cosets; both
// sides live over K's own table and the witness intertwines over all of K
MackeyWitness mackey_restriction(const Representation& v, const Subgroup& h, const Subgroup& k);

// (ind_H W) (x) V rebuilt as the single induction ind_H(W (x) res_H V)
MackeyWitness resext_iso(const Representation& w, const Subgroup& h, const Representation& v);

// permutation module on G/H1 tensored with ind_{H2} V2, rebuilt as
// ind_{H1} res_{H1} ind_{H2} V2; the witness is the composite of the tensor
// decomposition, transitivity of induction and the restriction decomposition
MackeyWitness perm_tensor_corollary(const Subgroup& h1, const Representation& v2,
                                    const Subgroup& h2);

}  // namespace cforge
