#pragma once

#include <string>
#include <vector>

#include "group.hpp"
#include "matrix.hpp"

namespace cforge {

// Square sparse matrix in CSR form. Image tables of induced, permutation and
// tensor modules are (block-)monomial, so suites over full subgroup grids
// construct and verify them without materializing dense n x n images.
struct SparseMat {
  uint32_t n = 0;
  std::vector<uint32_t> row_start;  // size n+1
  std::vector<uint32_t> col;
  std::vector<uint32_t> val;        // nonzero, canonical in [1, p)

  uint32_t nnz() const { return uint32_t(col.size()); }
  bool operator==(const SparseMat& o) const = default;
};

struct SparseBuilder {
  explicit SparseBuilder(uint32_t n) : n_(n), rows_(n) {}
  void add(uint32_t r, uint32_t c, uint32_t v) {
    if (v) rows_[r].emplace_back(c, v);
  }
  SparseMat build();

 private:
  uint32_t n_;
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> rows_;
};

SparseMat sparse_identity(uint32_t n);
SparseMat sparse_from_dense(const MatrixF& m);
MatrixF sparse_to_dense(PrimeField f, const SparseMat& m);
SparseMat sparse_mul(PrimeField f, const SparseMat& a, const SparseMat& b);
SparseMat sparse_kron(PrimeField f, const SparseMat& a, const SparseMat& b);
std::vector<uint32_t> sparse_apply(PrimeField f, const SparseMat& m,
                                   const std::vector<uint32_t>& v);

// Representation of a finite group: an invertible image for every element.
// The multiplicative law is enforced at construction; functorial constructors
// verify the factored index identities their structure reduces the law to,
// while raw generator input gets the full |G|^2 dense check.
class Representation {
 public:
  Representation(GroupPtr group, PrimeField field, uint32_t dim,
                 std::vector<SparseMat> images, std::vector<std::string> basis_labels,
                 bool full_check);

  const GroupPtr& group() const { return group_; }
  PrimeField field() const { return field_; }
  uint32_t dim() const { return dim_; }
  const SparseMat& image_sparse(uint32_t g) const { return images_[g]; }
  MatrixF image(uint32_t g) const { return sparse_to_dense(field_, images_[g]); }
  std::vector<MatrixF> generator_images() const;
  const std::vector<std::string>& basis_labels() const { return labels_; }

  const std::string& tag() const { return tag_; }
  void set_tag(std::string t) { tag_ = std::move(t); }

  void check_homomorphism_full() const;

 private:
  GroupPtr group_;
  PrimeField field_;
  uint32_t dim_;
  std::vector<SparseMat> images_;
  std::vector<std::string> labels_;
  std::string tag_;
};

bool same_group_table(const GroupTable& a, const GroupTable& b);

Representation rep_from_generators(const GroupPtr& g, PrimeField f,
                                   const std::vector<MatrixF>& gen_images);
Representation trivial_rep(const GroupPtr& g, PrimeField f);
Representation regular_rep(const GroupPtr& g, PrimeField f);
Representation permutation_module(const Subgroup& h, PrimeField f);

// restriction to a subgroup of the representation's group
Representation restrict_rep(const Representation& v, const Subgroup& h);

// induction from h to its parent; basis (coset i, module j) -> i*dim + j over
// the minimal-index transversal, labels record the coset and module index
Representation induce(const Representation& w, const Subgroup& h);

Representation tensor(const Representation& a, const Representation& b);
Representation direct_sum(const std::vector<Representation>& parts);

// W^g over the same group: x acts by W(g x g^{-1}); g must normalize
Representation conjugate_module(const Representation& w, const Subgroup& n, uint32_t g);

// module over g h g^{-1} acting via y -> W(g^{-1} y g), with the subgroup it lives on
std::pair<Subgroup, Representation> transport_rep(const Representation& w, const Subgroup& h,
                                                  uint32_t g);

// outer tensor over direct_product(g1, g2) with index (a,b) -> a*|G2|+b
Representation outer_tensor(const GroupPtr& product, const Representation& v1,
                            const Representation& v2);

std::string rep_to_text(const Representation& v, const std::string& group_ref);
Representation rep_from_text(const std::string& text, const GroupPtr& g);

}  // namespace cforge
