#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cforge {

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

// Finite group as a full multiplication table. Element 0 is the identity.
// Tables are validated eagerly (closure, identity, inverses, associativity)
// and orders are capped; everything downstream relies on these invariants.
class GroupTable {
 public:
  static constexpr uint32_t kMaxOrder = 256;

  uint32_t order() const { return n_; }
  uint32_t mul(uint32_t a, uint32_t b) const { return mul_[size_t(a) * n_ + b]; }
  uint32_t inv(uint32_t a) const { return inv_[a]; }
  static uint32_t identity() { return 0; }
  uint32_t conj(uint32_t g, uint32_t x) const { return mul(mul(g, x), inv(g)); }

  const std::vector<uint32_t>& generators() const { return gens_; }
  const std::string& name() const { return name_; }

  uint32_t element_order(uint32_t a) const;
  bool is_abelian() const;
  std::vector<uint32_t> center() const;

  friend GroupPtr group_from_table(const std::vector<std::vector<uint32_t>>& table,
                                   const std::string& name);
  friend GroupPtr group_from_permutations(uint32_t degree,
                                          const std::vector<std::vector<uint32_t>>& gens,
                                          const std::string& name);
  friend GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

 private:
  GroupTable() = default;
  void validate() const;
  void compute_generators();

  uint32_t n_ = 0;
  std::vector<uint32_t> mul_;
  std::vector<uint32_t> inv_;
  std::vector<uint32_t> gens_;
  std::string name_;
};

GroupPtr group_from_table(const std::vector<std::vector<uint32_t>>& table,
                          const std::string& name);
// permutations are images [s(0), ..., s(degree-1)]; the group is the closure
GroupPtr group_from_permutations(uint32_t degree,
                                 const std::vector<std::vector<uint32_t>>& gens,
                                 const std::string& name);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr cyclic_group(uint32_t n);

// Subgroup of a parent group, with its own table over the sorted member list
// (so member 0 is the identity there as well).
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<uint32_t> members);

  const GroupPtr& parent() const { return parent_; }
  const GroupPtr& group() const { return sub_; }  // members as their own group
  const std::vector<uint32_t>& members() const { return members_; }
  uint32_t order() const { return uint32_t(members_.size()); }
  bool contains(uint32_t g) const { return index_of_[g] >= 0; }
  uint32_t to_sub(uint32_t parent_elt) const;
  uint32_t to_parent(uint32_t sub_elt) const { return members_[sub_elt]; }
  bool is_normal() const;
  std::string member_label() const;  // "0.1.4" style, stable id

  bool same_members(const Subgroup& o) const { return members_ == o.members_; }

 private:
  GroupPtr parent_;
  std::vector<uint32_t> members_;
  std::vector<int32_t> index_of_;
  GroupPtr sub_;
};

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<uint32_t>& seeds);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup conjugate_subgroup(const Subgroup& h, uint32_t g);
Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b);
// view B (a subgroup of the common parent, contained in A) as a subgroup of A.group()
Subgroup subgroup_within(const Subgroup& a, const Subgroup& b);
std::vector<Subgroup> all_subgroups(const GroupPtr& g);
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

// minimal-index left coset representatives; reps[0] is the identity
struct Transversal {
  std::vector<uint32_t> reps;
  std::vector<uint32_t> coset_of;  // element -> position in reps
};
Transversal left_transversal(const Subgroup& h);

// minimal-index (H,K)-double coset representatives for H d K
struct DoubleCosets {
  std::vector<uint32_t> reps;
  std::vector<uint32_t> class_of;  // element -> position in reps
};
DoubleCosets double_cosets(const Subgroup& h, const Subgroup& k);

// quotient by a normal subgroup; cosets ordered by minimal representative
struct Quotient {
  GroupPtr group;
  std::vector<uint32_t> proj;     // parent element -> quotient element
  std::vector<uint32_t> section;  // quotient element -> minimal representative
};
Quotient quotient_group(const GroupPtr& g, const Subgroup& n);

GroupPtr parse_group_text(const std::string& text, const std::string& name);
std::string group_to_table_text(const GroupTable& g);

}  // namespace cforge
