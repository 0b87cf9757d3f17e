#pragma once

#include "group.hpp"

namespace cforge {

// Deterministic list of test groups up to max_order: every cyclic group,
// every abelian group (one table per isomorphism class, invariant factor
// form), dihedral groups from D4, Q8, S3, A4, S4. Sorted by (order, name).
std::vector<GroupPtr> catalog(uint32_t max_order);
GroupPtr catalog_group(const std::string& name, uint32_t max_order = GroupTable::kMaxOrder);

GroupPtr dihedral_group(uint32_t n);   // order 2n
GroupPtr quaternion_group();           // Q8
GroupPtr symmetric_group(uint32_t n);  // n <= 4 at the order cap
GroupPtr alternating_group_4();

}  // namespace cforge
