#include "catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace cforge {

GroupPtr dihedral_group(uint32_t n) {
  if (n < 3) throw std::invalid_argument("dihedral_group: n >= 3");
  std::vector<uint32_t> rot(n), refl(n);
  for (uint32_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return group_from_permutations(n, {rot, refl}, "D" + std::to_string(n));
}

GroupPtr quaternion_group() {
  // elements 1,-1,i,-i,j,-j,k,-k as indices 0..7
  auto unit = [](uint32_t a) { return a >> 1; };  // 0:1, 1:i, 2:j, 3:k
  auto mul = [&](uint32_t a, uint32_t b) -> uint32_t {
    const uint32_t sa = a & 1, sb = b & 1;
    const uint32_t ua = unit(a), ub = unit(b);
    // table over units with sign: i*j=k, j*k=i, k*i=j, x*x=-1
    static const int unit_mul[4][4][2] = {
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
        {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
        {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
        {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
    };
    const uint32_t u = uint32_t(unit_mul[ua][ub][0]);
    const uint32_t s = (sa ^ sb) ^ uint32_t(unit_mul[ua][ub][1]);
    return (u << 1) | s;
  };
  std::vector<std::vector<uint32_t>> table(8, std::vector<uint32_t>(8));
  for (uint32_t a = 0; a < 8; ++a)
    for (uint32_t b = 0; b < 8; ++b) table[a][b] = mul(a, b);
  return group_from_table(table, "Q8");
}

GroupPtr symmetric_group(uint32_t n) {
  if (n < 2 || n > 4) throw std::invalid_argument("symmetric_group: n in [2,4]");
  std::vector<uint32_t> swap01(n), cyc(n);
  for (uint32_t i = 0; i < n; ++i) {
    swap01[i] = i;
    cyc[i] = (i + 1) % n;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  return group_from_permutations(n, {swap01, cyc}, "S" + std::to_string(n));
}

GroupPtr alternating_group_4() {
  return group_from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4");
}

namespace {

// invariant factor chains d1 | d2 | ... with product n and at least 2 factors
void abelian_chains(uint32_t n, uint32_t min_factor, std::vector<uint32_t>& acc,
                    std::vector<std::vector<uint32_t>>& out) {
  for (uint32_t m = min_factor; m <= n; ++m) {
    if (n % m) continue;
    if (!acc.empty() && m % acc.back()) continue;
    acc.push_back(m);
    if (m == n) {
      if (acc.size() >= 2) out.push_back(acc);
    } else {
      abelian_chains(n / m, m, acc, out);
    }
    acc.pop_back();
  }
}

}  // namespace

std::vector<GroupPtr> catalog(uint32_t max_order) {
  if (max_order > GroupTable::kMaxOrder)
    throw std::invalid_argument("catalog: max_order exceeds group order cap");
  std::vector<GroupPtr> out;
  for (uint32_t n = 1; n <= max_order; ++n) out.push_back(cyclic_group(n));
  for (uint32_t n = 4; n <= max_order; ++n) {
    std::vector<uint32_t> acc;
    std::vector<std::vector<uint32_t>> chains;
    abelian_chains(n, 2, acc, chains);
    for (const auto& chain : chains) {
      GroupPtr g = cyclic_group(chain[0]);
      for (size_t i = 1; i < chain.size(); ++i) g = direct_product(g, cyclic_group(chain[i]));
      out.push_back(g);
    }
  }
  for (uint32_t n = 4; 2 * n <= max_order; ++n) out.push_back(dihedral_group(n));
  if (max_order >= 8) out.push_back(quaternion_group());
  if (max_order >= 6) out.push_back(symmetric_group(3));
  if (max_order >= 12) out.push_back(alternating_group_4());
  if (max_order >= 24) out.push_back(symmetric_group(4));
  std::sort(out.begin(), out.end(), [](const GroupPtr& a, const GroupPtr& b) {
    if (a->order() != b->order()) return a->order() < b->order();
    return a->name() < b->name();
  });
  return out;
}

GroupPtr catalog_group(const std::string& name, uint32_t max_order) {
  for (const auto& g : catalog(max_order))
    if (g->name() == name) return g;
  throw std::invalid_argument("catalog_group: no group named " + name);
}

}  // namespace cforge
