#include "group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cforge {

namespace {

std::string elt(uint32_t a) { return std::to_string(a); }

}  // namespace

void GroupTable::validate() const {
  if (n_ == 0) throw std::invalid_argument("group: empty table");
  if (n_ > kMaxOrder)
    throw std::invalid_argument("group: order " + std::to_string(n_) +
                                " exceeds cap " + std::to_string(kMaxOrder));
  for (uint32_t a = 0; a < n_; ++a)
    for (uint32_t b = 0; b < n_; ++b)
      if (mul(a, b) >= n_)
        throw std::invalid_argument("group: entry out of range at (" + elt(a) + "," + elt(b) + ")");
  for (uint32_t a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a)
      throw std::invalid_argument("group: element 0 is not an identity, witness " + elt(a));
  }
  for (uint32_t a = 0; a < n_; ++a) {
    bool has_inv = false;
    for (uint32_t b = 0; b < n_; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) has_inv = true;
    if (!has_inv) throw std::invalid_argument("group: no inverse for element " + elt(a));
  }
  for (uint32_t a = 0; a < n_; ++a)
    for (uint32_t b = 0; b < n_; ++b)
      for (uint32_t c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("group: associativity fails at (" + elt(a) + "," + elt(b) +
                                      "," + elt(c) + ")");
}

void GroupTable::compute_generators() {
  // greedy minimal-index generating set
  std::vector<bool> in_span(n_, false);
  in_span[0] = true;
  uint32_t span_size = 1;
  gens_.clear();
  for (uint32_t g = 1; g < n_ && span_size < n_; ++g) {
    if (in_span[g]) continue;
    gens_.push_back(g);
    std::vector<uint32_t> queue;
    for (uint32_t x = 0; x < n_; ++x)
      if (in_span[x]) queue.push_back(x);
    auto add = [&](uint32_t x) {
      if (!in_span[x]) {
        in_span[x] = true;
        ++span_size;
        queue.push_back(x);
      }
    };
    add(g);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      const uint32_t x = queue[qi];
      for (uint32_t s : gens_) {
        add(mul(x, s));
        add(mul(s, x));
      }
    }
  }
}

uint32_t GroupTable::element_order(uint32_t a) const {
  uint32_t x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool GroupTable::is_abelian() const {
  for (uint32_t a = 0; a < n_; ++a)
    for (uint32_t b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<uint32_t> GroupTable::center() const {
  std::vector<uint32_t> z;
  for (uint32_t a = 0; a < n_; ++a) {
    bool central = true;
    for (uint32_t b = 0; b < n_ && central; ++b)
      if (mul(a, b) != mul(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return z;
}

GroupPtr group_from_table(const std::vector<std::vector<uint32_t>>& table,
                          const std::string& name) {
  auto g = std::shared_ptr<GroupTable>(new GroupTable());
  g->n_ = uint32_t(table.size());
  g->mul_.assign(size_t(g->n_) * g->n_, 0);
  for (uint32_t i = 0; i < g->n_; ++i) {
    if (table[i].size() != g->n_) throw std::invalid_argument("group: ragged table");
    for (uint32_t j = 0; j < g->n_; ++j) g->mul_[size_t(i) * g->n_ + j] = table[i][j];
  }
  g->name_ = name;
  g->validate();
  g->inv_.assign(g->n_, 0);
  for (uint32_t a = 0; a < g->n_; ++a)
    for (uint32_t b = 0; b < g->n_; ++b)
      if (g->mul(a, b) == 0) g->inv_[a] = b;
  g->compute_generators();
  return g;
}

GroupPtr group_from_permutations(uint32_t degree,
                                 const std::vector<std::vector<uint32_t>>& gens,
                                 const std::string& name) {
  using Perm = std::vector<uint32_t>;
  for (const auto& p : gens) {
    if (p.size() != degree) throw std::invalid_argument("group: permutation degree mismatch");
    std::vector<bool> seen(degree, false);
    for (uint32_t v : p) {
      if (v >= degree || seen[v]) throw std::invalid_argument("group: not a permutation");
      seen[v] = true;
    }
  }
  Perm id(degree);
  for (uint32_t i = 0; i < degree; ++i) id[i] = i;
  auto compose = [degree](const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
    Perm r(degree);
    for (uint32_t i = 0; i < degree; ++i) r[i] = a[b[i]];
    return r;
  };
  std::vector<Perm> elems{id};
  std::map<Perm, uint32_t> index{{id, 0}};
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto& s : gens) {
      Perm t = compose(elems[qi], s);
      if (!index.count(t)) {
        if (elems.size() >= GroupTable::kMaxOrder)
          throw std::invalid_argument("group: closure exceeds order cap " +
                                      std::to_string(GroupTable::kMaxOrder));
        index[t] = uint32_t(elems.size());
        elems.push_back(std::move(t));
      }
    }
  }
  const uint32_t n = uint32_t(elems.size());
  std::vector<std::vector<uint32_t>> table(n, std::vector<uint32_t>(n));
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  return group_from_table(table, name);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const uint32_t na = a->order(), nb = b->order();
  if (uint64_t(na) * nb > GroupTable::kMaxOrder)
    throw std::invalid_argument("direct_product: order exceeds cap");
  const uint32_t n = na * nb;
  std::vector<std::vector<uint32_t>> table(n, std::vector<uint32_t>(n));
  for (uint32_t a1 = 0; a1 < na; ++a1)
    for (uint32_t b1 = 0; b1 < nb; ++b1)
      for (uint32_t a2 = 0; a2 < na; ++a2)
        for (uint32_t b2 = 0; b2 < nb; ++b2)
          table[a1 * nb + b1][a2 * nb + b2] = a->mul(a1, a2) * nb + b->mul(b1, b2);
  return group_from_table(table, a->name() + "x" + b->name());
}

GroupPtr cyclic_group(uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_group: order zero");
  std::vector<std::vector<uint32_t>> table(n, std::vector<uint32_t>(n));
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return group_from_table(table, "C" + std::to_string(n));
}

Subgroup::Subgroup(GroupPtr parent, std::vector<uint32_t> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_[0] != 0)
    throw std::invalid_argument("subgroup: must contain the identity");
  index_of_.assign(parent_->order(), -1);
  for (uint32_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= parent_->order())
      throw std::invalid_argument("subgroup: member out of range");
    index_of_[members_[i]] = int32_t(i);
  }
  // closure check with witness
  for (uint32_t a : members_)
    for (uint32_t b : members_)
      if (index_of_[parent_->mul(a, b)] < 0)
        throw std::invalid_argument("subgroup: not closed, witness (" + elt(a) + "," + elt(b) + ")");
  const uint32_t m = uint32_t(members_.size());
  std::vector<std::vector<uint32_t>> table(m, std::vector<uint32_t>(m));
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < m; ++j)
      table[i][j] = uint32_t(index_of_[parent_->mul(members_[i], members_[j])]);
  std::string nm = parent_->name() + "[" + member_label() + "]";
  sub_ = group_from_table(table, nm);
}

uint32_t Subgroup::to_sub(uint32_t parent_elt) const {
  const int32_t i = index_of_[parent_elt];
  if (i < 0) throw std::invalid_argument("subgroup: element " + elt(parent_elt) + " not a member");
  return uint32_t(i);
}

bool Subgroup::is_normal() const {
  for (uint32_t g = 0; g < parent_->order(); ++g)
    for (uint32_t h : members_)
      if (!contains(parent_->conj(g, h))) return false;
  return true;
}

std::string Subgroup::member_label() const {
  std::ostringstream os;
  for (size_t i = 0; i < members_.size(); ++i) {
    if (i) os << ".";
    os << members_[i];
  }
  return os.str();
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<uint32_t>& seeds) {
  std::vector<bool> in(g->order(), false);
  std::vector<uint32_t> queue{0};
  in[0] = true;
  for (uint32_t s : seeds) {
    if (s >= g->order()) throw std::invalid_argument("subgroup_generated: seed out of range");
    if (!in[s]) {
      in[s] = true;
      queue.push_back(s);
    }
  }
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (uint32_t s : seeds) {
      const uint32_t t = g->mul(queue[qi], s);
      if (!in[t]) {
        in[t] = true;
        queue.push_back(t);
      }
    }
  std::vector<uint32_t> members;
  for (uint32_t x = 0; x < g->order(); ++x)
    if (in[x]) members.push_back(x);
  return Subgroup(g, members);
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {0}); }

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<uint32_t> all(g->order());
  for (uint32_t i = 0; i < g->order(); ++i) all[i] = i;
  return Subgroup(g, all);
}

Subgroup conjugate_subgroup(const Subgroup& h, uint32_t g) {
  std::vector<uint32_t> members;
  for (uint32_t x : h.members()) members.push_back(h.parent()->conj(g, x));
  return Subgroup(h.parent(), members);
}

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
  std::vector<uint32_t> members;
  for (uint32_t x : a.members())
    if (b.contains(x)) members.push_back(x);
  return Subgroup(a.parent(), members);
}

Subgroup subgroup_within(const Subgroup& a, const Subgroup& b) {
  std::vector<uint32_t> members;
  for (uint32_t x : b.members()) members.push_back(a.to_sub(x));
  return Subgroup(a.group(), members);
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  std::set<std::vector<uint32_t>> seen;
  std::vector<std::vector<uint32_t>> work;
  seen.insert({0});
  work.push_back({0});
  for (size_t wi = 0; wi < work.size(); ++wi) {
    const std::vector<uint32_t> base = work[wi];
    for (uint32_t x = 1; x < g->order(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<uint32_t> seeds = base;
      seeds.push_back(x);
      Subgroup s = subgroup_generated(g, seeds);
      if (seen.insert(s.members()).second) work.push_back(s.members());
    }
  }
  std::vector<Subgroup> out;
  for (const auto& m : seen) out.emplace_back(g, m);
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.members() < y.members();
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  std::vector<Subgroup> out;
  for (auto& s : all_subgroups(g))
    if (s.is_normal()) out.push_back(std::move(s));
  return out;
}

Transversal left_transversal(const Subgroup& h) {
  const GroupPtr& g = h.parent();
  Transversal t;
  t.coset_of.assign(g->order(), UINT32_MAX);
  for (uint32_t x = 0; x < g->order(); ++x) {
    if (t.coset_of[x] != UINT32_MAX) continue;
    const uint32_t idx = uint32_t(t.reps.size());
    t.reps.push_back(x);
    for (uint32_t m : h.members()) t.coset_of[g->mul(x, m)] = idx;
  }
  return t;
}

DoubleCosets double_cosets(const Subgroup& h, const Subgroup& k) {
  const GroupPtr& g = h.parent();
  if (g != k.parent()) throw std::invalid_argument("double_cosets: different parents");
  DoubleCosets d;
  d.class_of.assign(g->order(), UINT32_MAX);
  for (uint32_t x = 0; x < g->order(); ++x) {
    if (d.class_of[x] != UINT32_MAX) continue;
    const uint32_t idx = uint32_t(d.reps.size());
    d.reps.push_back(x);
    for (uint32_t a : h.members())
      for (uint32_t b : k.members()) d.class_of[g->mul(g->mul(a, x), b)] = idx;
  }
  return d;
}

Quotient quotient_group(const GroupPtr& g, const Subgroup& n) {
  if (!n.is_normal())
    throw std::invalid_argument("quotient_group: subgroup [" + n.member_label() + "] is not normal");
  Quotient q;
  q.proj.assign(g->order(), UINT32_MAX);
  for (uint32_t x = 0; x < g->order(); ++x) {
    if (q.proj[x] != UINT32_MAX) continue;
    const uint32_t idx = uint32_t(q.section.size());
    q.section.push_back(x);
    for (uint32_t m : n.members()) q.proj[g->mul(x, m)] = idx;
  }
  const uint32_t m = uint32_t(q.section.size());
  std::vector<std::vector<uint32_t>> table(m, std::vector<uint32_t>(m));
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < m; ++j)
      table[i][j] = q.proj[g->mul(q.section[i], q.section[j])];
  q.group = group_from_table(table, g->name() + "/[" + n.member_label() + "]");
  return q;
}

}  // namespace cforge
