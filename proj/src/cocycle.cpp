#include "cocycle.hpp"

#include <sstream>
#include <stdexcept>

#include "error.hpp"

namespace cforge {
namespace {

std::string elt(uint32_t g) { return "g" + std::to_string(g); }

// breadth-first word structure: each element except the identity as
// (previous element, generator) with y = prev * s
struct WordTree {
  std::vector<uint32_t> order;            // elements in visit order, order[0] = e
  std::vector<std::pair<uint32_t, uint32_t>> from;  // element -> (prev, generator index)
};

WordTree word_tree(const GroupTable& g) {
  WordTree t;
  t.from.assign(g.order(), {0, 0});
  std::vector<char> seen(g.order(), 0);
  t.order.push_back(0);
  seen[0] = 1;
  const auto& gens = g.generators();
  for (size_t q = 0; q < t.order.size(); ++q) {
    const uint32_t x = t.order[q];
    for (size_t i = 0; i < gens.size(); ++i) {
      const uint32_t y = g.mul(x, gens[i]);
      if (seen[y]) continue;
      seen[y] = 1;
      t.from[y] = {x, uint32_t(i)};
      t.order.push_back(y);
    }
  }
  return t;
}

}  // namespace

FactorSet::FactorSet(GroupPtr group, PrimeField field, std::vector<uint32_t> vals)
    : group_(std::move(group)), field_(field), vals_(std::move(vals)) {
  const uint32_t n = group_->order();
  if (vals_.size() != size_t(n) * n)
    throw std::invalid_argument("factor set: need one value per pair of elements");
  for (uint32_t v : vals_)
    if (v == 0 || v >= field_.modulus())
      throw std::invalid_argument("factor set: values must be units of the field");
  for (uint32_t a = 0; a < n; ++a)
    if (at(0, a) != 1 || at(a, 0) != 1)
      throw std::invalid_argument("factor set: not normalized at " + elt(a));
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      for (uint32_t c = 0; c < n; ++c)
        if (field_.mul(at(a, b), at(group_->mul(a, b), c)) !=
            field_.mul(at(b, c), at(a, group_->mul(b, c))))
          throw std::invalid_argument("factor set: cocycle identity fails at (" + elt(a) + ", " +
                                      elt(b) + ", " + elt(c) + ")");
}

FactorSet trivial_factor_set(const GroupPtr& g, PrimeField f) {
  return FactorSet(g, f, std::vector<uint32_t>(size_t(g->order()) * g->order(), 1));
}

FactorSet factor_product(const FactorSet& a, const FactorSet& b) {
  if (!same_group_table(*a.group(), *b.group()) || a.field().modulus() != b.field().modulus())
    throw std::invalid_argument("factor product: mismatched groups or fields");
  std::vector<uint32_t> vals(a.values().size());
  for (size_t i = 0; i < vals.size(); ++i) vals[i] = a.field().mul(a.values()[i], b.values()[i]);
  return FactorSet(a.group(), a.field(), std::move(vals));
}

FactorSet factor_inverse(const FactorSet& a) {
  std::vector<uint32_t> vals(a.values().size());
  for (size_t i = 0; i < vals.size(); ++i) vals[i] = a.field().inv(a.values()[i]);
  return FactorSet(a.group(), a.field(), std::move(vals));
}

FactorSet coboundary_of(const GroupPtr& g, PrimeField f, const std::vector<uint32_t>& mu) {
  const uint32_t n = g->order();
  if (mu.size() != n) throw std::invalid_argument("coboundary: one unit per element required");
  if (mu[0] != 1) throw std::invalid_argument("coboundary: mu must be 1 at the identity");
  for (uint32_t v : mu)
    if (v == 0 || v >= f.modulus())
      throw std::invalid_argument("coboundary: values must be units of the field");
  std::vector<uint32_t> vals(size_t(n) * n);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      vals[size_t(a) * n + b] = f.mul(f.mul(mu[a], mu[b]), f.inv(mu[g->mul(a, b)]));
  return FactorSet(g, f, std::move(vals));
}

std::optional<std::vector<uint32_t>> trivializer(const FactorSet& a,
                                                 const std::vector<uint32_t>& fixed_one) {
  const GroupPtr& g = a.group();
  const PrimeField f = a.field();
  const uint32_t n = g->order();
  const uint32_t units = f.modulus() - 1;
  const auto& gens = g->generators();

  double candidates = 1;
  for (size_t i = 0; i < gens.size(); ++i) candidates *= units;
  if (candidates > double(1 << 20))
    throw std::runtime_error("trivializer: generator assignment space exceeds the supported size");

  const WordTree tree = word_tree(*g);
  std::vector<uint32_t> assign(gens.size(), 1);
  std::vector<uint32_t> mu(n);
  while (true) {
    // propagate mu along the word tree: mu(x s) = mu(x) mu(s) / a(x, s)
    mu[0] = 1;
    for (size_t q = 1; q < tree.order.size(); ++q) {
      const uint32_t y = tree.order[q];
      const auto [x, si] = tree.from[y];
      mu[y] = f.mul(f.mul(mu[x], assign[si]), f.inv(a.at(x, gens[si])));
    }
    bool ok = true;
    for (uint32_t t : fixed_one)
      if (mu[t] != 1) {
        ok = false;
        break;
      }
    for (uint32_t x = 0; x < n && ok; ++x)
      for (uint32_t y = 0; y < n; ++y)
        if (f.mul(f.mul(mu[x], mu[y]), f.inv(mu[g->mul(x, y)])) != a.at(x, y)) {
          ok = false;
          break;
        }
    if (ok) return mu;

    size_t pos = 0;
    while (pos < assign.size()) {
      assign[pos] = assign[pos] % units + 1;
      if (assign[pos] != 1) break;
      ++pos;
    }
    if (pos == assign.size()) return std::nullopt;
  }
}

bool is_coboundary(const FactorSet& a) { return trivializer(a).has_value(); }

bool strictly_equivalent(const FactorSet& a, const FactorSet& b) {
  return is_coboundary(factor_product(a, factor_inverse(b)));
}

bool is_coset_constant(const FactorSet& a, const Subgroup& n) {
  const GroupPtr& g = a.group();
  if (!same_group_table(*g, *n.parent()))
    throw std::invalid_argument("coset constancy: subgroup of a different group");
  const Transversal t = left_transversal(n);
  for (uint32_t x = 0; x < g->order(); ++x)
    for (uint32_t y = 0; y < g->order(); ++y) {
      const uint32_t rx = t.reps[t.coset_of[x]], ry = t.reps[t.coset_of[y]];
      if (a.at(x, y) != a.at(rx, ry)) return false;
    }
  return true;
}

QuotientFactorSet quotient_factor_set(const FactorSet& a, const Subgroup& n) {
  if (!is_coset_constant(a, n))
    throw std::invalid_argument("quotient factor set: values are not constant on cosets");
  Quotient q = quotient_group(a.group(), n);
  const uint32_t m = q.group->order();
  std::vector<uint32_t> vals(size_t(m) * m);
  for (uint32_t x = 0; x < m; ++x)
    for (uint32_t y = 0; y < m; ++y)
      vals[size_t(x) * m + y] = a.at(q.section[x], q.section[y]);
  FactorSet beta(q.group, a.field(), std::move(vals));
  return {std::move(q), std::move(beta)};
}

FactorSet inflate_factor_set(const FactorSet& beta, const GroupPtr& g, const Quotient& q) {
  if (!same_group_table(*beta.group(), *q.group))
    throw std::invalid_argument("inflation: factor set is not over the quotient");
  const uint32_t n = g->order();
  std::vector<uint32_t> vals(size_t(n) * n);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      vals[size_t(a) * n + b] = beta.at(q.proj[a], q.proj[b]);
  return FactorSet(g, beta.field(), std::move(vals));
}

FactorSet cyclic_carry_cocycle(const GroupPtr& cyclic, PrimeField f, uint32_t c) {
  const uint32_t n = cyclic->order();
  // demand the standard cyclic indexing i * j = i + j mod n
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      if (cyclic->mul(i, j) != (i + j) % n)
        throw std::invalid_argument("carry cocycle: group is not in cyclic index form");
  if (c == 0 || c >= f.modulus())
    throw std::invalid_argument("carry cocycle: unit required");
  std::vector<uint32_t> vals(size_t(n) * n, 1);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      if (i + j >= n) vals[size_t(i) * n + j] = c;
  return FactorSet(cyclic, f, std::move(vals));
}

ProjectiveRep make_projective(const GroupPtr& g, PrimeField f, std::vector<MatrixF> images) {
  const uint32_t n = g->order();
  if (images.size() != n) throw std::invalid_argument("projective rep: one image per element");
  const uint32_t d = images.empty() ? 0 : images[0].rows();
  for (const auto& m : images)
    if (m.rows() != d || m.cols() != d || m.field().modulus() != f.modulus())
      throw std::invalid_argument("projective rep: images must be square over one field");
  if (d == 0 || !images[0].is_identity())
    throw std::invalid_argument("projective rep: identity must act as the identity matrix");

  std::vector<uint32_t> vals(size_t(n) * n, 1);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) {
      const MatrixF lhs = images[a] * images[b];
      const MatrixF& target = images[g->mul(a, b)];
      const auto nz = lhs.first_nonzero();
      if (!nz) throw std::invalid_argument("projective rep: singular product at (" + elt(a) +
                                           ", " + elt(b) + ")");
      const auto [pos, v] = *nz;
      const uint32_t tv = target.at(pos.first, pos.second);
      if (tv == 0)
        throw std::invalid_argument("projective rep: images of (" + elt(a) + ", " + elt(b) +
                                    ") are not proportional");
      const uint32_t c = f.mul(v, f.inv(tv));
      if (lhs != target.scaled(c))
        throw std::invalid_argument("projective rep: images of (" + elt(a) + ", " + elt(b) +
                                    ") are not proportional");
      vals[size_t(a) * n + b] = c;
    }
  FactorSet alpha(g, f, std::move(vals));
  return {g, f, d, std::move(images), std::move(alpha)};
}

ProjectiveRep ordinary_as_projective(const Representation& v) {
  std::vector<MatrixF> images;
  for (uint32_t g = 0; g < v.group()->order(); ++g) images.push_back(v.image(g));
  return {v.group(), v.field(), v.dim(), std::move(images),
          trivial_factor_set(v.group(), v.field())};
}

Representation projective_to_ordinary(const ProjectiveRep& x) {
  for (uint32_t v : x.alpha.values())
    if (v != 1)
      throw std::invalid_argument("projective rep with a nontrivial factor set is not a module");
  std::vector<SparseMat> images;
  for (const auto& m : x.images) images.push_back(sparse_from_dense(m));
  return Representation(x.group, x.field, x.dim, std::move(images), {}, false);
}

ProjectiveRep scalar_twist(const ProjectiveRep& x, const std::vector<uint32_t>& mu) {
  if (mu.size() != x.group->order() || mu[0] != 1)
    throw std::invalid_argument("scalar twist: need units per element with 1 at the identity");
  std::vector<MatrixF> images;
  for (uint32_t g = 0; g < x.group->order(); ++g) images.push_back(x.images[g].scaled(mu[g]));
  return make_projective(x.group, x.field, std::move(images));
}

AlgebraModule twisted_left_regular(const FactorSet& a) {
  const GroupPtr& g = a.group();
  const PrimeField f = a.field();
  AlgebraModule m{f, g->order(), {}};
  for (uint32_t s : g->generators()) m.gens.push_back(twisted_unit(a, s));
  return m;
}

MatrixF twisted_unit(const FactorSet& a, uint32_t g) {
  const GroupPtr& grp = a.group();
  const uint32_t n = grp->order();
  MatrixF m(a.field(), n, n);
  for (uint32_t b = 0; b < n; ++b) m.set(grp->mul(g, b), b, a.at(g, b));
  return m;
}

std::vector<AlgebraModule> twisted_irreducibles(const FactorSet& a, std::mt19937_64& rng) {
  const auto factors = composition_factors(twisted_left_regular(a), rng);
  std::vector<AlgebraModule> classes;
  for (const auto& m : factors) {
    bool known = false;
    for (const auto& ref : classes)
      if (is_isomorphic_irreducible(ref, m)) {
        known = true;
        break;
      }
    if (!known) classes.push_back(m);
  }
  return classes;
}

ProjectiveRep lift_to_projective(const FactorSet& a, const AlgebraModule& m) {
  const GroupPtr& g = a.group();
  const auto& gens = g->generators();
  if (m.gens.size() != gens.size())
    throw std::invalid_argument("projective lift: one action matrix per group generator");
  const PrimeField f = a.field();
  const WordTree tree = word_tree(*g);
  std::vector<MatrixF> images(g->order());
  images[0] = MatrixF::identity(f, m.dim);
  // u_x u_s = a(x, s) u_{xs}, so the action of u_{xs} is (X_x X_s) / a(x, s)
  for (size_t q = 1; q < tree.order.size(); ++q) {
    const uint32_t y = tree.order[q];
    const auto [x, si] = tree.from[y];
    images[y] = (images[x] * m.gens[si]).scaled(f.inv(a.at(x, gens[si])));
  }
  return make_projective(g, f, std::move(images));
}

std::string cocycle_to_text(const FactorSet& a, const std::string& group_ref) {
  std::ostringstream os;
  const uint32_t n = a.group()->order();
  os << "cocycle " << group_ref << " mod " << a.field().modulus() << "\n";
  for (uint32_t x = 0; x < n; ++x) {
    for (uint32_t y = 0; y < n; ++y) os << (y ? " " : "") << a.at(x, y);
    os << "\n";
  }
  return os.str();
}

FactorSet cocycle_from_text(const std::string& text, const GroupPtr& g) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty cocycle file", 1);
  std::istringstream hs(line);
  std::string kw, ref, modkw;
  uint64_t p = 0;
  if (!(hs >> kw >> ref >> modkw >> p) || kw != "cocycle" || modkw != "mod")
    throw ParseError("expected header 'cocycle <group> mod <p>'", lineno);
  if (!is_prime_u32(uint32_t(p)) || p > 0xffffffffull)
    throw ParseError("modulus must be prime", lineno);
  const PrimeField f{uint32_t(p)};
  const uint32_t n = g->order();
  std::vector<uint32_t> vals(size_t(n) * n);
  for (uint32_t x = 0; x < n; ++x) {
    if (!next_line()) throw ParseError("expected " + std::to_string(n) + " rows", lineno + 1);
    std::istringstream rs(line);
    for (uint32_t y = 0; y < n; ++y) {
      int64_t v;
      if (!(rs >> v)) throw ParseError("row too short", lineno);
      if (v <= 0 || uint64_t(v) >= p)
        throw ParseError("value " + std::to_string(v) + " is not a unit mod " + std::to_string(p),
                         lineno);
      vals[size_t(x) * n + y] = uint32_t(v);
    }
    std::string tail;
    if (rs >> tail) throw ParseError("row too long", lineno);
  }
  if (next_line()) throw ParseError("unexpected extra line", lineno);
  try {
    return FactorSet(g, f, std::move(vals));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid cocycle: ") + e.what(), 1);
  }
}

}  // namespace cforge
