#include "clifford.hpp"

#include <algorithm>
#include <stdexcept>

namespace cforge {

namespace {

std::string elt(uint32_t g) { return std::to_string(g); }

// composition factors carry generator images only; a factor of a module over
// the trivial group has no generators and must be the one-dimensional module
Representation rep_of_factor(const GroupPtr& g, PrimeField f, const AlgebraModule& m) {
  if (g->generators().empty()) {
    if (m.dim != 1) throw std::logic_error("trivial group admits only one-dimensional simples");
    return trivial_rep(g, f);
  }
  return rep_from_generators(g, f, m.gens);
}

// equality of column spans; both arguments have independent columns
bool same_span(const MatrixF& a, const MatrixF& b) {
  return a.cols() == b.cols() && rank(hstack(a, b)) == a.cols();
}

// action of a subgroup of v's group on an invariant column space, in the
// coordinates of the given basis
Representation component_module(const Representation& v, const Subgroup& t,
                                const MatrixF& basis) {
  std::vector<SparseMat> images;
  images.reserve(t.order());
  for (uint32_t i = 0; i < t.order(); ++i) {
    const MatrixF img = v.image(t.to_parent(i)) * basis;
    const auto coords = solve(basis, img);
    if (!coords) throw std::logic_error("component is not invariant under the stabilizer");
    images.push_back(sparse_from_dense(*coords));
  }
  std::vector<std::string> labels(basis.cols());
  for (uint32_t j = 0; j < basis.cols(); ++j) labels[j] = "c" + elt(j);
  Representation out(t.group(), v.field(), basis.cols(), std::move(images), std::move(labels),
                     false);
  out.set_tag("comp(" + v.tag() + ")");
  return out;
}

std::vector<AlgebraModule> distinct_classes(std::vector<AlgebraModule> factors) {
  std::vector<AlgebraModule> classes;
  for (auto& fa : factors) {
    bool seen = false;
    for (const auto& c : classes)
      if (c.dim == fa.dim && is_isomorphic_irreducible(c, fa)) {
        seen = true;
        break;
      }
    if (!seen) classes.push_back(std::move(fa));
  }
  return classes;
}

MatrixF flatten_rows(PrimeField f, const std::vector<MatrixF>& mats) {
  const uint32_t cols = mats.empty() ? 0 : mats[0].rows() * mats[0].cols();
  MatrixF out(f, uint32_t(mats.size()), cols);
  for (uint32_t i = 0; i < mats.size(); ++i)
    for (uint32_t r = 0; r < mats[i].rows(); ++r)
      for (uint32_t c = 0; c < mats[i].cols(); ++c)
        out.set(i, r * mats[i].cols() + c, mats[i].at(r, c));
  return out;
}

}  // namespace

InertiaResult inertia_group(const Representation& w, const Subgroup& n, std::mt19937_64& rng) {
  if (!same_group_table(*w.group(), *n.group()))
    throw std::invalid_argument("inertia_group: module is not over the given subgroup");
  if (!n.is_normal()) throw std::invalid_argument("inertia_group: subgroup is not normal");
  const AlgebraModule wm = module_of(w);
  if (!is_irreducible(wm, rng))
    throw std::invalid_argument("inertia_group: module is not irreducible");
  const GroupPtr& g = n.parent();
  const Transversal tr = left_transversal(n);
  std::map<uint32_t, MatrixF> witnesses;
  std::vector<uint32_t> refuted;
  std::vector<uint32_t> members;
  for (uint32_t t : tr.reps) {
    const auto homs = hom_basis(wm, module_of(conjugate_module(w, n, t)));
    if (homs.empty()) {
      refuted.push_back(t);
      continue;
    }
    witnesses.emplace(t, homs[0]);
    for (uint32_t x : n.members()) members.push_back(g->mul(t, x));
  }
  // the Subgroup constructor re-checks closure with a witness pair
  Subgroup t(g, std::move(members));
  return InertiaResult{std::move(t), std::move(witnesses), std::move(refuted)};
}

bool lies_over(const Representation& v, const Representation& w, const Subgroup& n,
               std::mt19937_64& rng) {
  if (!same_group_table(*v.group(), *n.parent()))
    throw std::invalid_argument("lies_over: module is not over the parent group");
  if (!same_group_table(*w.group(), *n.group()))
    throw std::invalid_argument("lies_over: reference module is not over the subgroup");
  const AlgebraModule wm = module_of(w);
  for (const auto& fa : composition_factors(module_of(restrict_rep(v, n)), rng))
    if (fa.dim == w.dim() && is_isomorphic_irreducible(fa, wm)) return true;
  return false;
}

std::vector<Representation> enumerate_irreducibles(const GroupPtr& g, PrimeField f,
                                                   std::mt19937_64& rng) {
  auto classes = distinct_classes(composition_factors(module_of(regular_rep(g, f)), rng));
  std::stable_sort(classes.begin(), classes.end(),
                   [](const AlgebraModule& a, const AlgebraModule& b) { return a.dim < b.dim; });
  std::vector<Representation> out;
  out.reserve(classes.size());
  for (uint32_t k = 0; k < classes.size(); ++k) {
    Representation r = rep_of_factor(g, f, classes[k]);
    r.set_tag("irr" + elt(k) + "[" + g->name() + "]");
    out.push_back(std::move(r));
  }
  return out;
}

Stage1Report verify_stage1(const Representation& v, const Subgroup& n, std::mt19937_64& rng) {
  const GroupPtr& g = n.parent();
  if (!same_group_table(*v.group(), *g))
    throw std::invalid_argument("verify_stage1: module is not over the parent group");
  if (!n.is_normal()) throw std::invalid_argument("verify_stage1: subgroup is not normal");
  const PrimeField f = v.field();
  const Representation res = restrict_rep(v, n);
  const AlgebraModule resm = module_of(res);

  std::vector<IsotypicPart> parts;
  uint32_t total = 0;
  MatrixF stacked(f, v.dim(), 0);
  bool clean = true;
  for (auto& c : distinct_classes(composition_factors(resm, rng))) {
    MatrixF comp = homogeneous_component(resm, c);
    if (comp.cols() % c.dim != 0) clean = false;
    total += comp.cols();
    stacked = hstack(stacked, comp);
    const uint32_t mult = comp.cols() / c.dim;
    parts.push_back(IsotypicPart{rep_of_factor(n.group(), f, c), std::move(comp), mult});
  }
  const bool semisimple = clean && total == v.dim() && rank(stacked) == v.dim();

  // the group permutes the component spans; take the orbit of the first
  const uint32_t k = uint32_t(parts.size());
  bool permuted = true;
  std::vector<std::vector<uint32_t>> images_of(g->generators().size(),
                                               std::vector<uint32_t>(k, k));
  for (size_t si = 0; si < g->generators().size(); ++si) {
    const MatrixF gs = v.image(g->generators()[si]);
    for (uint32_t i = 0; i < k; ++i) {
      const MatrixF moved = gs * parts[i].component;
      for (uint32_t j = 0; j < k; ++j)
        if (same_span(parts[j].component, moved)) {
          images_of[si][i] = j;
          break;
        }
      if (images_of[si][i] == k) permuted = false;
    }
  }
  std::vector<char> seen(k, 0);
  if (k) seen[0] = 1;
  std::vector<uint32_t> queue{0};
  while (permuted && !queue.empty()) {
    const uint32_t i = queue.back();
    queue.pop_back();
    for (const auto& row : images_of)
      if (!seen[row[i]]) {
        seen[row[i]] = 1;
        queue.push_back(row[i]);
      }
  }
  const bool transitive =
      permuted && std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });

  // stabilizer of the first component, assembled coset by coset
  bool n_fixes = true;
  for (uint32_t s : n.group()->generators())
    if (!same_span(parts[0].component, v.image(n.to_parent(s)) * parts[0].component))
      n_fixes = false;
  const Transversal tr = left_transversal(n);
  std::vector<uint32_t> stab_members;
  for (uint32_t t : tr.reps)
    if (same_span(parts[0].component, v.image(t) * parts[0].component))
      for (uint32_t x : n.members()) stab_members.push_back(g->mul(t, x));
  Subgroup stab(g, std::move(stab_members));
  const bool stab_is_inertia =
      n_fixes && stab.same_members(inertia_group(parts[0].factor, n, rng).t);

  Representation s = component_module(v, stab, parts[0].component);
  const Representation ind = induce(s, stab);

  bool iso_ok = ind.dim() == v.dim();
  const Transversal str = left_transversal(stab);
  MatrixF iso(f, v.dim(), ind.dim());
  if (iso_ok) {
    const uint32_t sd = s.dim();
    for (uint32_t i = 0; i < str.reps.size(); ++i) {
      const MatrixF blk = v.image(str.reps[i]) * parts[0].component;
      for (uint32_t r = 0; r < v.dim(); ++r)
        for (uint32_t j = 0; j < sd; ++j) iso.set(r, i * sd + j, blk.at(r, j));
    }
    iso_ok = inverse(iso).has_value();
    for (uint32_t a = 0; iso_ok && a < g->order(); ++a)
      if (iso * ind.image(a) != v.image(a) * iso) iso_ok = false;
  }

  return Stage1Report{semisimple, std::move(parts),    transitive, stab_is_inertia,
                      std::move(stab), std::move(s), iso_ok,     std::move(iso)};
}

Stage2Report verify_stage2(const Representation& s, const Subgroup& t, const Representation& w,
                           const Subgroup& n, std::mt19937_64& rng) {
  if (!same_group_table(*s.group(), *t.group()))
    throw std::invalid_argument("verify_stage2: module is not over the middle subgroup");
  if (!same_group_table(*w.group(), *n.group()))
    throw std::invalid_argument("verify_stage2: reference module is not over the subgroup");
  for (uint32_t x : n.members())
    if (!t.contains(x))
      throw std::invalid_argument("verify_stage2: the middle subgroup must contain the normal one");
  bool pre = inertia_group(w, n, rng).t.same_members(t);
  pre = pre && is_irreducible(module_of(s), rng);
  pre = pre && lies_over(s, w, subgroup_within(t, n), rng);
  const bool ind_irr = pre && is_irreducible(module_of(induce(s, t)), rng);
  return Stage2Report{pre, ind_irr};
}

CorrespondenceReport verify_correspondence(const Representation& w, const Subgroup& n,
                                           std::mt19937_64& rng) {
  const GroupPtr& g = n.parent();
  const PrimeField f = w.field();
  Subgroup t = inertia_group(w, n, rng).t;
  const Subgroup nt = subgroup_within(t, n);
  const AlgebraModule wm = module_of(w);

  std::vector<Representation> over_t, over_g;
  for (auto& s : enumerate_irreducibles(t.group(), f, rng))
    if (lies_over(s, w, nt, rng)) over_t.push_back(std::move(s));
  for (auto& v : enumerate_irreducibles(g, f, rng))
    if (lies_over(v, w, n, rng)) over_g.push_back(std::move(v));

  bool ok = true;
  std::vector<uint32_t> forward(over_t.size(), UINT32_MAX);
  std::vector<uint32_t> backward(over_g.size(), UINT32_MAX);
  for (size_t i = 0; i < over_t.size(); ++i) {
    const Representation ind = induce(over_t[i], t);
    if (!is_irreducible(module_of(ind), rng)) {
      ok = false;
      continue;
    }
    const AlgebraModule im = module_of(ind);
    for (size_t j = 0; j < over_g.size(); ++j)
      if (over_g[j].dim() == ind.dim() &&
          is_isomorphic_irreducible(im, module_of(over_g[j]))) {
        if (forward[i] != UINT32_MAX) ok = false;
        forward[i] = uint32_t(j);
      }
    if (forward[i] == UINT32_MAX) ok = false;
  }
  for (size_t j = 0; j < over_g.size(); ++j) {
    const MatrixF comp = homogeneous_component(module_of(restrict_rep(over_g[j], n)), wm);
    if (comp.cols() == 0) {
      ok = false;
      continue;
    }
    const Representation sv = component_module(over_g[j], t, comp);
    if (!is_irreducible(module_of(sv), rng)) {
      ok = false;
      continue;
    }
    const AlgebraModule svm = module_of(sv);
    for (size_t i = 0; i < over_t.size(); ++i)
      if (over_t[i].dim() == sv.dim() && is_isomorphic_irreducible(svm, module_of(over_t[i]))) {
        if (backward[j] != UINT32_MAX) ok = false;
        backward[j] = uint32_t(i);
      }
    if (backward[j] == UINT32_MAX) ok = false;
  }
  if (over_t.size() != over_g.size()) ok = false;
  for (size_t i = 0; ok && i < forward.size(); ++i) ok = backward[forward[i]] == i;
  for (size_t j = 0; ok && j < backward.size(); ++j) ok = forward[backward[j]] == j;

  return CorrespondenceReport{std::move(t),       std::move(over_t), std::move(over_g),
                              std::move(forward), std::move(backward), ok};
}

MatrixF factor_intertwiner(const MatrixF& t, uint32_t dim_u1, uint32_t dim_u2,
                           const AlgebraModule& w) {
  const PrimeField f = w.field;
  const uint32_t dw = w.dim;
  if (t.rows() != dim_u2 * dw || t.cols() != dim_u1 * dw)
    throw std::invalid_argument("factor_intertwiner: shape mismatch");
  const MatrixF i1 = MatrixF::identity(f, dim_u1);
  const MatrixF i2 = MatrixF::identity(f, dim_u2);
  for (const auto& a : w.gens)
    if (t * kronecker(i1, a) != kronecker(i2, a) * t)
      throw std::invalid_argument("factor_intertwiner: not an intertwiner");
  MatrixF s(f, dim_u2, dim_u1);
  for (uint32_t i = 0; i < dim_u2; ++i)
    for (uint32_t j = 0; j < dim_u1; ++j) s.set(i, j, t.at(i * dw, j * dw));
  if (kronecker(s, MatrixF::identity(f, dw)) != t)
    throw std::invalid_argument("factor_intertwiner: intertwiner is not of product form");
  return s;
}

ProjectiveRep extend_to_projective(const Representation& w, const Subgroup& n,
                                   std::mt19937_64& rng) {
  if (!same_group_table(*w.group(), *n.group()))
    throw std::invalid_argument("extend_to_projective: module is not over the given subgroup");
  if (!n.is_normal()) throw std::invalid_argument("extend_to_projective: subgroup is not normal");
  const AlgebraModule wm = module_of(w);
  if (!is_irreducible(wm, rng))
    throw std::invalid_argument("extend_to_projective: module is not irreducible");
  if (end_ring(wm).size() != 1)
    throw std::invalid_argument(
        "extend_to_projective: endomorphism ring is larger than the scalars");
  const GroupPtr& g = n.parent();
  const PrimeField f = w.field();
  const Transversal tr = left_transversal(n);
  std::vector<MatrixF> xt(tr.reps.size());
  for (size_t i = 0; i < tr.reps.size(); ++i) {
    const uint32_t t = tr.reps[i];
    if (t == GroupTable::identity()) {
      xt[i] = MatrixF::identity(f, w.dim());
      continue;
    }
    const auto homs = hom_basis(wm, module_of(conjugate_module(w, n, t)));
    if (homs.empty())
      throw std::invalid_argument("extend_to_projective: module is not invariant, witness coset " +
                                  elt(t));
    const auto lead = homs[0].first_nonzero();
    xt[i] = homs[0].scaled(f.inv(lead->second));
  }
  std::vector<MatrixF> images;
  images.reserve(g->order());
  for (uint32_t a = 0; a < g->order(); ++a) {
    const uint32_t i = tr.coset_of[a];
    const uint32_t x = n.to_sub(g->mul(g->inv(tr.reps[i]), a));
    images.push_back(xt[i] * w.image(x));
  }
  ProjectiveRep out = make_projective(g, f, std::move(images));
  if (!is_coset_constant(out.alpha, n))
    throw std::logic_error("extend_to_projective: factor set is not constant on cosets");
  return out;
}

std::optional<Representation> extend_ordinary(const Representation& w, const Subgroup& n,
                                              std::mt19937_64& rng) {
  const ProjectiveRep x = extend_to_projective(w, n, rng);
  const auto mu = trivializer(x.alpha, n.members());
  if (!mu) return std::nullopt;
  std::vector<SparseMat> images;
  images.reserve(x.group->order());
  for (uint32_t a = 0; a < x.group->order(); ++a)
    images.push_back(sparse_from_dense(x.images[a].scaled(x.field.inv((*mu)[a]))));
  Representation out(x.group, x.field, x.dim, std::move(images), w.basis_labels(), true);
  out.set_tag("ext(" + w.tag() + ")");
  return out;
}

ProjectiveRep lift_through_quotient(const FactorSet& delta, const Quotient& q,
                                    const GroupPtr& g, const AlgebraModule& u) {
  if (!same_group_table(*delta.group(), *q.group))
    throw std::invalid_argument("lift_through_quotient: factor set is not on the quotient");
  if (q.proj.size() != g->order())
    throw std::invalid_argument("lift_through_quotient: quotient does not match the group");
  const ProjectiveRep p = lift_to_projective(delta, u);
  std::vector<MatrixF> images;
  images.reserve(g->order());
  for (uint32_t a = 0; a < g->order(); ++a) images.push_back(p.images[q.proj[a]]);
  ProjectiveRep out = make_projective(g, delta.field(), std::move(images));
  if (!(out.alpha == inflate_factor_set(delta, g, q)))
    throw std::logic_error("lift_through_quotient: factor set is not the inflation");
  return out;
}

Representation glue(const ProjectiveRep& y, const ProjectiveRep& x) {
  if (!same_group_table(*y.group, *x.group))
    throw std::invalid_argument("glue: factors over different groups");
  if (y.field.modulus() != x.field.modulus())
    throw std::invalid_argument("glue: factors over different fields");
  const GroupPtr& g = y.group;
  const FactorSet prod = factor_product(y.alpha, x.alpha);
  for (uint32_t a = 0; a < g->order(); ++a)
    for (uint32_t b = 0; b < g->order(); ++b)
      if (prod.at(a, b) != 1)
        throw std::invalid_argument("glue: factor sets do not cancel at (" + elt(a) + "," +
                                    elt(b) + ")");
  std::vector<SparseMat> images;
  images.reserve(g->order());
  for (uint32_t a = 0; a < g->order(); ++a)
    images.push_back(sparse_from_dense(kronecker(y.images[a], x.images[a])));
  std::vector<std::string> labels;
  labels.reserve(size_t(y.dim) * x.dim);
  for (uint32_t i = 0; i < y.dim; ++i)
    for (uint32_t j = 0; j < x.dim; ++j) labels.push_back("u" + elt(i) + "*w" + elt(j));
  Representation out(g, y.field, y.dim * x.dim, std::move(images), std::move(labels), false);
  out.set_tag("glue");
  return out;
}

std::optional<MatrixF> strict_equivalence(const ProjectiveRep& y1, const ProjectiveRep& y2,
                                          std::mt19937_64& rng) {
  if (!same_group_table(*y1.group, *y2.group) || y1.field.modulus() != y2.field.modulus() ||
      !(y1.alpha == y2.alpha))
    throw std::invalid_argument("strict_equivalence: mismatched groups, fields or factor sets");
  if (y1.dim != y2.dim) return std::nullopt;
  const AlgebraModule a{y1.field, y1.dim, y1.images};
  const AlgebraModule b{y2.field, y2.dim, y2.images};
  return find_isomorphism(a, b, rng);
}

GlueReport verify_glue(const Representation& w, const Subgroup& n, std::mt19937_64& rng) {
  const GroupPtr& g = n.parent();
  const PrimeField f = w.field();
  ProjectiveRep x = extend_to_projective(w, n, rng);
  QuotientFactorSet gamma = quotient_factor_set(x.alpha, n);
  FactorSet delta = factor_inverse(gamma.beta);
  std::vector<AlgebraModule> twisted = twisted_irreducibles(delta, rng);
  const AlgebraModule wm = module_of(w);

  std::vector<Representation> glued;
  bool all_irr = true, homog = true;
  for (const auto& u : twisted) {
    const ProjectiveRep y = lift_through_quotient(delta, gamma.quotient, g, u);
    Representation s = glue(y, x);
    s.set_tag("glue" + elt(uint32_t(glued.size())) + "(" + w.tag() + ")");
    if (!is_irreducible(module_of(s), rng)) all_irr = false;
    const MatrixF comp = homogeneous_component(module_of(restrict_rep(s, n)), wm);
    if (comp.cols() != s.dim() || s.dim() != u.dim * w.dim()) homog = false;
    glued.push_back(std::move(s));
  }

  bool injective = all_irr, exhaustive = all_irr;
  if (all_irr) {
    for (size_t i = 0; i < glued.size(); ++i)
      for (size_t j = i + 1; j < glued.size(); ++j)
        if (glued[i].dim() == glued[j].dim() &&
            is_isomorphic_irreducible(module_of(glued[i]), module_of(glued[j])))
          injective = false;
    std::vector<Representation> over;
    for (auto& v : enumerate_irreducibles(g, f, rng))
      if (lies_over(v, w, n, rng)) over.push_back(std::move(v));
    if (over.size() != glued.size()) exhaustive = false;
    for (const auto& v : over) {
      bool hit = false;
      for (const auto& s : glued)
        if (s.dim() == v.dim() && is_isomorphic_irreducible(module_of(s), module_of(v))) {
          hit = true;
          break;
        }
      if (!hit) exhaustive = false;
    }
  }
  return GlueReport{std::move(x),      std::move(gamma), std::move(delta), std::move(twisted),
                    std::move(glued), all_irr,          homog,            injective,
                    exhaustive};
}

Representation inflate_rep(const Representation& u, const Quotient& q, const GroupPtr& g) {
  if (!same_group_table(*u.group(), *q.group))
    throw std::invalid_argument("inflate_rep: module is not over the quotient");
  if (q.proj.size() != g->order())
    throw std::invalid_argument("inflate_rep: quotient does not match the group");
  std::vector<SparseMat> images;
  images.reserve(g->order());
  for (uint32_t a = 0; a < g->order(); ++a) images.push_back(u.image_sparse(q.proj[a]));
  Representation out(g, u.field(), u.dim(), std::move(images), u.basis_labels(), false);
  out.set_tag("infl(" + u.tag() + ")");
  return out;
}

GallagherReport verify_gallagher(const Representation& w, const Representation& s_ext,
                                 const Subgroup& n, std::mt19937_64& rng) {
  const GroupPtr& g = n.parent();
  if (!same_group_table(*s_ext.group(), *g))
    throw std::invalid_argument("verify_gallagher: extension is not over the parent group");
  if (!same_group_table(*w.group(), *n.group()))
    throw std::invalid_argument("verify_gallagher: module is not over the subgroup");
  if (end_ring(module_of(w)).size() != 1)
    throw std::invalid_argument(
        "verify_gallagher: endomorphism ring is larger than the scalars");
  for (uint32_t i = 0; i < n.order(); ++i)
    if (!(s_ext.image_sparse(n.to_parent(i)) == w.image_sparse(i)))
      throw std::invalid_argument("verify_gallagher: the extension does not restrict to the module");
  const PrimeField f = w.field();
  const Quotient q = quotient_group(g, n);

  std::vector<Representation> tensors;
  for (const auto& u : enumerate_irreducibles(q.group, f, rng)) {
    Representation tu = tensor(inflate_rep(u, q, g), s_ext);
    tu.set_tag("gal" + elt(uint32_t(tensors.size())) + "(" + w.tag() + ")");
    tensors.push_back(std::move(tu));
  }
  bool each = true;
  for (const auto& tu : tensors)
    if (!is_irreducible(module_of(tu), rng)) each = false;

  bool inj = each, exh = each;
  std::vector<Representation> over;
  for (auto& v : enumerate_irreducibles(g, f, rng))
    if (lies_over(v, w, n, rng)) over.push_back(std::move(v));
  const bool count = over.size() == tensors.size();
  if (each) {
    for (size_t i = 0; i < tensors.size(); ++i)
      for (size_t j = i + 1; j < tensors.size(); ++j)
        if (tensors[i].dim() == tensors[j].dim() &&
            is_isomorphic_irreducible(module_of(tensors[i]), module_of(tensors[j])))
          inj = false;
    for (const auto& v : over) {
      bool hit = false;
      for (const auto& tu : tensors)
        if (tu.dim() == v.dim() && is_isomorphic_irreducible(module_of(tu), module_of(v))) {
          hit = true;
          break;
        }
      if (!hit) exh = false;
    }
  }
  return GallagherReport{std::move(tensors), each, inj, exh, count};
}

ProductReport verify_direct_product(const GroupPtr& g1, const GroupPtr& g2, PrimeField f,
                                    std::mt19937_64& rng) {
  const GroupPtr product = direct_product(g1, g2);
  const auto irr1 = enumerate_irreducibles(g1, f, rng);
  const auto irr2 = enumerate_irreducibles(g2, f, rng);
  const auto irrp = enumerate_irreducibles(product, f, rng);

  std::vector<char> scalar2(irr2.size());
  for (size_t i = 0; i < irr2.size(); ++i)
    scalar2[i] = end_ring(module_of(irr2[i])).size() == 1;

  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  std::vector<Representation> outer;
  for (uint32_t i1 = 0; i1 < irr1.size(); ++i1)
    for (uint32_t i2 = 0; i2 < irr2.size(); ++i2)
      if (scalar2[i2]) {
        pairs.emplace_back(i1, i2);
        outer.push_back(outer_tensor(product, irr1[i1], irr2[i2]));
      }

  bool each = true;
  for (const auto& v : outer)
    if (!is_irreducible(module_of(v), rng)) each = false;
  bool distinct = each;
  if (each)
    for (size_t i = 0; i < outer.size(); ++i)
      for (size_t j = i + 1; j < outer.size(); ++j)
        if (outer[i].dim() == outer[j].dim() &&
            is_isomorphic_irreducible(module_of(outer[i]), module_of(outer[j])))
          distinct = false;

  // second factor inside the product: the elements (e, b)
  std::vector<uint32_t> members2(g2->order());
  for (uint32_t b = 0; b < g2->order(); ++b) members2[b] = b;
  const Subgroup sub2(product, std::move(members2));

  bool covers = each;
  for (const auto& v : irrp) {
    bool matched = false;
    if (each)
      for (const auto& o : outer)
        if (o.dim() == v.dim() && is_isomorphic_irreducible(module_of(o), module_of(v))) {
          matched = true;
          break;
        }
    if (matched) continue;
    // unmatched classes are allowed only when their second-factor part has
    // extra endomorphisms
    for (const auto& fa : composition_factors(module_of(restrict_rep(v, sub2)), rng))
      if (end_ring(fa).size() == 1) covers = false;
  }

  std::vector<uint32_t> pdims, odims;
  for (const auto& v : irrp) pdims.push_back(v.dim());
  for (const auto& v : outer) odims.push_back(v.dim());
  std::sort(pdims.begin(), pdims.end());
  std::sort(odims.begin(), odims.end());

  return ProductReport{std::move(pairs),  std::move(outer), uint32_t(irrp.size()),
                       std::move(pdims), std::move(odims), each,
                       distinct,          covers};
}

MatrixF frobenius_hat(const MatrixF& f_map, const Representation& w, const Subgroup& h,
                      const Representation& v) {
  if (!same_group_table(*w.group(), *h.group()))
    throw std::invalid_argument("frobenius_hat: module is not over the given subgroup");
  if (!same_group_table(*v.group(), *h.parent()))
    throw std::invalid_argument("frobenius_hat: target is not over the parent group");
  if (v.field().modulus() != w.field().modulus())
    throw std::invalid_argument("frobenius_hat: modules over different fields");
  if (f_map.rows() != v.dim() || f_map.cols() != w.dim())
    throw std::invalid_argument("frobenius_hat: shape mismatch");
  for (uint32_t i = 0; i < h.order(); ++i)
    if (f_map * w.image(i) != v.image(h.to_parent(i)) * f_map)
      throw std::invalid_argument("frobenius_hat: input is not an intertwiner");
  const Transversal tr = left_transversal(h);
  MatrixF out(v.field(), v.dim(), uint32_t(tr.reps.size()) * w.dim());
  for (uint32_t i = 0; i < tr.reps.size(); ++i) {
    const MatrixF blk = v.image(tr.reps[i]) * f_map;
    for (uint32_t r = 0; r < v.dim(); ++r)
      for (uint32_t j = 0; j < w.dim(); ++j) out.set(r, i * w.dim() + j, blk.at(r, j));
  }
  return out;
}

FrobeniusReport verify_frobenius(const Representation& w, const Subgroup& h,
                                 const Representation& v) {
  const auto lhs = hom_basis(module_of(w), module_of(restrict_rep(v, h)));
  const Representation ind = induce(w, h);
  const auto rhs = hom_basis(module_of(ind), module_of(v));
  const bool dims = lhs.size() == rhs.size();

  bool rt = true;
  for (const auto& fm : lhs) {
    const MatrixF fh = frobenius_hat(fm, w, h, v);
    for (uint32_t a = 0; a < v.group()->order(); ++a)
      if (fh * ind.image(a) != v.image(a) * fh) {
        rt = false;
        break;
      }
  }
  for (const auto& fm : rhs) {
    MatrixF f0(v.field(), v.dim(), w.dim());
    for (uint32_t r = 0; r < v.dim(); ++r)
      for (uint32_t j = 0; j < w.dim(); ++j) f0.set(r, j, fm.at(r, j));
    if (frobenius_hat(f0, w, h, v) != fm) rt = false;
  }

  bool central = true;
  for (uint32_t z : v.group()->center())
    if (h.contains(z))
      for (const auto& fm : lhs)
        if (frobenius_hat(v.image(z) * fm, w, h, v) != v.image(z) * frobenius_hat(fm, w, h, v))
          central = false;

  return FrobeniusReport{uint32_t(lhs.size()), uint32_t(rhs.size()), dims, rt, central};
}

bool is_split_extension(const GroupPtr& g, const Subgroup& n) {
  const uint32_t index = g->order() / n.order();
  for (const auto& h : all_subgroups(g))
    if (h.order() == index && intersect_subgroups(h, n).order() == 1) return true;
  return false;
}

CollapseReport inertia_collapse_conditions(const Representation& w, const Subgroup& n,
                                           std::mt19937_64& rng) {
  const GroupPtr& g = n.parent();
  const PrimeField f = w.field();
  const Representation indw = induce(w, n);
  CollapseReport rep;
  rep.untestable =
      "conditions quantifying over algebraically closed base fields are not evaluated: "
      "no finite field is algebraically closed";
  rep.hypothesis_ok = is_irreducible(module_of(indw), rng);
  if (!rep.hypothesis_ok) return rep;

  const InertiaResult in = inertia_group(w, n, rng);
  rep.t_equals_n = in.t.same_members(n);

  {
    const auto d = end_ring(module_of(w));
    const auto e = end_ring(module_of(indw));
    std::vector<MatrixF> hats;
    bool well_formed = true;
    for (const auto& fd : d) {
      MatrixF incl(f, indw.dim(), w.dim());
      for (uint32_t j = 0; j < w.dim(); ++j) incl.set(j, j, 1);
      const MatrixF hat = frobenius_hat(incl * fd, w, n, indw);
      for (uint32_t s : g->generators())
        if (hat * indw.image(s) != indw.image(s) * hat) well_formed = false;
      hats.push_back(hat);
    }
    const MatrixF span = flatten_rows(f, hats);
    rep.cond_a =
        (well_formed && rank(span) == e.size()) ? CondStatus::Holds : CondStatus::Fails;
  }

  if (end_ring(module_of(w)).size() == 1) {
    const Subgroup nt = subgroup_within(in.t, n);
    const ProjectiveRep xt = extend_to_projective(w, nt, rng);
    rep.cond_e =
        trivializer(xt.alpha, nt.members()).has_value() ? CondStatus::Holds : CondStatus::Fails;
  } else {
    rep.cond_e = CondStatus::NotEvaluated;
  }

  {
    const Subgroup nt = subgroup_within(in.t, n);
    rep.cond_f = (w.dim() == 1 && is_split_extension(in.t.group(), nt)) ? CondStatus::Holds
                                                                        : CondStatus::Fails;
  }
  return rep;
}

}  // namespace cforge
