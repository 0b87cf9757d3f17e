#include "mackey.hpp"

#include <stdexcept>

namespace cforge {

namespace {

std::string elt(uint32_t a) { return "g" + std::to_string(a); }

// column of the induced image rho(u) at basis (identity coset, a), i.e. the
// coordinates of u * (e (x) basis_a) in the induced module
std::vector<uint32_t> induced_column(const Representation& w, const Subgroup& h,
                                     const Transversal& t, uint32_t u, uint32_t a) {
  const GroupPtr& g = h.parent();
  const uint32_t d = w.dim();
  std::vector<uint32_t> out(t.reps.size() * d, 0);
  const uint32_t k = t.coset_of[u];
  const uint32_t hh = g->mul(g->inv(t.reps[k]), u);
  const SparseMat& img = w.image_sparse(h.to_sub(hh));
  for (uint32_t r = 0; r < d; ++r)
    for (uint32_t e = img.row_start[r]; e < img.row_start[r + 1]; ++e)
      if (img.col[e] == a) out[size_t(k) * d + r] = img.val[e];
  return out;
}

MatrixF hstack_all(const std::vector<MatrixF>& parts) {
  MatrixF out = parts.at(0);
  for (size_t i = 1; i < parts.size(); ++i) out = hstack(out, parts[i]);
  return out;
}

void require_same_parent(const Subgroup& a, const Subgroup& b, const char* who) {
  if (!same_group_table(*a.parent(), *b.parent()))
    throw std::invalid_argument(std::string(who) + ": subgroups of different groups");
}

void require_over(const Representation& v, const Subgroup& h, const char* who) {
  if (!same_group_table(*v.group(), *h.group()))
    throw std::invalid_argument(std::string(who) + ": module does not live over the subgroup");
}

}  // namespace

bool witness_checks(const MackeyWitness& w) {
  if (!same_group_table(*w.lhs.group(), *w.rhs.group())) return false;
  if (w.lhs.field().modulus() != w.rhs.field().modulus()) return false;
  if (w.lhs.dim() != w.rhs.dim()) return false;
  if (w.iso.rows() != w.lhs.dim() || w.iso.cols() != w.rhs.dim()) return false;
  uint32_t total = 0;
  for (const auto& b : w.block_map) total += b.dim;
  if (total != w.rhs.dim()) return false;
  if (rank(w.iso) != w.iso.cols()) return false;
  const PrimeField f = w.lhs.field();
  const SparseMat s = sparse_from_dense(w.iso);
  for (uint32_t a = 0; a < w.lhs.group()->order(); ++a)
    if (sparse_mul(f, s, w.rhs.image_sparse(a)) != sparse_mul(f, w.lhs.image_sparse(a), s))
      return false;
  return true;
}

std::string block_lines(const MackeyWitness& w) {
  std::string out;
  for (const auto& b : w.block_map)
    out += "block " + elt(b.coset_rep) + " dim " + std::to_string(b.dim) + " from " +
           b.construction + "\n";
  return out;
}

TensorBlock tensor_block(const Representation& v1, const Subgroup& h1, const Representation& v2,
                         const Subgroup& h2, uint32_t x, uint32_t y) {
  require_same_parent(h1, h2, "tensor_block");
  require_over(v1, h1, "tensor_block");
  require_over(v2, h2, "tensor_block");
  if (v1.field().modulus() != v2.field().modulus())
    throw std::invalid_argument("tensor_block: modules over different fields");
  const GroupPtr& g = h1.parent();
  const PrimeField f = v1.field();
  const uint32_t d1 = v1.dim(), d2 = v2.dim();

  Subgroup stab = intersect_subgroups(conjugate_subgroup(h1, x), conjugate_subgroup(h2, y));
  const GroupPtr st = stab.group();
  std::vector<SparseMat> imgs;
  imgs.reserve(st->order());
  for (uint32_t s = 0; s < st->order(); ++s) {
    const uint32_t u = stab.to_parent(s);
    const uint32_t c1 = g->mul(g->mul(g->inv(x), u), x);
    const uint32_t c2 = g->mul(g->mul(g->inv(y), u), y);
    imgs.push_back(
        sparse_kron(f, v1.image_sparse(h1.to_sub(c1)), v2.image_sparse(h2.to_sub(c2))));
  }
  Representation inner(st, f, d1 * d2, std::move(imgs), {}, false);
  inner.set_tag("V1^" + elt(x) + "*V2^" + elt(y));
  Representation block = induce(inner, stab);

  const Transversal t1 = left_transversal(h1);
  const Transversal t2 = left_transversal(h2);
  const Transversal ts = left_transversal(stab);
  const uint32_t n1 = uint32_t(t1.reps.size()) * d1;
  const uint32_t n2 = uint32_t(t2.reps.size()) * d2;
  MatrixF emb(f, n1 * n2, block.dim());
  for (uint32_t ti = 0; ti < uint32_t(ts.reps.size()); ++ti) {
    const uint32_t t = ts.reps[ti];
    std::vector<std::vector<uint32_t>> cols1, cols2;
    for (uint32_t a = 0; a < d1; ++a) cols1.push_back(induced_column(v1, h1, t1, g->mul(t, x), a));
    for (uint32_t b = 0; b < d2; ++b) cols2.push_back(induced_column(v2, h2, t2, g->mul(t, y), b));
    for (uint32_t a = 0; a < d1; ++a)
      for (uint32_t b = 0; b < d2; ++b) {
        const uint32_t col = ti * (d1 * d2) + a * d2 + b;
        for (uint32_t r1 = 0; r1 < n1; ++r1) {
          if (!cols1[a][r1]) continue;
          for (uint32_t r2 = 0; r2 < n2; ++r2)
            if (cols2[b][r2]) emb.set(r1 * n2 + r2, col, f.mul(cols1[a][r1], cols2[b][r2]));
        }
      }
  }
  return TensorBlock{std::move(stab), std::move(inner), std::move(block), std::move(emb)};
}

MatrixF pair_change_iso(const TensorBlock& a, const TensorBlock& b) {
  const auto z = solve(a.embedding, b.embedding);
  if (!z) throw std::invalid_argument("pair_change_iso: embeddings do not share a span");
  const MatrixF& m = *z;
  if (rank(m) != m.cols()) throw std::logic_error("pair_change_iso: change of basis is singular");
  const GroupPtr& g = a.block.group();
  for (uint32_t s = 0; s < g->order(); ++s)
    if (m * b.block.image(s) != a.block.image(s) * m)
      throw std::logic_error("pair_change_iso: result fails to intertwine at " + elt(s));
  return m;
}

MackeyWitness mackey_tensor(const Representation& v1, const Subgroup& h1,
                            const Representation& v2, const Subgroup& h2) {
  require_same_parent(h1, h2, "mackey_tensor");
  Representation lhs = tensor(induce(v1, h1), induce(v2, h2));
  const DoubleCosets dc = double_cosets(h1, h2);
  std::vector<Representation> blocks;
  std::vector<MatrixF> embs;
  std::vector<BlockInfo> map;
  for (uint32_t d : dc.reps) {
    TensorBlock tb = tensor_block(v1, h1, v2, h2, GroupTable::identity(), d);
    map.push_back(
        BlockInfo{d, GroupTable::identity(), d, tb.block.dim(), "ind(V1*V2^" + elt(d) + ")"});
    blocks.push_back(std::move(tb.block));
    embs.push_back(std::move(tb.embedding));
  }
  Representation rhs = direct_sum(blocks);
  MackeyWitness w{std::move(lhs), std::move(rhs), hstack_all(embs), std::move(map)};
  if (!witness_checks(w)) throw std::logic_error("mackey_tensor: witness verification failed");
  return w;
}

MackeyWitness mackey_restriction(const Representation& v, const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k, "mackey_restriction");
  require_over(v, h, "mackey_restriction");
  const GroupPtr& g = h.parent();
  const PrimeField f = v.field();
  const uint32_t d = v.dim();
  const Representation u = induce(v, h);
  Representation lhs = restrict_rep(u, k);
  const Transversal th = left_transversal(h);
  const DoubleCosets dc = double_cosets(k, h);
  std::vector<Representation> blocks;
  std::vector<MatrixF> embs;
  std::vector<BlockInfo> map;
  for (uint32_t x : dc.reps) {
    const Subgroup inter = intersect_subgroups(k, conjugate_subgroup(h, x));
    const Subgroup sk = subgroup_within(k, inter);
    const GroupPtr st = sk.group();
    std::vector<SparseMat> imgs;
    imgs.reserve(st->order());
    for (uint32_t s = 0; s < st->order(); ++s) {
      const uint32_t uG = k.to_parent(sk.to_parent(s));
      imgs.push_back(v.image_sparse(h.to_sub(g->mul(g->mul(g->inv(x), uG), x))));
    }
    Representation inner(st, f, d, std::move(imgs), v.basis_labels(), false);
    inner.set_tag("V^" + elt(x));
    Representation block = induce(inner, sk);
    const Transversal tk = left_transversal(sk);
    MatrixF emb(f, u.dim(), block.dim());
    for (uint32_t ti = 0; ti < uint32_t(tk.reps.size()); ++ti) {
      const uint32_t w0 = g->mul(k.to_parent(tk.reps[ti]), x);
      for (uint32_t a = 0; a < d; ++a) {
        const std::vector<uint32_t> col = induced_column(v, h, th, w0, a);
        for (uint32_t r = 0; r < u.dim(); ++r)
          if (col[r]) emb.set(r, ti * d + a, col[r]);
      }
    }
    map.push_back(BlockInfo{x, x, GroupTable::identity(), block.dim(), "ind(V^" + elt(x) + ")"});
    blocks.push_back(std::move(block));
    embs.push_back(std::move(emb));
  }
  Representation rhs = direct_sum(blocks);
  MackeyWitness w{std::move(lhs), std::move(rhs), hstack_all(embs), std::move(map)};
  if (!witness_checks(w)) throw std::logic_error("mackey_restriction: witness verification failed");
  return w;
}

MackeyWitness resext_iso(const Representation& w, const Subgroup& h, const Representation& v) {
  require_over(w, h, "resext_iso");
  if (!same_group_table(*v.group(), *h.parent()))
    throw std::invalid_argument("resext_iso: V does not live over the parent group");
  if (w.field().modulus() != v.field().modulus())
    throw std::invalid_argument("resext_iso: modules over different fields");
  const PrimeField f = w.field();
  Representation lhs = tensor(induce(w, h), v);
  Representation rhs = induce(tensor(w, restrict_rep(v, h)), h);
  const Transversal t = left_transversal(h);
  const uint32_t dw = w.dim(), dv = v.dim();
  MatrixF iso(f, lhs.dim(), rhs.dim());
  for (uint32_t i = 0; i < uint32_t(t.reps.size()); ++i) {
    const MatrixF vi = v.image(t.reps[i]);
    for (uint32_t a = 0; a < dw; ++a)
      for (uint32_t b = 0; b < dv; ++b)
        for (uint32_t bp = 0; bp < dv; ++bp)
          if (vi.at(bp, b)) iso.set((i * dw + a) * dv + bp, i * (dw * dv) + a * dv + b, vi.at(bp, b));
  }
  std::vector<BlockInfo> map{BlockInfo{GroupTable::identity(), GroupTable::identity(),
                                       GroupTable::identity(), rhs.dim(), "ind(W*res(V))"}};
  MackeyWitness out{std::move(lhs), std::move(rhs), std::move(iso), std::move(map)};
  if (!witness_checks(out)) throw std::logic_error("resext_iso: witness verification failed");
  return out;
}

MackeyWitness perm_tensor_corollary(const Subgroup& h1, const Representation& v2,
                                    const Subgroup& h2) {
  require_same_parent(h1, h2, "perm_tensor_corollary");
  require_over(v2, h2, "perm_tensor_corollary");
  const GroupPtr& g = h1.parent();
  const PrimeField f = v2.field();
  const uint32_t d2 = v2.dim();
  const Representation triv1 = trivial_rep(h1.group(), f);

  const MackeyWitness mt = mackey_tensor(triv1, h1, v2, h2);
  const MackeyWitness mr = mackey_restriction(v2, h2, h1);

  Representation lhs = tensor(permutation_module(h1, f), induce(v2, h2));
  for (uint32_t a = 0; a < g->order(); ++a)
    if (lhs.image_sparse(a) != mt.lhs.image_sparse(a))
      throw std::logic_error("perm_tensor_corollary: permutation module mismatch");
  Representation rhs = induce(mr.lhs, h1);

  const Transversal t1 = left_transversal(h1);
  const uint32_t n_cosets = uint32_t(t1.reps.size());
  const uint32_t inner_total = mr.lhs.dim();
  const uint32_t big = n_cosets * inner_total;
  const DoubleCosets dc = double_cosets(h1, h2);

  // transitivity of induction, one square block per double coset, in the same
  // order that mackey_tensor and mackey_restriction emitted their summands
  std::vector<MatrixF> tmats;
  std::vector<uint32_t> bdims;
  std::vector<BlockInfo> map;
  for (size_t di = 0; di < dc.reps.size(); ++di) {
    const uint32_t dd = dc.reps[di];
    const TensorBlock tb = tensor_block(triv1, h1, v2, h2, GroupTable::identity(), dd);
    const Subgroup sk = subgroup_within(h1, intersect_subgroups(h1, conjugate_subgroup(h2, dd)));
    const Transversal tk = left_transversal(sk);
    const Transversal ts = left_transversal(tb.stab);
    const uint32_t bdim = uint32_t(tk.reps.size()) * d2;
    if (bdim != mr.block_map.at(di).dim)
      throw std::logic_error("perm_tensor_corollary: summand misalignment");
    MatrixF t_d(f, tb.block.dim(), n_cosets * bdim);
    for (uint32_t i = 0; i < n_cosets; ++i)
      for (uint32_t j = 0; j < uint32_t(tk.reps.size()); ++j) {
        const uint32_t w0 = g->mul(t1.reps[i], h1.to_parent(tk.reps[j]));
        for (uint32_t b = 0; b < d2; ++b) {
          const std::vector<uint32_t> col = induced_column(tb.inner, tb.stab, ts, w0, b);
          for (uint32_t r = 0; r < tb.block.dim(); ++r)
            if (col[r]) t_d.set(r, i * bdim + j * d2 + b, col[r]);
        }
      }
    tmats.push_back(std::move(t_d));
    bdims.push_back(bdim);
    map.push_back(BlockInfo{dd, GroupTable::identity(), dd, tb.block.dim(),
                            "ind(V2^" + elt(dd) + ") via H1"});
  }

  // reorder the induced direct sum so each summand's copies sit together
  MatrixF p1t(f, big, big);
  {
    uint32_t sum_off = 0, inner_off = 0;
    for (const uint32_t bdim : bdims) {
      for (uint32_t i = 0; i < n_cosets; ++i)
        for (uint32_t c = 0; c < bdim; ++c)
          p1t.set(sum_off + i * bdim + c, i * inner_total + inner_off + c, 1);
      sum_off += n_cosets * bdim;
      inner_off += bdim;
    }
  }
  const auto mr_inv = inverse(mr.iso);
  if (!mr_inv) throw std::logic_error("perm_tensor_corollary: restriction witness not invertible");
  const MatrixF iw_inv = block_diag(std::vector<MatrixF>(n_cosets, *mr_inv));
  const MatrixF iso = mt.iso * block_diag(tmats) * p1t * iw_inv;

  MackeyWitness out{std::move(lhs), std::move(rhs), iso, std::move(map)};
  if (!witness_checks(out))
    throw std::logic_error("perm_tensor_corollary: witness verification failed");
  return out;
}

}  // namespace cforge
