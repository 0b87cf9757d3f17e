#include "rep.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "error.hpp"

namespace cforge {
namespace {

std::string elt(uint32_t g) { return "g" + std::to_string(g); }

std::vector<std::string> default_labels(uint32_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (uint32_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

}  // namespace

SparseMat SparseBuilder::build() {
  SparseMat m;
  m.n = n_;
  m.row_start.assign(n_ + 1, 0);
  for (uint32_t r = 0; r < n_; ++r) {
    auto& row = rows_[r];
    std::sort(row.begin(), row.end());
    for (size_t i = 1; i < row.size(); ++i)
      if (row[i].first == row[i - 1].first)
        throw std::logic_error("sparse builder: duplicate entry in row " + std::to_string(r));
    m.row_start[r + 1] = m.row_start[r] + uint32_t(row.size());
    for (auto [c, v] : row) {
      m.col.push_back(c);
      m.val.push_back(v);
    }
  }
  return m;
}

SparseMat sparse_identity(uint32_t n) {
  SparseBuilder b(n);
  for (uint32_t i = 0; i < n; ++i) b.add(i, i, 1);
  return b.build();
}

SparseMat sparse_from_dense(const MatrixF& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("sparse_from_dense: matrix not square");
  SparseBuilder b(m.rows());
  for (uint32_t r = 0; r < m.rows(); ++r)
    for (uint32_t c = 0; c < m.cols(); ++c) b.add(r, c, m.at(r, c));
  return b.build();
}

MatrixF sparse_to_dense(PrimeField f, const SparseMat& m) {
  MatrixF out(f, m.n, m.n);
  for (uint32_t r = 0; r < m.n; ++r)
    for (uint32_t i = m.row_start[r]; i < m.row_start[r + 1]; ++i)
      out.set(r, m.col[i], m.val[i]);
  return out;
}

SparseMat sparse_mul(PrimeField f, const SparseMat& a, const SparseMat& b) {
  if (a.n != b.n) throw std::invalid_argument("sparse_mul: size mismatch");
  SparseBuilder out(a.n);
  std::vector<uint32_t> acc(a.n, 0);
  std::vector<uint32_t> touched;
  for (uint32_t r = 0; r < a.n; ++r) {
    touched.clear();
    for (uint32_t i = a.row_start[r]; i < a.row_start[r + 1]; ++i) {
      const uint32_t k = a.col[i], av = a.val[i];
      for (uint32_t j = b.row_start[k]; j < b.row_start[k + 1]; ++j) {
        const uint32_t c = b.col[j];
        if (!acc[c]) touched.push_back(c);
        acc[c] = f.add(acc[c], f.mul(av, b.val[j]));
      }
    }
    for (uint32_t c : touched) {
      out.add(r, c, acc[c]);
      acc[c] = 0;
    }
  }
  return out.build();
}

SparseMat sparse_kron(PrimeField f, const SparseMat& a, const SparseMat& b) {
  SparseBuilder out(a.n * b.n);
  for (uint32_t r1 = 0; r1 < a.n; ++r1)
    for (uint32_t i = a.row_start[r1]; i < a.row_start[r1 + 1]; ++i)
      for (uint32_t r2 = 0; r2 < b.n; ++r2)
        for (uint32_t j = b.row_start[r2]; j < b.row_start[r2 + 1]; ++j)
          out.add(r1 * b.n + r2, a.col[i] * b.n + b.col[j], f.mul(a.val[i], b.val[j]));
  return out.build();
}

std::vector<uint32_t> sparse_apply(PrimeField f, const SparseMat& m,
                                   const std::vector<uint32_t>& v) {
  if (v.size() != m.n) throw std::invalid_argument("sparse_apply: size mismatch");
  std::vector<uint32_t> out(m.n, 0);
  for (uint32_t r = 0; r < m.n; ++r)
    for (uint32_t i = m.row_start[r]; i < m.row_start[r + 1]; ++i)
      out[r] = f.add(out[r], f.mul(m.val[i], v[m.col[i]]));
  return out;
}

bool same_group_table(const GroupTable& a, const GroupTable& b) {
  if (&a == &b) return true;
  if (a.order() != b.order()) return false;
  for (uint32_t x = 0; x < a.order(); ++x)
    for (uint32_t y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

Representation::Representation(GroupPtr group, PrimeField field, uint32_t dim,
                               std::vector<SparseMat> images,
                               std::vector<std::string> basis_labels, bool full_check)
    : group_(std::move(group)),
      field_(field),
      dim_(dim),
      images_(std::move(images)),
      labels_(std::move(basis_labels)) {
  const uint32_t n = group_->order();
  if (images_.size() != n) throw std::invalid_argument("representation: one image per element required");
  for (const auto& m : images_)
    if (m.n != dim_) throw std::invalid_argument("representation: image size differs from dim");
  if (labels_.empty()) labels_ = default_labels(dim_);
  if (labels_.size() != dim_) throw std::invalid_argument("representation: one basis label per dimension");
  if (images_[GroupTable::identity()] != sparse_identity(dim_))
    throw std::invalid_argument("representation: identity must act as the identity matrix");

  if (full_check) {
    check_homomorphism_full();
    return;
  }
  // images multiplicative on generators x everything, which extends to all
  // pairs along generator words
  for (uint32_t s : group_->generators())
    for (uint32_t g = 0; g < n; ++g)
      if (sparse_mul(field_, images_[s], images_[g]) != images_[group_->mul(s, g)])
        throw std::invalid_argument("representation: multiplicative law fails at (" + elt(s) +
                                    ", " + elt(g) + ")");
}

std::vector<MatrixF> Representation::generator_images() const {
  std::vector<MatrixF> out;
  for (uint32_t s : group_->generators()) out.push_back(image(s));
  return out;
}

void Representation::check_homomorphism_full() const {
  const uint32_t n = group_->order();
  std::vector<MatrixF> dense;
  dense.reserve(n);
  for (uint32_t g = 0; g < n; ++g) dense.push_back(image(g));
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      if (dense[a] * dense[b] != dense[group_->mul(a, b)])
        throw std::invalid_argument("representation: multiplicative law fails at (" + elt(a) +
                                    ", " + elt(b) + ")");
}

Representation rep_from_generators(const GroupPtr& g, PrimeField f,
                                   const std::vector<MatrixF>& gen_images) {
  const auto& gens = g->generators();
  if (gen_images.size() != gens.size())
    throw std::invalid_argument("rep_from_generators: need exactly one image per generator");
  uint32_t dim = gen_images.empty() ? 1 : gen_images[0].rows();
  for (const auto& m : gen_images) {
    if (m.rows() != m.cols() || m.rows() != dim)
      throw std::invalid_argument("rep_from_generators: images must be square of equal size");
    if (m.field().modulus() != f.modulus())
      throw std::invalid_argument("rep_from_generators: image over wrong field");
  }

  const uint32_t n = g->order();
  std::vector<SparseMat> images(n);
  std::vector<char> known(n, 0);
  images[0] = sparse_identity(dim);
  known[0] = 1;
  std::vector<SparseMat> gen_sparse;
  for (const auto& m : gen_images) gen_sparse.push_back(sparse_from_dense(m));
  std::vector<uint32_t> queue = {0};
  for (size_t q = 0; q < queue.size(); ++q) {
    const uint32_t x = queue[q];
    for (size_t i = 0; i < gens.size(); ++i) {
      const uint32_t y = g->mul(x, gens[i]);
      if (known[y]) continue;
      images[y] = sparse_mul(f, images[x], gen_sparse[i]);
      known[y] = 1;
      queue.push_back(y);
    }
  }
  for (uint32_t x = 0; x < n; ++x)
    if (!known[x]) throw std::logic_error("rep_from_generators: generators fail to reach " + elt(x));
  return Representation(g, f, dim, std::move(images), {}, /*full_check=*/true);
}

Representation trivial_rep(const GroupPtr& g, PrimeField f) {
  std::vector<SparseMat> images(g->order(), sparse_identity(1));
  Representation v(g, f, 1, std::move(images), {"1"}, false);
  v.set_tag("triv");
  return v;
}

Representation regular_rep(const GroupPtr& g, PrimeField f) {
  const uint32_t n = g->order();
  std::vector<SparseMat> images;
  images.reserve(n);
  for (uint32_t a = 0; a < n; ++a) {
    SparseBuilder b(n);
    for (uint32_t h = 0; h < n; ++h) b.add(g->mul(a, h), h, 1);
    images.push_back(b.build());
  }
  std::vector<std::string> labels;
  for (uint32_t h = 0; h < n; ++h) labels.push_back(elt(h));
  Representation v(g, f, n, std::move(images), std::move(labels), false);
  v.set_tag("reg");
  return v;
}

Representation permutation_module(const Subgroup& h, PrimeField f) {
  const GroupPtr& g = h.parent();
  const Transversal t = left_transversal(h);
  const uint32_t m = uint32_t(t.reps.size());
  std::vector<SparseMat> images;
  images.reserve(g->order());
  for (uint32_t a = 0; a < g->order(); ++a) {
    SparseBuilder b(m);
    for (uint32_t i = 0; i < m; ++i) b.add(t.coset_of[g->mul(a, t.reps[i])], i, 1);
    images.push_back(b.build());
  }
  std::vector<std::string> labels;
  for (uint32_t r : t.reps) labels.push_back(elt(r) + "H");
  Representation v(g, f, m, std::move(images), std::move(labels), false);
  v.set_tag("perm[" + h.member_label() + "]");
  return v;
}

Representation restrict_rep(const Representation& v, const Subgroup& h) {
  if (!same_group_table(*v.group(), *h.parent()))
    throw std::invalid_argument("restrict_rep: subgroup is not a subgroup of the module's group");
  std::vector<SparseMat> images;
  images.reserve(h.order());
  for (uint32_t i = 0; i < h.order(); ++i) images.push_back(v.image_sparse(h.to_parent(i)));
  Representation out(h.group(), v.field(), v.dim(), std::move(images), v.basis_labels(), false);
  out.set_tag("res(" + v.tag() + ")");
  return out;
}

Representation induce(const Representation& w, const Subgroup& h) {
  if (!same_group_table(*w.group(), *h.group()))
    throw std::invalid_argument("induce: module is not over the given subgroup");
  const GroupPtr& g = h.parent();
  const PrimeField f = w.field();
  const Transversal t = left_transversal(h);
  const uint32_t m = uint32_t(t.reps.size());
  const uint32_t d = w.dim();
  std::vector<SparseMat> images;
  images.reserve(g->order());
  for (uint32_t a = 0; a < g->order(); ++a) {
    SparseBuilder b(m * d);
    for (uint32_t i = 0; i < m; ++i) {
      const uint32_t ax = g->mul(a, t.reps[i]);
      const uint32_t k = t.coset_of[ax];
      const uint32_t hh = g->mul(g->inv(t.reps[k]), ax);
      const SparseMat& block = w.image_sparse(h.to_sub(hh));
      for (uint32_t r = 0; r < d; ++r)
        for (uint32_t e = block.row_start[r]; e < block.row_start[r + 1]; ++e)
          b.add(k * d + r, i * d + block.col[e], block.val[e]);
    }
    images.push_back(b.build());
  }
  std::vector<std::string> labels;
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < d; ++j)
      labels.push_back(elt(t.reps[i]) + "*" + w.basis_labels()[j]);
  Representation out(g, f, m * d, std::move(images), std::move(labels), false);
  out.set_tag("ind[" + h.member_label() + "](" + w.tag() + ")");
  return out;
}

Representation tensor(const Representation& a, const Representation& b) {
  if (!same_group_table(*a.group(), *b.group()))
    throw std::invalid_argument("tensor: modules over different groups");
  if (a.field().modulus() != b.field().modulus())
    throw std::invalid_argument("tensor: modules over different fields");
  std::vector<SparseMat> images;
  images.reserve(a.group()->order());
  for (uint32_t g = 0; g < a.group()->order(); ++g)
    images.push_back(sparse_kron(a.field(), a.image_sparse(g), b.image_sparse(g)));
  std::vector<std::string> labels;
  for (const auto& la : a.basis_labels())
    for (const auto& lb : b.basis_labels()) labels.push_back(la + "*" + lb);
  Representation out(a.group(), a.field(), a.dim() * b.dim(), std::move(images),
                     std::move(labels), false);
  out.set_tag(a.tag() + "*" + b.tag());
  return out;
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: no parts");
  uint32_t dim = 0;
  for (const auto& p : parts) {
    if (!same_group_table(*p.group(), *parts[0].group()) ||
        p.field().modulus() != parts[0].field().modulus())
      throw std::invalid_argument("direct_sum: parts over different groups or fields");
    dim += p.dim();
  }
  std::vector<SparseMat> images;
  std::vector<std::string> labels;
  for (uint32_t g = 0; g < parts[0].group()->order(); ++g) {
    SparseBuilder b(dim);
    uint32_t off = 0;
    for (const auto& p : parts) {
      const SparseMat& m = p.image_sparse(g);
      for (uint32_t r = 0; r < m.n; ++r)
        for (uint32_t e = m.row_start[r]; e < m.row_start[r + 1]; ++e)
          b.add(off + r, off + m.col[e], m.val[e]);
      off += p.dim();
    }
    images.push_back(b.build());
  }
  for (size_t i = 0; i < parts.size(); ++i)
    for (const auto& l : parts[i].basis_labels())
      labels.push_back("s" + std::to_string(i) + "." + l);
  Representation out(parts[0].group(), parts[0].field(), dim, std::move(images),
                     std::move(labels), false);
  std::string tag;
  for (const auto& p : parts) tag += (tag.empty() ? "" : "+") + p.tag();
  out.set_tag(tag);
  return out;
}

Representation conjugate_module(const Representation& w, const Subgroup& n, uint32_t g) {
  if (!same_group_table(*w.group(), *n.group()))
    throw std::invalid_argument("conjugate_module: module is not over the given subgroup");
  const GroupPtr& p = n.parent();
  for (uint32_t x : n.members())
    if (!n.contains(p->conj(g, x)))
      throw std::invalid_argument("conjugate_module: " + elt(g) + " does not normalize the subgroup");
  std::vector<SparseMat> images;
  images.reserve(n.order());
  for (uint32_t i = 0; i < n.order(); ++i)
    images.push_back(w.image_sparse(n.to_sub(p->conj(g, n.to_parent(i)))));
  Representation out(n.group(), w.field(), w.dim(), std::move(images), w.basis_labels(), false);
  out.set_tag(w.tag() + "^" + elt(g));
  return out;
}

std::pair<Subgroup, Representation> transport_rep(const Representation& w, const Subgroup& h,
                                                  uint32_t g) {
  if (!same_group_table(*w.group(), *h.group()))
    throw std::invalid_argument("transport_rep: module is not over the given subgroup");
  const GroupPtr& p = h.parent();
  Subgroup k = conjugate_subgroup(h, g);
  const uint32_t ginv = p->inv(g);
  std::vector<SparseMat> images;
  images.reserve(k.order());
  for (uint32_t i = 0; i < k.order(); ++i)
    images.push_back(w.image_sparse(h.to_sub(p->conj(ginv, k.to_parent(i)))));
  Representation out(k.group(), w.field(), w.dim(), std::move(images), w.basis_labels(), false);
  out.set_tag(w.tag() + "^^" + elt(g));
  return {std::move(k), std::move(out)};
}

Representation outer_tensor(const GroupPtr& product, const Representation& v1,
                            const Representation& v2) {
  const uint32_t o1 = v1.group()->order(), o2 = v2.group()->order();
  if (product->order() != o1 * o2)
    throw std::invalid_argument("outer_tensor: group order is not the product of the factors");
  if (v1.field().modulus() != v2.field().modulus())
    throw std::invalid_argument("outer_tensor: modules over different fields");
  for (uint32_t a = 0; a < o1; ++a)
    for (uint32_t b = 0; b < o2; ++b)
      for (uint32_t c = 0; c < o1; ++c)
        for (uint32_t d = 0; d < o2; ++d)
          if (product->mul(a * o2 + b, c * o2 + d) !=
              v1.group()->mul(a, c) * o2 + v2.group()->mul(b, d))
            throw std::invalid_argument("outer_tensor: group is not the direct product in (a,b) order");
  std::vector<SparseMat> images;
  images.reserve(product->order());
  for (uint32_t a = 0; a < o1; ++a)
    for (uint32_t b = 0; b < o2; ++b)
      images.push_back(sparse_kron(v1.field(), v1.image_sparse(a), v2.image_sparse(b)));
  std::vector<std::string> labels;
  for (const auto& la : v1.basis_labels())
    for (const auto& lb : v2.basis_labels()) labels.push_back(la + "*" + lb);
  Representation out(product, v1.field(), v1.dim() * v2.dim(), std::move(images),
                     std::move(labels), false);
  out.set_tag(v1.tag() + "#" + v2.tag());
  return out;
}

std::string rep_to_text(const Representation& v, const std::string& group_ref) {
  std::ostringstream os;
  os << "rep " << group_ref << " dim " << v.dim() << " mod " << v.field().modulus() << "\n";
  for (uint32_t s : v.group()->generators()) {
    const MatrixF m = v.image(s);
    for (uint32_t r = 0; r < m.rows(); ++r) {
      for (uint32_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c);
      os << "\n";
    }
  }
  return os.str();
}

Representation rep_from_text(const std::string& text, const GroupPtr& g) {
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
  if (!next_line()) throw ParseError("empty module file", 1);
  std::istringstream hs(line);
  std::string kw, ref, dimkw, modkw;
  uint64_t dim = 0, p = 0;
  if (!(hs >> kw >> ref >> dimkw >> dim >> modkw >> p) || kw != "rep" || dimkw != "dim" ||
      modkw != "mod")
    throw ParseError("expected header 'rep <group> dim <d> mod <p>'", lineno);
  std::string extra;
  if (hs >> extra) throw ParseError("unexpected trailing token '" + extra + "'", lineno);
  if (dim == 0 || dim > 4096) throw ParseError("dim out of range", lineno);
  if (!is_prime_u32(uint32_t(p)) || p > 0xffffffffull)
    throw ParseError("modulus must be prime", lineno);
  const PrimeField f{uint32_t(p)};

  std::vector<MatrixF> gens;
  for (size_t s = 0; s < g->generators().size(); ++s) {
    MatrixF m(f, uint32_t(dim), uint32_t(dim));
    for (uint32_t r = 0; r < dim; ++r) {
      if (!next_line())
        throw ParseError("expected " + std::to_string(dim) + " rows for image " +
                                         std::to_string(s), lineno + 1);
      std::istringstream rs(line);
      for (uint32_t c = 0; c < dim; ++c) {
        int64_t v;
        if (!(rs >> v)) throw ParseError("row too short", lineno);
        if (v < 0 || uint64_t(v) >= p)
          throw ParseError("entry " + std::to_string(v) + " out of range [0, " +
                               std::to_string(p) + ")",
                           lineno);
        m.set(r, c, uint32_t(v));
      }
      std::string tail;
      if (rs >> tail) throw ParseError("row too long", lineno);
    }
    gens.push_back(std::move(m));
  }
  if (next_line()) throw ParseError("unexpected extra line", lineno);
  try {
    if (gens.empty())
      return Representation(g, f, uint32_t(dim),
                            std::vector<SparseMat>(g->order(), sparse_identity(uint32_t(dim))),
                            {}, false);
    return rep_from_generators(g, f, gens);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid module: ") + e.what(), 1);
  }
}

}  // namespace cforge
