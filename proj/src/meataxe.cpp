#include "meataxe.hpp"

#include <algorithm>
#include <cmath>

namespace cforge {
namespace {

// insertion-ordered echelon span with pivot bookkeeping; rows are reduced
// against earlier rows on entry, so one in-order pass decides membership
class VecSpan {
 public:
  VecSpan(PrimeField f, uint32_t n) : f_(f), n_(n) {}

  void reduce(std::vector<uint32_t>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const uint32_t c = v[pivots_[r]];
      if (!c) continue;
      const auto& row = rows_[r];
      for (uint32_t i = 0; i < n_; ++i) v[i] = f_.sub(v[i], f_.mul(c, row[i]));
    }
  }

  bool add(std::vector<uint32_t> v) {
    reduce(v);
    uint32_t piv = n_;
    for (uint32_t i = 0; i < n_; ++i)
      if (v[i]) {
        piv = i;
        break;
      }
    if (piv == n_) return false;
    const uint32_t s = f_.inv(v[piv]);
    for (auto& x : v) x = f_.mul(x, s);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  size_t size() const { return rows_.size(); }
  const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }

 private:
  PrimeField f_;
  uint32_t n_;
  std::vector<std::vector<uint32_t>> rows_;
  std::vector<uint32_t> pivots_;
};

std::vector<uint32_t> matvec(const MatrixF& m, const std::vector<uint32_t>& v) {
  const PrimeField f = m.field();
  std::vector<uint32_t> out(m.rows(), 0);
  for (uint32_t i = 0; i < m.rows(); ++i) {
    uint64_t acc = 0;
    const uint32_t* row = m.row(i);
    for (uint32_t j = 0; j < m.cols(); ++j) acc += uint64_t(row[j]) * v[j];
    out[i] = uint32_t(acc % f.modulus());
  }
  return out;
}

MatrixF columns_of(PrimeField f, uint32_t n, const std::vector<std::vector<uint32_t>>& cols) {
  MatrixF out(f, n, uint32_t(cols.size()));
  for (uint32_t j = 0; j < cols.size(); ++j)
    for (uint32_t i = 0; i < n; ++i) out.set(i, j, cols[j][i]);
  return out;
}

std::vector<uint32_t> vectorize(const MatrixF& m) {
  std::vector<uint32_t> v(size_t(m.rows()) * m.cols());
  for (uint32_t i = 0; i < m.rows(); ++i)
    for (uint32_t j = 0; j < m.cols(); ++j) v[size_t(i) * m.cols() + j] = m.at(i, j);
  return v;
}

Polynomial poly_derivative(const Polynomial& f) {
  const PrimeField k = f.field();
  std::vector<uint32_t> c;
  for (int i = 1; i <= f.degree(); ++i) c.push_back(k.mul(f.coeff(uint32_t(i)), uint32_t(i) % k.modulus()));
  return Polynomial(k, std::move(c));
}

Polynomial equal_degree_split(const Polynomial& f, uint32_t piece_deg, std::mt19937_64& rng) {
  const PrimeField k = f.field();
  const uint32_t p = k.modulus();
  const uint32_t d = uint32_t(f.degree());
  if (p != 2 && piece_deg * std::log2(double(p)) > 62)
    throw MeataxeUndecided("equal-degree split: exponent exceeds supported range");
  for (int attempt = 0; attempt < 128; ++attempt) {
    std::vector<uint32_t> uc(d);
    for (auto& c : uc) c = uint32_t(rng() % p);
    Polynomial u(k, std::move(uc));
    if (u.is_zero()) continue;
    Polynomial g0 = poly_gcd(f, u);
    if (g0.degree() > 0 && g0.degree() < f.degree()) return g0;
    Polynomial h(k);
    if (p == 2) {
      // trace map: u + u^2 + ... + u^{2^{piece_deg - 1}}
      Polynomial t = poly_mod(u, f);
      h = t;
      for (uint32_t j = 1; j < piece_deg; ++j) {
        t = poly_powmod(t, 2, f);
        h = h + t;
      }
    } else {
      // u^{(p^piece_deg - 1)/2} - 1
      uint64_t q = 1;
      for (uint32_t j = 0; j < piece_deg; ++j) q *= p;
      h = poly_powmod(u, (q - 1) / 2, f) - Polynomial::constant(k, 1);
    }
    Polynomial g = poly_gcd(f, h);
    if (g.degree() > 0 && g.degree() < f.degree()) return g;
  }
  throw MeataxeUndecided("equal-degree split failed within the attempt budget");
}

enum class Verdict { Reducible, Irreducible, Unknown };

struct NortonOutcome {
  Verdict v = Verdict::Unknown;
  MatrixF submodule;
};

// Decisive singular-element test. theta must be a nonzero singular element of
// the acting algebra. If every line of ker(theta) spins to the whole space and
// one dual vector spins to the whole dual, no proper submodule can exist: a
// submodule meeting the kernel would contain one of the spun lines, and one
// avoiding it would sit inside im(theta), annihilated by the dual spin.
NortonOutcome norton(const AlgebraModule& m, const MatrixF& theta, uint64_t line_cap,
                     std::mt19937_64& rng) {
  const PrimeField f = m.field;
  const uint32_t n = m.dim;
  const MatrixF ker = nullspace_basis(theta);
  const uint32_t k = ker.cols();
  if (k == 0 || k == n) return {};

  uint64_t lines_seen = 0;
  bool truncated = false;
  for (uint32_t lead = 0; lead < k && !truncated; ++lead) {
    std::vector<uint32_t> c(k, 0);
    c[lead] = 1;
    while (true) {
      if (++lines_seen > line_cap) {
        truncated = true;
        break;
      }
      const std::vector<uint32_t> v = matvec(ker, c);
      const MatrixF s = spin(m, columns_of(f, n, {v}));
      if (s.cols() < n) return {Verdict::Reducible, s};
      // odometer over the coordinates after the leading 1
      uint32_t pos = lead + 1;
      while (pos < k) {
        c[pos] = f.add(c[pos], 1);
        if (c[pos]) break;
        ++pos;
      }
      if (pos == k) break;
    }
  }
  if (truncated) {
    // partial sweep: sample a few random kernel vectors for a cheap hit
    for (int t = 0; t < 32; ++t) {
      std::vector<uint32_t> c(k);
      for (auto& x : c) x = uint32_t(rng() % f.modulus());
      const std::vector<uint32_t> v = matvec(ker, c);
      if (std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; })) continue;
      const MatrixF s = spin(m, columns_of(f, n, {v}));
      if (s.cols() < n) return {Verdict::Reducible, s};
    }
    return {};
  }

  const AlgebraModule dual = transposed_module(m);
  const MatrixF dker = nullspace_basis(theta.transposed());
  std::vector<uint32_t> w(n);
  for (uint32_t i = 0; i < n; ++i) w[i] = dker.at(i, 0);
  const MatrixF ds = spin(dual, columns_of(f, n, {w}));
  if (ds.cols() == n) return {Verdict::Irreducible, {}};
  return {Verdict::Reducible, nullspace_basis(ds.transposed())};
}

MatrixF random_algebra_element(const AlgebraModule& m, std::mt19937_64& rng) {
  const PrimeField f = m.field;
  MatrixF x(f, m.dim, m.dim);
  const uint32_t terms = 1 + uint32_t(rng() % 3);
  for (uint32_t t = 0; t < terms; ++t) {
    MatrixF w = MatrixF::identity(f, m.dim);
    const uint32_t len = 1 + uint32_t(rng() % 5);
    for (uint32_t i = 0; i < len; ++i) w = w * m.gens[rng() % m.gens.size()];
    const uint32_t c = f.modulus() == 2 ? 1 : 1 + uint32_t(rng() % (f.modulus() - 1));
    x = x + w.scaled(c);
  }
  return x;
}

// nonzero singular element manufactured from b, if its minimal polynomial
// shows one: either t divides it, or a proper factor evaluates to a zero
// divisor
std::optional<MatrixF> singular_from(const MatrixF& b, std::mt19937_64& rng) {
  if (b.is_zero()) return std::nullopt;
  const Polynomial f = min_poly(b);
  if (f.coeff(0) == 0) return b;
  const auto g = nontrivial_factor(f, rng);
  if (!g) return std::nullopt;
  return eval_poly_at(*g, b);
}

void check_module(const AlgebraModule& m) {
  if (m.dim == 0) throw std::invalid_argument("module of dimension zero");
  for (const auto& g : m.gens)
    if (g.rows() != m.dim || g.cols() != m.dim || g.field().modulus() != m.field.modulus())
      throw std::invalid_argument("module generator of wrong shape or field");
}

MatrixF standard_column(PrimeField f, uint32_t n, uint32_t i) {
  MatrixF e(f, n, 1);
  e.set(i, 0, 1);
  return e;
}

}  // namespace

AlgebraModule module_of(const Representation& v) {
  return {v.field(), v.dim(), v.generator_images()};
}

AlgebraModule transposed_module(const AlgebraModule& m) {
  AlgebraModule out{m.field, m.dim, {}};
  for (const auto& g : m.gens) out.gens.push_back(g.transposed());
  return out;
}

MatrixF spin(const AlgebraModule& m, const MatrixF& seed_cols) {
  check_module(m);
  if (seed_cols.rows() != m.dim) throw std::invalid_argument("spin: seed of wrong height");
  VecSpan span(m.field, m.dim);
  std::vector<std::vector<uint32_t>> work;
  for (uint32_t j = 0; j < seed_cols.cols(); ++j) {
    std::vector<uint32_t> v(m.dim);
    for (uint32_t i = 0; i < m.dim; ++i) v[i] = seed_cols.at(i, j);
    if (span.add(v)) work.push_back(span.rows().back());
  }
  for (size_t q = 0; q < work.size(); ++q) {
    if (span.size() == m.dim) break;
    const std::vector<uint32_t> v = work[q];
    for (const auto& g : m.gens) {
      if (span.add(matvec(g, v))) work.push_back(span.rows().back());
      if (span.size() == m.dim) break;
    }
  }
  return columns_of(m.field, m.dim, span.rows());
}

std::vector<MatrixF> enveloping_basis(const AlgebraModule& m, uint32_t max_dim) {
  check_module(m);
  const size_t cell_cap = size_t(1) << 23;
  VecSpan span(m.field, m.dim * m.dim);
  std::vector<MatrixF> basis;
  std::vector<size_t> work;
  const MatrixF id = MatrixF::identity(m.field, m.dim);
  span.add(vectorize(id));
  basis.push_back(id);
  work.push_back(0);
  for (size_t q = 0; q < work.size(); ++q) {
    for (const auto& g : m.gens) {
      MatrixF cand = basis[work[q]] * g;
      if (!span.add(vectorize(cand))) continue;
      basis.push_back(std::move(cand));
      work.push_back(basis.size() - 1);
      if (basis.size() > max_dim || basis.size() * size_t(m.dim) * m.dim > cell_cap)
        throw MeataxeUndecided("enveloping algebra exceeds the supported size");
    }
  }
  return basis;
}

ChopResult chop(const AlgebraModule& m, std::mt19937_64& rng) {
  check_module(m);
  if (m.dim == 1) return {true, {}};
  if (m.gens.empty())
    return {false, standard_column(m.field, m.dim, 0)};

  constexpr uint64_t kLineCap = 4096;
  for (int t = 0; t < 200; ++t) {
    const MatrixF b = t < int(m.gens.size()) ? m.gens[t] : random_algebra_element(m, rng);
    const auto theta = singular_from(b, rng);
    if (!theta) continue;
    const NortonOutcome out = norton(m, *theta, kLineCap, rng);
    if (out.v == Verdict::Reducible) return {false, out.submodule};
    if (out.v == Verdict::Irreducible) return {true, {}};
  }

  // deterministic endgame: classify the full enveloping algebra
  const std::vector<MatrixF> basis = enveloping_basis(m);
  const FieldRecognition rec = recognize_field(basis, m.field, rng);
  if (rec.kind == FieldRecognition::Field) {
    if (rec.degree == m.dim) return {true, {}};
    // the algebra is a field smaller than the space: any orbit is proper
    return {false, spin(m, standard_column(m.field, m.dim, 0))};
  }
  if (rec.kind == FieldRecognition::NotField) {
    const NortonOutcome out = norton(m, rec.singular_witness, kLineCap * 16, rng);
    if (out.v == Verdict::Reducible) return {false, out.submodule};
    if (out.v == Verdict::Irreducible) return {true, {}};
    throw MeataxeUndecided("singular certificate has a kernel too large to sweep");
  }
  throw MeataxeUndecided("algebra recognition budget exhausted");
}

bool is_irreducible(const AlgebraModule& m, std::mt19937_64& rng) {
  return chop(m, rng).irreducible;
}

SubQuotient split_along(const AlgebraModule& m, const MatrixF& submodule_cols) {
  check_module(m);
  const uint32_t n = m.dim, k = submodule_cols.cols();
  if (k == 0 || k >= n || submodule_cols.rows() != n)
    throw std::invalid_argument("split_along: subspace is not nonzero and proper");
  VecSpan span(m.field, n);
  for (uint32_t j = 0; j < k; ++j) {
    std::vector<uint32_t> v(n);
    for (uint32_t i = 0; i < n; ++i) v[i] = submodule_cols.at(i, j);
    if (!span.add(v)) throw std::invalid_argument("split_along: dependent subspace columns");
  }
  MatrixF basis(m.field, n, n);
  for (uint32_t j = 0; j < k; ++j)
    for (uint32_t i = 0; i < n; ++i) basis.set(i, j, submodule_cols.at(i, j));
  uint32_t col = k;
  for (uint32_t i = 0; i < n && col < n; ++i) {
    std::vector<uint32_t> e(n, 0);
    e[i] = 1;
    if (!span.add(e)) continue;
    basis.set(i, col, 1);
    ++col;
  }
  const auto inv = inverse(basis);
  if (!inv) throw std::logic_error("split_along: basis completion failed");

  SubQuotient out{{m.field, k, {}}, {m.field, n - k, {}}, basis};
  for (const auto& g : m.gens) {
    const MatrixF t = *inv * (g * basis);
    MatrixF gs(m.field, k, k), gq(m.field, n - k, n - k);
    for (uint32_t i = k; i < n; ++i)
      for (uint32_t j = 0; j < k; ++j)
        if (t.at(i, j) != 0)
          throw std::invalid_argument("split_along: subspace is not invariant");
    for (uint32_t i = 0; i < k; ++i)
      for (uint32_t j = 0; j < k; ++j) gs.set(i, j, t.at(i, j));
    for (uint32_t i = k; i < n; ++i)
      for (uint32_t j = k; j < n; ++j) gq.set(i - k, j - k, t.at(i, j));
    out.sub.gens.push_back(std::move(gs));
    out.quot.gens.push_back(std::move(gq));
  }
  return out;
}

std::vector<AlgebraModule> composition_factors(const AlgebraModule& m, std::mt19937_64& rng) {
  std::vector<AlgebraModule> out;
  std::vector<AlgebraModule> stack{m};
  while (!stack.empty()) {
    AlgebraModule cur = std::move(stack.back());
    stack.pop_back();
    const ChopResult ch = chop(cur, rng);
    if (ch.irreducible) {
      out.push_back(std::move(cur));
      continue;
    }
    SubQuotient sq = split_along(cur, ch.submodule);
    stack.push_back(std::move(sq.quot));
    stack.push_back(std::move(sq.sub));
  }
  return out;
}

std::vector<MatrixF> hom_basis(const AlgebraModule& a, const AlgebraModule& b) {
  check_module(a);
  check_module(b);
  if (a.gens.size() != b.gens.size() || a.field.modulus() != b.field.modulus())
    throw std::invalid_argument("hom_basis: mismatched generator lists or fields");
  const PrimeField f = a.field;
  const uint32_t d1 = a.dim, d2 = b.dim;
  MatrixF sys(f, uint32_t(a.gens.size()) * d1 * d2, d1 * d2);
  uint32_t row = 0;
  for (size_t g = 0; g < a.gens.size(); ++g) {
    const MatrixF& g1 = a.gens[g];
    const MatrixF& g2 = b.gens[g];
    for (uint32_t i = 0; i < d2; ++i)
      for (uint32_t j = 0; j < d1; ++j) {
        // (T g1 - g2 T)_{ij} = sum_k T_{ik} g1_{kj} - sum_k g2_{ik} T_{kj}
        for (uint32_t k = 0; k < d1; ++k)
          sys.set(row, i * d1 + k, f.add(sys.at(row, i * d1 + k), g1.at(k, j)));
        for (uint32_t k = 0; k < d2; ++k)
          sys.set(row, k * d1 + j, f.sub(sys.at(row, k * d1 + j), g2.at(i, k)));
        ++row;
      }
  }
  const MatrixF null = nullspace_basis(sys);
  std::vector<MatrixF> out;
  for (uint32_t c = 0; c < null.cols(); ++c) {
    MatrixF t(f, d2, d1);
    for (uint32_t i = 0; i < d2; ++i)
      for (uint32_t j = 0; j < d1; ++j) t.set(i, j, null.at(i * d1 + j, c));
    out.push_back(std::move(t));
  }
  return out;
}

bool is_isomorphic_irreducible(const AlgebraModule& a, const AlgebraModule& b) {
  if (a.dim != b.dim) return false;
  const auto homs = hom_basis(a, b);
  if (homs.empty()) return false;
  if (!inverse(homs[0]))
    throw std::invalid_argument("is_isomorphic_irreducible: singular homomorphism, inputs not irreducible");
  return true;
}

std::optional<MatrixF> find_isomorphism(const AlgebraModule& a, const AlgebraModule& b,
                                        std::mt19937_64& rng, uint32_t tries) {
  if (a.dim != b.dim) return std::nullopt;
  const auto homs = hom_basis(a, b);
  if (homs.empty()) return std::nullopt;
  const PrimeField f = a.field;
  for (const auto& h : homs)
    if (inverse(h)) return h;
  const uint32_t p = f.modulus();
  double combos = 1;
  for (size_t i = 0; i < homs.size() && combos <= 4096; ++i) combos *= p;
  if (combos <= 4096) {
    std::vector<uint32_t> c(homs.size(), 0);
    while (true) {
      uint32_t pos = 0;
      while (pos < c.size()) {
        c[pos] = f.add(c[pos], 1);
        if (c[pos]) break;
        ++pos;
      }
      if (pos == c.size()) break;
      MatrixF t(f, a.dim, a.dim);
      for (size_t i = 0; i < homs.size(); ++i)
        if (c[i]) t = t + homs[i].scaled(c[i]);
      if (inverse(t)) return t;
    }
    return std::nullopt;
  }
  for (uint32_t tr = 0; tr < tries; ++tr) {
    MatrixF t(f, a.dim, a.dim);
    for (const auto& h : homs) {
      const uint32_t c = uint32_t(rng() % p);
      if (c) t = t + h.scaled(c);
    }
    if (inverse(t)) return t;
  }
  return std::nullopt;
}

std::vector<MatrixF> end_ring(const AlgebraModule& m) { return hom_basis(m, m); }

FieldRecognition recognize_field(const std::vector<MatrixF>& algebra_basis, PrimeField f,
                                 std::mt19937_64& rng, uint32_t budget) {
  FieldRecognition out{FieldRecognition::Undecided, 0, Polynomial(f), {}, {}};
  if (algebra_basis.empty()) return out;
  const uint32_t a = uint32_t(algebra_basis.size());
  const uint32_t p = f.modulus();
  for (uint32_t t = 0; t < budget; ++t) {
    MatrixF b(f, algebra_basis[0].rows(), algebra_basis[0].cols());
    if (t < a) {
      b = algebra_basis[t];
    } else {
      for (const auto& e : algebra_basis) {
        const uint32_t c = uint32_t(rng() % p);
        if (c) b = b + e.scaled(c);
      }
    }
    if (b.is_zero()) continue;
    const Polynomial mp = min_poly(b);
    if (mp.coeff(0) == 0) {
      out.kind = FieldRecognition::NotField;
      out.singular_witness = b;
      return out;
    }
    if (const auto g = nontrivial_factor(mp, rng)) {
      out.kind = FieldRecognition::NotField;
      out.singular_witness = eval_poly_at(*g, b);
      return out;
    }
    if (uint32_t(mp.degree()) == a) {
      // F_p[b] is a field of the algebra's full dimension, so it is the algebra
      out.kind = FieldRecognition::Field;
      out.degree = a;
      out.min_poly = mp;
      out.primitive = b;
      return out;
    }
  }
  return out;
}

MatrixF homogeneous_component(const AlgebraModule& m, const AlgebraModule& simple) {
  const auto homs = hom_basis(simple, m);
  VecSpan span(m.field, m.dim);
  for (const auto& t : homs)
    for (uint32_t j = 0; j < t.cols(); ++j) {
      std::vector<uint32_t> v(m.dim);
      for (uint32_t i = 0; i < m.dim; ++i) v[i] = t.at(i, j);
      span.add(std::move(v));
    }
  return columns_of(m.field, m.dim, span.rows());
}

std::optional<Polynomial> nontrivial_factor(const Polynomial& f, std::mt19937_64& rng) {
  if (f.degree() <= 1) return std::nullopt;
  const PrimeField k = f.field();
  const uint32_t p = k.modulus();
  const Polynomial fm = f.monic();
  const Polynomial der = poly_derivative(fm);
  if (der.is_zero()) {
    // f(t) = h(t^p) = h(t)^p over F_p
    std::vector<uint32_t> hc;
    for (uint32_t i = 0; i * p <= uint32_t(fm.degree()); ++i) hc.push_back(fm.coeff(i * p));
    return Polynomial(k, std::move(hc));
  }
  const Polynomial g = poly_gcd(fm, der);
  if (g.degree() > 0 && g.degree() < fm.degree()) return g;

  Polynomial u = Polynomial::x(k);  // becomes t^{p^i} mod f
  for (uint32_t i = 1; 2 * i <= uint32_t(fm.degree()); ++i) {
    u = poly_powmod(u, p, fm);
    const Polynomial gi = poly_gcd(fm, u - Polynomial::x(k));
    if (gi.degree() > 0 && gi.degree() < fm.degree()) return gi;
    if (gi.degree() == fm.degree())
      return equal_degree_split(fm, i, rng);  // all factors have degree exactly i
  }
  return std::nullopt;
}

MatrixF eval_poly_at(const Polynomial& f, const MatrixF& m) {
  const PrimeField k = m.field();
  MatrixF out(k, m.rows(), m.cols());
  const MatrixF id = MatrixF::identity(k, m.rows());
  for (int i = f.degree(); i >= 0; --i) {
    out = out * m;
    const uint32_t c = f.coeff(uint32_t(i));
    if (c) out = out + id.scaled(c);
  }
  return out;
}

}  // namespace cforge
