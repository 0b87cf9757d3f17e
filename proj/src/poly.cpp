#include "poly.hpp"

#include <sstream>

namespace cforge {

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial::Polynomial(PrimeField f, std::vector<uint32_t> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (auto& v : c_) v %= field_.modulus();
  trim();
}

Polynomial Polynomial::constant(PrimeField f, uint32_t v) {
  return Polynomial(f, {v});
}

Polynomial Polynomial::x(PrimeField f) { return Polynomial(f, {0, 1}); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = field_.add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = field_.sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial(field_);
  std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
  }
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::scaled(uint32_t v) const {
  std::vector<uint32_t> r(c_);
  for (auto& x : r) x = field_.mul(x, v);
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(lead()));
}

uint32_t Polynomial::eval(uint32_t x) const {
  uint32_t r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), c_[i]);
  return r;
}

std::string Polynomial::to_text() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero");
  const PrimeField f = a.field();
  std::vector<uint32_t> rem(a.coeffs());
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(f), a};
  std::vector<uint32_t> q(a.degree() - db + 1, 0);
  const uint32_t lead_inv = f.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    const uint32_t v = rem[i];
    if (!v) continue;
    const uint32_t c = f.mul(v, lead_inv);
    q[i - db] = c;
    for (int j = 0; j <= db; ++j)
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeff(j)));
  }
  return {Polynomial(f, std::move(q)), Polynomial(f, std::move(rem))};
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& b) {
  return poly_divmod(a, b).second;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = poly_mod(x, y);
    x = y;
    y = r;
  }
  return x.monic();
}

Polynomial poly_powmod(const Polynomial& base, uint64_t e, const Polynomial& mod) {
  Polynomial r = Polynomial::constant(base.field(), 1);
  Polynomial b = poly_mod(base, mod);
  while (e) {
    if (e & 1) r = poly_mod(r * b, mod);
    b = poly_mod(b * b, mod);
    e >>= 1;
  }
  return r;
}

bool poly_is_irreducible(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("poly_is_irreducible: zero polynomial");
  const int d = f.degree();
  if (d == 0) return false;  // units
  if (d == 1) return true;
  const Polynomial g = f.monic();
  const Polynomial t = Polynomial::x(f.field());
  const uint32_t p = f.field().modulus();
  // t^{p^i} mod g, iterating the p-power map
  Polynomial u = t;
  for (int i = 1; 2 * i <= d; ++i) {
    u = poly_powmod(u, p, g);
    const Polynomial h = poly_gcd(g, u - t);
    if (h.degree() > 0) return false;
  }
  return true;
}

MatrixF companion(const Polynomial& f) {
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("companion: degree must be >= 1");
  if (f.lead() != 1) throw std::invalid_argument("companion: polynomial must be monic");
  MatrixF m(f.field(), uint32_t(d), uint32_t(d));
  for (int i = 1; i < d; ++i) m.set(uint32_t(i), uint32_t(i - 1), 1);
  for (int i = 0; i < d; ++i) m.set(uint32_t(i), uint32_t(d - 1), f.field().neg(f.coeff(uint32_t(i))));
  return m;
}

Polynomial min_poly(const MatrixF& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("min_poly: square matrix required");
  const PrimeField f = m.field();
  const uint32_t n = m.rows();
  if (n == 0) return Polynomial::constant(f, 1);
  const uint32_t nn = n * n;
  // grow the span of I, M, M^2, ... keeping reduced rows plus the combination
  // that produced them; first dependency yields the minimal polynomial
  std::vector<std::vector<uint32_t>> rows;    // reduced vec(M^k) rows
  std::vector<uint32_t> pivot_of;             // pivot column per stored row
  std::vector<std::vector<uint32_t>> combos;  // coefficients over powers
  MatrixF power = MatrixF::identity(f, n);
  for (uint32_t k = 0;; ++k) {
    std::vector<uint32_t> v(nn);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) v[i * n + j] = power.at(i, j);
    std::vector<uint32_t> combo(k + 1, 0);
    combo[k] = 1;
    // reduce against stored rows
    for (size_t r = 0; r < rows.size(); ++r) {
      const uint32_t c = v[pivot_of[r]];
      if (!c) continue;
      for (uint32_t j = 0; j < nn; ++j) v[j] = f.sub(v[j], f.mul(c, rows[r][j]));
      for (size_t j = 0; j < combos[r].size(); ++j)
        combo[j] = f.sub(combo[j], f.mul(c, combos[r][j]));
    }
    uint32_t piv = nn;
    for (uint32_t j = 0; j < nn; ++j)
      if (v[j]) { piv = j; break; }
    if (piv == nn) {
      // dependency: sum combo[i] M^i = 0, normalize monic
      Polynomial mp(f, combo);
      return mp.monic();
    }
    const uint32_t inv = f.inv(v[piv]);
    if (inv != 1) {
      for (uint32_t j = 0; j < nn; ++j) v[j] = f.mul(v[j], inv);
      for (auto& cj : combo) cj = f.mul(cj, inv);
    }
    rows.push_back(std::move(v));
    pivot_of.push_back(piv);
    combos.push_back(std::move(combo));
    power = power * m;
  }
}

}  // namespace cforge
