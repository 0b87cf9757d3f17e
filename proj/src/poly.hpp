#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace cforge {

// Polynomials over F_p, coefficients ascending, normalized (no trailing zeros).
class Polynomial {
 public:
  explicit Polynomial(PrimeField f) : field_(f) {}
  Polynomial(PrimeField f, std::vector<uint32_t> coeffs);

  PrimeField field() const { return field_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
  uint32_t coeff(uint32_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint32_t lead() const { return c_.back(); }

  static Polynomial zero(PrimeField f) { return Polynomial(f); }
  static Polynomial constant(PrimeField f, uint32_t v);
  static Polynomial x(PrimeField f);  // the monomial t

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(uint32_t v) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const { return field_ == o.field_ && c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  uint32_t eval(uint32_t x) const;
  std::string to_text() const;  // e.g. "t^2 + 2t + 1"

 private:
  PrimeField field_;
  std::vector<uint32_t> c_;
  void trim();
};

// quotient and remainder, divisor must be nonzero
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);
Polynomial poly_mod(const Polynomial& a, const Polynomial& b);
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);  // monic
Polynomial poly_powmod(const Polynomial& base, uint64_t e, const Polynomial& mod);

// true iff f is irreducible over F_p; degree-0 polynomials (units) are not.
// Tests gcd(f, t^{p^i} - t) for i up to deg(f)/2.
bool poly_is_irreducible(const Polynomial& f);

MatrixF companion(const Polynomial& f);  // f monic, degree >= 1
Polynomial min_poly(const MatrixF& m);   // monic minimal polynomial

}  // namespace cforge
