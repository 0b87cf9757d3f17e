#include "field.hpp"

#include <string>

namespace cforge {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(uint32_t p) : p_(p) {
  if (!is_prime_u32(p))
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                " is not prime");
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
  uint64_t r = 1, b = a % p_;
  while (e) {
    if (e & 1) r = (r * b) % p_;
    b = (b * b) % p_;
    e >>= 1;
  }
  return uint32_t(r);
}

uint32_t PrimeField::inv(uint32_t a) const {
  if (a % p_ == 0) throw std::invalid_argument("PrimeField: inverse of zero");
  return pow(a % p_, p_ - 2);
}

DlogTable dlog_table(const PrimeField& f) {
  const uint32_t p = f.modulus();
  if (p > (1u << 22))
    throw std::invalid_argument("dlog_table: modulus too large for a table");
  DlogTable t;
  t.p = p;
  t.log.assign(p, 0);
  if (p == 2) {
    t.generator = 1;
    return t;  // F_2^* is trivial, log(1) = 0 in Z/1
  }
  for (uint32_t g = 2; g < p; ++g) {
    // g generates iff no proper power hits 1 before exponent p-1
    uint32_t x = g;
    uint32_t ord = 1;
    while (x != 1) {
      x = f.mul(x, g);
      ++ord;
    }
    if (ord == p - 1) {
      t.generator = g;
      uint32_t v = 1;
      for (uint32_t e = 0; e < p - 1; ++e) {
        t.log[v] = e;
        v = f.mul(v, g);
      }
      return t;
    }
  }
  throw std::logic_error("dlog_table: no generator found");
}

}  // namespace cforge
