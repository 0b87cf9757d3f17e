#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cforge {

// Arithmetic in the prime field F_p. Scalars are canonical representatives
// in [0, p). The modulus is validated at construction; composite moduli are
// rejected so every nonzero scalar is invertible.
class PrimeField {
 public:
  explicit PrimeField(uint32_t p);

  uint32_t modulus() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint64_t s = uint64_t(a) + b;
    return s >= p_ ? uint32_t(s - p_) : uint32_t(s);
  }
  uint32_t sub(uint32_t a, uint32_t b) const {
    return a >= b ? a - b : uint32_t(a + uint64_t(p_) - b);
  }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return uint32_t((uint64_t(a) * b) % p_);
  }
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t inv(uint32_t a) const;

  // reduce an arbitrary signed value into [0, p)
  uint32_t reduce(int64_t v) const {
    int64_t r = v % int64_t(p_);
    if (r < 0) r += p_;
    return uint32_t(r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  uint32_t p_;
};

bool is_prime_u32(uint32_t n);

// Discrete logarithm table for F_p^*: log[x] with x = g^log[x], g the
// smallest generator. Built by brute force, so the modulus is capped.
struct DlogTable {
  uint32_t p = 0;
  uint32_t generator = 0;
  std::vector<uint32_t> log;  // size p, log[0] unused

  uint32_t modulus_of_logs() const { return p - 1; }  // logs live in Z/(p-1)
};

DlogTable dlog_table(const PrimeField& f);

}  // namespace cforge
