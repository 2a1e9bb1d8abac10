#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sw1pers/error.hpp"

namespace sw1pers {

using coeff_t = std::uint32_t;

// Prime field F_p with a precomputed inverse table. p is limited to 2^16 so
// that products of two residues fit in 32 bits.
class FieldPrime {
 public:
  static constexpr std::uint32_t kMaxPrime = 1u << 16;

  explicit FieldPrime(std::uint32_t p) : p_(p) {
    if (p < 2 || p > kMaxPrime || !is_prime(p))
      throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not a prime in [2, 65536]");
    inverse_.assign(p, 0);
    inverse_[1] = 1;
    // inv(a) = -(p / a) * inv(p mod a)
    for (std::uint32_t a = 2; a < p; ++a)
      inverse_[a] = (p - (p / a) * inverse_[p % a] % p) % p;
  }

  std::uint32_t prime() const noexcept { return p_; }

  coeff_t add(coeff_t a, coeff_t b) const noexcept { return (a + b) % p_; }
  coeff_t sub(coeff_t a, coeff_t b) const noexcept { return (a + p_ - b) % p_; }
  coeff_t mul(coeff_t a, coeff_t b) const noexcept { return (a * b) % p_; }
  coeff_t neg(coeff_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  coeff_t inv(coeff_t a) const noexcept { return inverse_[a]; }

  /// Residue of a signed integer.
  coeff_t from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    return static_cast<coeff_t>(r < 0 ? r + p_ : r);
  }

  static constexpr bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  friend bool operator==(const FieldPrime& a, const FieldPrime& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::vector<coeff_t> inverse_;
};

}  // namespace sw1pers
