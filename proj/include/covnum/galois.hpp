#pragma once

#include <cstdint>
#include <vector>

namespace covnum {

/// GF(q) for q = p^k with elements 0..q-1 (base-p digit vectors, digit i is
/// the coefficient of x^i). 0 and 1 are the additive and multiplicative
/// identities. The defining polynomial is the lexicographically least monic
/// irreducible of degree k.
class GaloisField {
 public:
  /// Throws OutOfRange unless q is a prime power with q <= 1024.
  explicit GaloisField(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  /// Least element of multiplicative order q - 1.
  std::uint32_t primitive() const { return primitive_; }

 private:
  std::uint32_t q_, p_, k_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
  std::uint32_t primitive_ = 1;
};

/// (p, k) with q = p^k, or nullopt-like {0, 0} when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

}  // namespace covnum
