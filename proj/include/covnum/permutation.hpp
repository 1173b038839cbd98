#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace covnum {

/// A point of {0, ..., n-1}. Text formats are 1-based.
using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}.
///
/// Composition is left to right: `a * b` applies `a` first, then `b`,
/// so `(a * b)(x) == b(a(x))`. Every routine in the library uses this
/// convention.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Parse cycle notation such as "(1,2,3)(4,5)" or "()".
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Least k >= 1 with this^k == identity (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Canonical cycle notation: cycles open at their least point, ordered
  /// by that point, fixed points omitted; identity prints as "()".
  std::string to_cycles() const;

  /// Smallest moved point, or degree() for the identity.
  Point first_moved() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// a then b. Throws DegreeMismatch on unequal degrees.
Permutation compose(const Permutation& a, const Permutation& b);

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

/// g^-1 x g
Permutation conjugate(const Permutation& x, const Permutation& g);

Permutation power(const Permutation& a, std::int64_t k);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace covnum
