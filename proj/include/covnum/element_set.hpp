#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace covnum {

/// Fixed-size bitset over element ids (or any dense index space).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  void set_all() {
    std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
    trim();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  std::size_t intersection_count(const ElementSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// this \ o
  ElementSet& subtract(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (word) return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
      if (++w == words_.size()) return size_;
      word = words_[w];
    }
  }
  std::size_t first() const { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        f((w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend bool operator<(const ElementSet& a, const ElementSet& b) { return a.words_ < b.words_; }

 private:
  void trim() {
    if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ s.size();
    for (auto w : s.words()) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace covnum
