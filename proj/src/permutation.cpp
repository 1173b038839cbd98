#include "covnum/permutation.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "covnum/error.hpp"

namespace covnum {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[p] = true;
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty cycle notation");
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle");
    std::string_view body = trim(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    if (body.empty()) continue;

    std::vector<Point> cycle;
    std::size_t i = 0;
    while (i <= body.size()) {
      auto comma = body.find(',', i);
      if (comma == std::string_view::npos) comma = body.size();
      std::string_view tok = trim(body.substr(i, comma - i));
      unsigned long long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
        throw std::invalid_argument("bad point '" + std::string(tok) + "' in cycle notation");
      if (value < 1 || value > degree)
        throw std::invalid_argument("point " + std::to_string(value) + " outside 1.." +
                                    std::to_string(degree));
      Point p = static_cast<Point>(value - 1);
      if (used[p]) throw std::invalid_argument("point " + std::to_string(value) + " repeated");
      used[p] = true;
      cycle.push_back(p);
      i = comma + 1;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation r;
  r.images_ = std::move(inv);
  return r;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    Point j = static_cast<Point>(i);
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Point Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(a.degree()) +
                         " and " + std::to_string(b.degree()));
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = b[a[static_cast<Point>(i)]];
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(compose(g.inverse(), x), g);
}

Permutation power(const Permutation& a, std::int64_t k) {
  Permutation base = k < 0 ? a.inverse() : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Permutation result(a.degree());
  while (e) {
    if (e & 1u) result = compose(result, base);
    base = compose(base, base);
    e >>= 1u;
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace covnum
