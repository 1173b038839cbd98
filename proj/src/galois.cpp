#include "covnum/galois.hpp"

#include "covnum/error.hpp"

namespace covnum {

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 2;
  while (p * p <= q && q % p) ++p;
  if (q % p) p = q;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), k};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, low degree first

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
    a.pop_back();
  }
  return a;
}

bool is_zero(const Poly& a) {
  for (auto c : a)
    if (c) return false;
  return true;
}

Poly from_index(std::uint64_t v, std::uint32_t p, std::size_t len) {
  Poly out(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return out;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly g = from_index(v, p, d);
      g.push_back(1);
      if (is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t q) : q_(q) {
  auto [p, k] = prime_power(q);
  if (p == 0 || q > 1024) throw OutOfRange("GF(" + std::to_string(q) + ") is not supported");
  p_ = p;
  k_ = k;

  Poly modulus;
  std::uint64_t tail = 1;
  for (std::uint32_t i = 0; i < k; ++i) tail *= p;
  for (std::uint64_t v = 0; v < tail; ++v) {
    Poly f = from_index(v, p, k);
    f.push_back(1);
    if (k == 1 || irreducible(f, p)) {
      modulus = std::move(f);
      break;
    }
  }

  add_.resize(static_cast<std::size_t>(q) * q);
  mul_.resize(static_cast<std::size_t>(q) * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  auto to_index = [&](const Poly& a) {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
  };
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly pa = from_index(a, p, k);
    for (std::uint32_t b = 0; b < q; ++b) {
      Poly pb = from_index(b, p, k);
      Poly sum(k);
      for (std::uint32_t i = 0; i < k; ++i) sum[i] = (pa[i] + pb[i]) % p;
      add_[a * q + b] = to_index(sum);
      Poly prod(2 * k, 0);
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      Poly r = poly_mod(prod, modulus, p);
      r.resize(k, 0);
      mul_[a * q + b] = to_index(r);
    }
  }
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      if (add(a, b) == 0) neg_[a] = b;
      if (mul(a, b) == 1) inv_[a] = b;
    }
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint32_t x = g;
    std::uint32_t ord = 1;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == q - 1) {
      primitive_ = g;
      break;
    }
  }
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1u;
  }
  return r;
}

}  // namespace covnum
