#include "covnum/library.hpp"

#include <charconv>
#include <map>
#include <numeric>

#include "covnum/error.hpp"
#include "covnum/galois.hpp"

namespace covnum::library {

namespace {

Permutation cycle_range(std::size_t degree, std::size_t from, std::size_t len) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < len; ++i) img[from + i] = static_cast<Point>(from + (i + 1) % len);
  return Permutation(std::move(img));
}

Permutation transposition(std::size_t degree, Point a, Point b) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::swap(img[a], img[b]);
  return Permutation(std::move(img));
}

using Matrix = std::vector<std::vector<std::uint32_t>>;

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Permutation affine_map(const GaloisField& f, std::size_t n, const Matrix& a,
                       const std::vector<std::uint32_t>& shift) {
  const std::uint32_t q = f.order();
  const std::size_t points = ipow(q, n);
  std::vector<Point> img(points);
  std::vector<std::uint32_t> v(n), w(n);
  for (std::size_t x = 0; x < points; ++x) {
    std::size_t t = x;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<std::uint32_t>(t % q);
      t /= q;
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t s = shift[i];
      for (std::size_t j = 0; j < n; ++j) s = f.add(s, f.mul(a[i][j], v[j]));
      w[i] = s;
    }
    std::size_t y = 0;
    for (std::size_t i = n; i-- > 0;) y = y * q + w[i];
    img[x] = static_cast<Point>(y);
  }
  return Permutation(std::move(img));
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

PermGroup affine(std::size_t n, std::uint32_t q, bool general) {
  if (n == 0) throw OutOfRange("affine dimension must be positive");
  GaloisField f(q);
  std::vector<Permutation> gens;
  const std::vector<std::uint32_t> zero(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(n, 0);
    e[i] = 1;
    gens.push_back(affine_map(f, n, identity_matrix(n), e));
  }
  if (general && q > 2) {
    Matrix d = identity_matrix(n);
    d[0][0] = f.primitive();
    gens.push_back(affine_map(f, n, d, zero));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::uint32_t a = 1;
      for (std::uint32_t b = 0; b < f.degree(); ++b) {
        Matrix t = identity_matrix(n);
        t[i][j] = a;
        gens.push_back(affine_map(f, n, t, zero));
        a = f.mul(a, f.primitive());
      }
    }
  return PermGroup(std::move(gens));
}

// Point index of x on the projective line; infinity is q.
PermGroup projective(std::uint32_t q, bool general) {
  GaloisField f(q);
  const std::uint32_t inf = q;
  auto mobius = [&](auto&& map) {
    std::vector<Point> img(q + 1);
    for (std::uint32_t x = 0; x <= q; ++x) img[x] = map(x);
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens;
  gens.push_back(mobius([&](std::uint32_t x) { return x == inf ? inf : f.add(x, 1); }));
  std::uint32_t w = f.primitive();
  std::uint32_t scale = (general || q % 2 == 0) ? w : f.mul(w, w);
  if (scale != 1) gens.push_back(mobius([&](std::uint32_t x) { return x == inf ? inf : f.mul(scale, x); }));
  gens.push_back(mobius([&](std::uint32_t x) -> std::uint32_t {
    if (x == inf) return 0;
    if (x == 0) return inf;
    return f.neg(f.inv(x));
  }));
  return PermGroup(std::move(gens));
}

bool parse_uint(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// "(a,b)" suffix after a fixed prefix.
bool parse_pair(std::string_view s, std::string_view prefix, std::size_t& a, std::size_t& b) {
  if (s.substr(0, prefix.size()) != prefix) return false;
  s.remove_prefix(prefix.size());
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') return false;
  s = s.substr(1, s.size() - 2);
  auto comma = s.find(',');
  if (comma == std::string_view::npos) return false;
  return parse_uint(s.substr(0, comma), a) && parse_uint(s.substr(comma + 1), b);
}

}  // namespace

PermGroup symmetric(std::size_t n) {
  if (n == 0) throw OutOfRange("degree must be positive");
  if (n == 1) return PermGroup::trivial(1);
  if (n == 2) return PermGroup({transposition(2, 0, 1)});
  return PermGroup({cycle_range(n, 0, n), transposition(n, 0, 1)});
}

PermGroup alternating(std::size_t n) {
  if (n == 0) throw OutOfRange("degree must be positive");
  if (n < 3) return PermGroup::trivial(n);
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    img[0] = 1;
    img[1] = static_cast<Point>(i);
    img[i] = 0;
    gens.emplace_back(std::move(img));
  }
  return PermGroup(std::move(gens));
}

PermGroup cyclic(std::size_t n) {
  if (n == 0) throw OutOfRange("order must be positive");
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup({cycle_range(n, 0, n)});
}

PermGroup dihedral(std::size_t order) {
  if (order < 4 || order % 2) throw OutOfRange("dihedral order must be even and at least 4");
  const std::size_t m = order / 2;
  if (m == 2) return elementary_abelian(2, 2);
  std::vector<Point> refl(m);
  for (std::size_t i = 0; i < m; ++i) refl[i] = static_cast<Point>((m - i) % m);
  return PermGroup({cycle_range(m, 0, m), Permutation(std::move(refl))});
}

PermGroup quaternion8() {
  return PermGroup({Permutation::from_cycles("(1,2,3,4)(5,6,7,8)", 8),
                    Permutation::from_cycles("(1,5,3,7)(2,8,4,6)", 8)});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> img(da + db);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t i = 0; i < da; ++i) img[i] = g[static_cast<Point>(i)];
    gens.emplace_back(std::move(img));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> img(da + db);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + g[static_cast<Point>(i)]);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(std::move(gens));
}

PermGroup elementary_abelian(std::size_t p, std::size_t d) {
  if (d == 0) throw OutOfRange("rank must be positive");
  PermGroup g = cyclic(p);
  for (std::size_t i = 1; i < d; ++i) g = direct_product(g, cyclic(p));
  return g;
}

PermGroup affine_general(std::size_t n, std::uint32_t q) { return affine(n, q, true); }
PermGroup affine_special(std::size_t n, std::uint32_t q) { return affine(n, q, false); }

PermGroup frobenius(std::uint32_t p, std::uint32_t k) {
  GaloisField f(p);
  if (f.degree() != 1 || k == 0 || (p - 1) % k)
    throw OutOfRange("Frob(p,k) needs p prime and k dividing p-1");
  std::uint32_t a = f.pow(f.primitive(), (p - 1) / k);
  std::vector<Permutation> gens;
  std::vector<Point> shift(p), scale(p);
  for (std::uint32_t x = 0; x < p; ++x) {
    shift[x] = f.add(x, 1);
    scale[x] = f.mul(a, x);
  }
  gens.emplace_back(std::move(shift));
  gens.emplace_back(std::move(scale));
  return PermGroup(std::move(gens));
}

PermGroup projective_special(std::uint32_t q) { return projective(q, false); }
PermGroup projective_general(std::uint32_t q) { return projective(q, true); }

PermGroup mathieu11() {
  return PermGroup({Permutation::from_cycles("(2,10)(4,11)(5,7)(8,9)", 11),
                    Permutation::from_cycles("(1,4,3,8)(2,5,6,9)", 11)});
}

PermGroup by_name(std::string_view name) {
  static const std::map<std::string, std::string, std::less<>> aliases = {
      {"V4", "C2^2"},          {"C2xC2", "C2^2"},       {"PSL27", "PSL(2,7)"},
      {"PGL27", "PGL(2,7)"},   {"AGL13", "AGL(1,3)"},   {"AGL14", "AGL(1,4)"},
      {"AGL15", "AGL(1,5)"},   {"AGL17", "AGL(1,7)"},   {"AGL18", "AGL(1,8)"},
      {"AGL32", "AGL(3,2)"},   {"L2(7)", "PSL(2,7)"},   {"L2(11)", "PSL(2,11)"},
  };
  if (auto it = aliases.find(name); it != aliases.end()) return by_name(it->second);

  // direct products, split at top-level 'x'
  int depth = 0;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == '(') ++depth;
    if (name[i] == ')') --depth;
    if (name[i] == 'x' && depth == 0 && i > 0 && i + 1 < name.size())
      return direct_product(by_name(name.substr(0, i)), by_name(name.substr(i + 1)));
  }

  std::size_t a = 0, b = 0;
  if (name == "Q8") return quaternion8();
  if (name == "M11") return mathieu11();
  if (parse_pair(name, "AGL", a, b)) return affine_general(a, static_cast<std::uint32_t>(b));
  if (parse_pair(name, "ASL", a, b)) return affine_special(a, static_cast<std::uint32_t>(b));
  if (parse_pair(name, "PSL", a, b) && a == 2) return projective_special(static_cast<std::uint32_t>(b));
  if (parse_pair(name, "PGL", a, b) && a == 2) return projective_general(static_cast<std::uint32_t>(b));
  if (parse_pair(name, "Frob", a, b))
    return frobenius(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  if (name.size() >= 2) {
    std::string_view rest = name.substr(1);
    if (name[0] == 'C') {
      if (auto caret = rest.find('^'); caret != std::string_view::npos) {
        if (parse_uint(rest.substr(0, caret), a) && parse_uint(rest.substr(caret + 1), b) && a >= 2)
          return elementary_abelian(a, b);
      } else if (parse_uint(rest, a) && a >= 1) {
        return cyclic(a);
      }
    }
    if (name[0] == 'S' && parse_uint(rest, a) && a >= 1) return symmetric(a);
    if (name[0] == 'A' && parse_uint(rest, a) && a >= 1) return alternating(a);
    if (name[0] == 'D' && parse_uint(rest, a) && a >= 4 && a % 2 == 0) return dihedral(a);
  }
  throw UnknownName("unknown group name '" + std::string(name) + "'");
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> list = {
      "V4",     "S3",     "C4",     "C6",      "D8",     "Q8",     "A4",    "S4",
      "D10",    "D12",    "C3xC3",  "C2^3",    "C2xC4",  "S3xS3",  "C3xS3", "A5",
      "S5",     "A6",     "S6",     "A5xC2",   "PSL27",  "PGL27",  "AGL13", "AGL14",
      "AGL15",  "AGL17",  "AGL18",  "AGL32",   "M11",
  };
  return list;
}

}  // namespace covnum::library
