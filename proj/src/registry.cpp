#include "covnum/registry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "covnum/error.hpp"
#include "covnum/galois.hpp"
#include "covnum/library.hpp"

namespace covnum {

namespace {

constexpr std::uint64_t kUnknown = std::numeric_limits<std::uint64_t>::max();

std::string normalize_name(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    out.emplace_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::optional<std::uint64_t> to_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OutOfRange("formula value exceeds 64 bits");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OutOfRange("formula value exceeds 64 bits");
  return r;
}

std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r = checked_mul(r, b);
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) throw OutOfRange("formula value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

void need_params(std::string_view family, const std::vector<std::uint64_t>& p, std::size_t n) {
  if (p.size() != n)
    throw OutOfRange(std::string(family) + " takes " + std::to_string(n) + " parameter" + (n == 1 ? "" : "s"));
}

void need_prime_power(std::uint64_t q) {
  if (prime_power(q).first == 0) throw OutOfRange(std::to_string(q) + " is not a prime power");
}

bool psl2_in_range(std::uint64_t q) {
  return prime_power(q).first != 0 && ((q % 2 == 0 && q >= 8) || (q % 2 == 1 && q > 9));
}

bool suzuki_in_range(std::uint64_t q) {
  auto [p, k] = prime_power(q);
  return p == 2 && k >= 3 && k % 2 == 1;
}

}  // namespace

SigmaBounds KnownEntry::bounds() const {
  if (is_exact()) return {exact(), exact()};
  if (is_bounds()) return std::get<SigmaBounds>(sigma);
  throw std::logic_error(name + " is a formula row");
}

std::string KnownEntry::sigma_text() const {
  if (is_exact()) return std::to_string(exact());
  if (is_bounds()) {
    auto b = std::get<SigmaBounds>(sigma);
    return std::to_string(b.lo) + ".." + std::to_string(b.hi);
  }
  return "formula:" + std::get<FormulaId>(sigma).family;
}

std::string KnownEntry::citation_text() const {
  std::string out;
  for (const auto& c : citations) out += (out.empty() ? "" : ";") + c;
  return out;
}

Registry Registry::parse(std::string_view text) {
  Registry r;
  std::size_t lineno = 0;
  for (const auto& raw : split(text, '\n')) {
    ++lineno;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto f = split(line, '\t');
    if (f.size() != 4 && f.size() != 5) throw ParseError("expected 4 or 5 tab-separated fields", lineno);
    KnownEntry e;
    e.name = f[0];
    if (e.name.empty()) throw ParseError("empty name", lineno);
    const std::string& s = f[1];
    if (s.rfind("formula:", 0) == 0) {
      e.sigma = FormulaId{s.substr(8)};
    } else if (auto dots = s.find(".."); dots != std::string::npos) {
      auto lo = to_uint(std::string_view(s).substr(0, dots));
      auto hi = to_uint(std::string_view(s).substr(dots + 2));
      if (!lo || !hi || *lo > *hi) throw ParseError("bounds must read lo..hi with lo <= hi", lineno);
      e.sigma = SigmaBounds{*lo, *hi};
    } else if (auto v = to_uint(s)) {
      e.sigma = *v;
    } else {
      throw ParseError("bad sigma field '" + s + "'", lineno);
    }
    if (f[2] != "-") {
      auto d = to_uint(f[2]);
      if (!d) throw ParseError("bad degree field '" + f[2] + "'", lineno);
      e.degree = *d;
    }
    for (auto& c : split(f[3], ';'))
      if (!c.empty()) e.citations.push_back(c);
    if (e.citations.empty()) throw ParseError("every row needs a citation", lineno);
    if (f.size() == 5 && f[4] != "-" && !f[4].empty())
      for (auto& a : split(f[4], '|'))
        if (!a.empty()) e.aliases.push_back(a);

    const std::size_t id = r.entries_.size();
    std::vector<std::string> keys{normalize_name(e.name)};
    for (const auto& a : e.aliases) keys.push_back(normalize_name(a));
    for (const auto& k : keys) {
      auto it = std::find_if(r.index_.begin(), r.index_.end(), [&](const auto& p) { return p.first == k; });
      if (it != r.index_.end())
        throw ParseError("name '" + k + "' already names " + r.entries_[it->second].name, lineno);
      r.index_.emplace_back(k, id);
    }
    r.entries_.push_back(std::move(e));
  }
  std::sort(r.index_.begin(), r.index_.end());
  return r;
}

Registry Registry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const Registry& Registry::builtin() {
  static const Registry r = load(COVNUM_DATA_DIR "/registry.tsv");
  return r;
}

const KnownEntry* Registry::find(std::string_view name) const {
  const std::string key = normalize_name(name);
  auto it = std::lower_bound(index_.begin(), index_.end(), key,
                             [](const auto& p, const std::string& k) { return p.first < k; });
  if (it == index_.end() || it->first != key) return nullptr;
  return &entries_[it->second];
}

const KnownEntry& Registry::lookup(std::string_view name) const {
  if (const KnownEntry* e = find(name)) return *e;
  throw UnknownName("no registry entry named '" + std::string(name) + "'");
}

const KnownEntry& lookup_known(std::string_view name) { return Registry::builtin().lookup(name); }

std::uint64_t sigma_formula(std::string_view family, const std::vector<std::uint64_t>& p) {
  if (family == "symmetric-odd") {
    need_params(family, p, 1);
    const std::uint64_t n = p[0];
    if (n < 3 || n % 2 == 0 || n == 9) throw OutOfRange("S(2k+1) needs k >= 1 and k != 4");
    return checked_pow(2, n - 1);
  }
  if (family == "symmetric-6k") {
    need_params(family, p, 1);
    const std::uint64_t n = p[0];
    if (n % 6 != 0 || n < 24) throw OutOfRange("S(6k) needs k >= 4");
    const std::uint64_t k = n / 6;
    std::uint64_t total = binomial(n, 3 * k) / 2;
    for (std::uint64_t i = 0; i < 2 * k; ++i) total = checked_add(total, binomial(n, i));
    return total;
  }
  if (family == "alternating-4k+2") {
    need_params(family, p, 1);
    const std::uint64_t n = p[0];
    if (n % 4 != 2 || n < 6) throw OutOfRange("A(4k+2) needs k >= 1");
    return checked_pow(2, n - 2);
  }
  if (family == "psl2" || family == "pgl2") {
    need_params(family, p, 1);
    const std::uint64_t q = p[0];
    need_prime_power(q);
    if (!psl2_in_range(q)) throw OutOfRange("projective line formula needs q >= 8 even or q > 9 odd");
    return checked_mul(q, q + 1) / 2 + (q % 2);
  }
  if (family == "suzuki") {
    need_params(family, p, 1);
    const std::uint64_t q = p[0];
    if (!suzuki_in_range(q)) throw OutOfRange("Sz(q) needs q = 2^(2m+1), m >= 1");
    return checked_mul(checked_mul(q, q), checked_add(checked_mul(q, q), 1)) / 2;
  }
  if (family == "affine") {
    need_params(family, p, 2);
    const std::uint64_t n = p[0], q = p[1];
    need_prime_power(q);
    if (n == 0) throw OutOfRange("affine dimension must be positive");
    if (n == 2) throw OutOfRange("dimension 2 has no closed form here; sigma equals that of PSL(2,q)");
    if (n == 1 && q == 2) throw OutOfRange("AGL(1,2) is cyclic");
    return (checked_pow(q, n + 1) - 1) / (q - 1);
  }
  if (family == "solvable") {
    need_params(family, p, 2);
    auto [base, k] = prime_power(p[0]);
    if (base == 0 || k != 1 || p[1] == 0) throw OutOfRange("solvable formula needs a prime p and d >= 1");
    return checked_add(checked_pow(p[0], p[1]), 1);
  }
  throw UnknownName("unknown formula family '" + std::string(family) + "'");
}

std::optional<FormulaMatch> formula_for_name(std::string_view raw) {
  std::string name;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) name += c;
  auto number_after = [&](std::string_view prefix) -> std::optional<std::uint64_t> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    return to_uint(std::string_view(name).substr(prefix.size()));
  };
  auto pair_in = [&](std::string_view prefix) -> std::optional<std::pair<std::uint64_t, std::uint64_t>> {
    if (name.rfind(prefix, 0) != 0 || name.back() != ')') return std::nullopt;
    auto inner = std::string_view(name).substr(prefix.size(), name.size() - prefix.size() - 1);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto a = to_uint(inner.substr(0, comma)), b = to_uint(inner.substr(comma + 1));
    if (!a || !b) return std::nullopt;
    return std::make_pair(*a, *b);
  };
  auto single_in = [&](std::string_view prefix) -> std::optional<std::uint64_t> {
    if (name.rfind(prefix, 0) != 0 || name.back() != ')') return std::nullopt;
    return to_uint(std::string_view(name).substr(prefix.size(), name.size() - prefix.size() - 1));
  };

  if (auto n = number_after("S")) {
    if (*n >= 3 && *n % 2 == 1 && *n != 9) return FormulaMatch{"symmetric-odd", {*n}};
    if (*n >= 24 && *n % 6 == 0) return FormulaMatch{"symmetric-6k", {*n}};
    return std::nullopt;
  }
  if (auto n = number_after("A")) {
    if (*n >= 6 && *n % 4 == 2) return FormulaMatch{"alternating-4k+2", {*n}};
    return std::nullopt;
  }
  for (auto [prefix, family] : {std::pair{"PSL(2,", "psl2"}, {"L2(", "psl2"}, {"PGL(2,", "pgl2"}}) {
    if (auto q = single_in(prefix)) {
      if (psl2_in_range(*q)) return FormulaMatch{family, {*q}};
      return std::nullopt;
    }
  }
  if (auto q = single_in("Sz(")) {
    if (suzuki_in_range(*q)) return FormulaMatch{"suzuki", {*q}};
    return std::nullopt;
  }
  for (auto prefix : {"AGL(", "ASL("}) {
    if (auto nq = pair_in(prefix)) {
      auto [n, q] = *nq;
      // ASL(1,q) is the translation group, elementary abelian.
      const bool translations = n == 1 && std::string_view(prefix) == "ASL(";
      if (n >= 1 && n != 2 && !translations && prime_power(q).first != 0 && !(n == 1 && q == 2))
        return FormulaMatch{"affine", {n, q}};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

SolvableSigma sigma_solvable_detail(const Group& g, const LatticeBudget& budget) {
  if (g.is_cyclic()) throw CyclicGroup("cyclic groups have no finite cover by proper subgroups");
  if (!is_solvable(g)) throw std::invalid_argument("group is not solvable");
  const std::vector<Subgroup> subs = all_subgroups(g, budget);
  std::vector<const Subgroup*> normals;
  for (const auto& s : subs)
    if (is_normal(g, s.elements)) normals.push_back(&s);

  SolvableSigma out;
  const Subgroup* top = normals.back();  // the whole group
  std::uint64_t best = 0;
  while (top->order > 1) {
    // Largest normal subgroup strictly inside top: a maximal one, so top/next
    // is a chief factor.
    const Subgroup* next = nullptr;
    for (const Subgroup* n : normals)
      if (n->order < top->order && n->elements.is_subset_of(top->elements) && (!next || n->order > next->order))
        next = n;
    const std::uint64_t target = g.order() / top->order * next->order;
    ChiefFactor f{top->order / next->order, 0};
    for (const auto& c : subs) {
      if (c.order != target || !next->elements.is_subset_of(c.elements)) continue;
      if ((c.elements & top->elements) == next->elements) ++f.complements;
    }
    if (f.complements > 1 && (best == 0 || f.order < best)) best = f.order;
    out.factors.push_back(f);
    top = next;
  }
  if (best == 0) throw std::logic_error("noncyclic solvable group without a multiply complemented chief factor");
  out.sigma = best + 1;
  return out;
}

std::uint64_t sigma_solvable(const Group& g, const LatticeBudget& budget) {
  return sigma_solvable_detail(g, budget).sigma;
}

AffineCover agl_cover(std::size_t n, std::uint32_t q, std::uint64_t max_order) {
  if (n == 0) throw OutOfRange("affine dimension must be positive");
  if (prime_power(q).first == 0) throw OutOfRange(std::to_string(q) + " is not a prime power");
  if (n == 1 && q == 2) throw CyclicGroup("AGL(1,2) is cyclic");
  const std::uint64_t points = checked_pow(q, n);
  std::uint64_t order = points;
  for (std::size_t i = 0; i < n; ++i) order = checked_mul(order, points - checked_pow(q, i));
  if (order > max_order)
    throw BudgetExceeded("AGL(" + std::to_string(n) + "," + std::to_string(q) + ") has order " +
                         std::to_string(order) + " above the limit " + std::to_string(max_order));

  AffineCover cover;
  cover.n = n;
  cover.q = q;
  EnumerationOptions opts;
  opts.cap = max_order;
  auto group = std::make_shared<const Group>(library::affine_general(n, q), opts);
  const Group& g = *group;
  const GaloisField f(q);

  auto digits = [&](std::uint64_t x) {
    std::vector<std::uint32_t> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<std::uint32_t>(x % q);
      x /= q;
    }
    return v;
  };
  // One spanning vector per 1-space: first nonzero coordinate equal to 1.
  std::vector<std::uint64_t> lines;
  for (std::uint64_t w = 1; w < points; ++w) {
    auto v = digits(w);
    auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t d) { return d != 0; });
    if (*it == 1) lines.push_back(w);
  }

  std::vector<ElementSet> stab(points, ElementSet(g.order())), fix(lines.size(), ElementSet(g.order()));
  for (ElementId x = 0; x < g.order(); ++x) {
    auto img = g.images(x);
    for (std::uint64_t v = 0; v < points; ++v)
      if (img[v] == v) stab[v].set(x);
    const auto shift = digits(img[0]);
    for (std::size_t l = 0; l < lines.size(); ++l) {
      const auto w = digits(lines[l]);
      const auto image = digits(img[lines[l]]);
      bool fixed = true;
      for (std::size_t i = 0; i < n && fixed; ++i) fixed = f.add(image[i], f.neg(shift[i])) == w[i];
      if (fixed) fix[l].set(x);
    }
  }

  ElementSet covered(g.order());
  auto admit = [&](ElementSet s, std::vector<Subgroup>& out) {
    Subgroup h = subgroup_from_set(g, s);
    if (!(g.generate(h.generator_ids) == s)) throw std::logic_error("affine cover member is not a subgroup");
    if (h.order == g.order()) throw std::logic_error("affine cover member is not proper");
    covered |= s;
    out.push_back(std::move(h));
  };
  for (auto& s : stab) admit(std::move(s), cover.c1);
  for (auto& s : fix) admit(std::move(s), cover.c2);
  if (covered.count() != g.order()) throw std::logic_error("affine cover misses an element");
  cover.total = cover.c1.size() + cover.c2.size();
  cover.group = std::move(group);
  return cover;
}

std::string QuotientEvidence::line() const {
  std::string out = "N of order " + std::to_string(normal_order) + ": G/N of order " + std::to_string(quotient_order);
  if (quotient_cyclic) return out + " is cyclic, sigma infinite";
  if (quotient_sigma.hi == kUnknown) return out + ", sigma >= " + std::to_string(quotient_sigma.lo);
  if (quotient_sigma.lo == quotient_sigma.hi) return out + ", sigma " + std::to_string(quotient_sigma.lo);
  return out + ", sigma in " + std::to_string(quotient_sigma.lo) + ".." + std::to_string(quotient_sigma.hi);
}

ElementaryReport is_sigma_elementary(const Group& g, const ElementaryBudget& budget, const MaxClassSet* maximals) {
  if (g.is_cyclic()) throw CyclicGroup("cyclic groups have no finite cover by proper subgroups");
  ElementaryReport report;
  {
    const MaxClassSet mx = maximals ? *maximals : maximal_classes(g, budget.lattice);
    const CoverResult r = sigma_exact(g, mx, budget.solve);
    report.sigma = {r.lower, r.upper};
  }
  bool all_larger = true, some_not_larger = false;
  for (const Subgroup& n : minimal_normal_subgroups(g)) {
    QuotientEvidence ev;
    ev.normal_order = n.order;
    const CosetAction action = coset_action(g, n);
    const Group quotient(action.image);
    ev.quotient_order = quotient.order();
    if (quotient.is_cyclic()) {
      ev.quotient_cyclic = true;
    } else {
      try {
        const CoverResult r = sigma_exact(quotient, maximal_classes(quotient, budget.lattice), budget.solve);
        ev.quotient_sigma = {r.lower, r.upper};
      } catch (const BudgetExceeded&) {
        ev.quotient_sigma = {3, kUnknown};  // noncyclic groups need at least 3
      }
      if (!(report.sigma.hi < ev.quotient_sigma.lo)) all_larger = false;
      if (ev.quotient_sigma.hi <= report.sigma.lo) some_not_larger = true;
    }
    report.evidence.push_back(ev);
  }
  if (some_not_larger) {
    report.elementary = false;
  } else if (all_larger) {
    report.elementary = true;
  } else {
    std::string msg = "budget leaves the comparison open; sigma(G) in " + std::to_string(report.sigma.lo) + ".." +
                      std::to_string(report.sigma.hi);
    for (const auto& ev : report.evidence) msg += "; " + ev.line();
    throw Undecided(msg);
  }
  return report;
}

}  // namespace covnum
