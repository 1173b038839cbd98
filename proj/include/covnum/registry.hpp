#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "covnum/exact.hpp"
#include "covnum/structure.hpp"

namespace covnum {

struct SigmaBounds {
  std::uint64_t lo = 0, hi = 0;
  friend bool operator==(const SigmaBounds&, const SigmaBounds&) = default;
};

/// Identifier of a closed-form family, e.g. "psl2".
struct FormulaId {
  std::string family;
  friend bool operator==(const FormulaId&, const FormulaId&) = default;
};

struct KnownEntry {
  std::string name;
  std::vector<std::string> aliases;
  std::variant<std::uint64_t, SigmaBounds, FormulaId> sigma;
  std::optional<std::uint64_t> degree;  // least primitivity degree
  std::vector<std::string> citations;

  bool is_exact() const { return std::holds_alternative<std::uint64_t>(sigma); }
  bool is_bounds() const { return std::holds_alternative<SigmaBounds>(sigma); }
  std::uint64_t exact() const { return std::get<std::uint64_t>(sigma); }
  /// Exact entries give (v, v).
  SigmaBounds bounds() const;
  std::string sigma_text() const;
  std::string citation_text() const;  // ';' separated
};

/// Registry fixture: tab-separated rows name, sigma, degree, citations,
/// optional aliases. Lines starting with '#' are comments.
class Registry {
 public:
  /// Throws ParseError, including on a name or alias used twice.
  static Registry parse(std::string_view text);
  static Registry load(const std::string& path);
  /// data/registry.tsv, loaded once.
  static const Registry& builtin();

  /// Case and whitespace insensitive; aliases resolve to their row.
  /// Throws UnknownName.
  const KnownEntry& lookup(std::string_view name) const;
  const KnownEntry* find(std::string_view name) const;
  const std::vector<KnownEntry>& entries() const { return entries_; }

 private:
  std::vector<KnownEntry> entries_;
  std::vector<std::pair<std::string, std::size_t>> index_;  // sorted by key
};

const KnownEntry& lookup_known(std::string_view name);

/// Families: symmetric-odd (n), symmetric-6k (n), alternating-4k+2 (n),
/// psl2 (q), pgl2 (q), suzuki (q), affine (n, q), solvable (p, d).
/// Throws OutOfRange outside a family's validity range, and UnknownName for
/// an unknown family.
std::uint64_t sigma_formula(std::string_view family, const std::vector<std::uint64_t>& params);

struct FormulaMatch {
  std::string family;
  std::vector<std::uint64_t> params;
};
/// Family and parameters for names such as S7, A10, PSL(2,11), AGL(3,2),
/// ASL(3,3), Sz(8), when the name's parameters lie in the family's range.
std::optional<FormulaMatch> formula_for_name(std::string_view name);

struct ChiefFactor {
  std::uint64_t order = 0;  // |H/K|
  std::uint64_t complements = 0;
};

struct SolvableSigma {
  std::uint64_t sigma = 0;
  /// Top-down chief series factors.
  std::vector<ChiefFactor> factors;
};

/// |H/K| + 1 for the smallest chief factor H/K with more than one
/// complement, counting complements over the whole subgroup lattice.
/// Throws CyclicGroup, std::invalid_argument for nonsolvable input, and
/// BudgetExceeded from the lattice.
SolvableSigma sigma_solvable_detail(const Group& g, const LatticeBudget& budget = {});
std::uint64_t sigma_solvable(const Group& g, const LatticeBudget& budget = {});

/// Explicit cover of AGL(n, q) on q^n points: the point stabilizers, and for
/// each 1-space W the affine maps whose linear part fixes W pointwise.
struct AffineCover {
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::shared_ptr<const Group> group;
  std::vector<Subgroup> c1;  // q^n point stabilizers
  std::vector<Subgroup> c2;  // (q^n - 1) / (q - 1) subgroups
  std::uint64_t total = 0;
};

/// Verifies by a scan of every element that the members are proper
/// subgroups covering the group. Throws BudgetExceeded when |AGL(n,q)|
/// exceeds max_order, CyclicGroup for AGL(1,2), OutOfRange for bad q.
AffineCover agl_cover(std::size_t n, std::uint32_t q, std::uint64_t max_order = 200'000);

struct ElementaryBudget {
  SolveBudget solve;
  LatticeBudget lattice;
};

struct QuotientEvidence {
  std::uint64_t normal_order = 0;   // |N|
  std::uint64_t quotient_order = 0;
  bool quotient_cyclic = false;     // sigma(G/N) is infinite
  SigmaBounds quotient_sigma;       // meaningful when not cyclic
  std::string line() const;
};

struct ElementaryReport {
  bool elementary = false;
  SigmaBounds sigma;  // of the group itself
  std::vector<QuotientEvidence> evidence;  // one per minimal normal subgroup
};

/// Decides sigma(G) < sigma(G/N) for every minimal normal N; larger normal
/// subgroups follow since sigma only grows along further quotients.
/// maximals: optional maximal classes of G (e.g. ingested); quotients always
/// use the computed lattice. Throws CyclicGroup, and Undecided when the
/// budgets leave a comparison open.
ElementaryReport is_sigma_elementary(const Group& g, const ElementaryBudget& budget = {},
                                     const MaxClassSet* maximals = nullptr);

}  // namespace covnum
