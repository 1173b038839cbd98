#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covnum/structure.hpp"

namespace covnum {

/// How the greedy upper bound grows when a subgroup class is taken:
/// faithful adds the index |G:M|, corrected adds the class length |G:N_G(M)|.
enum class UpperMode { faithful, corrected };

std::string to_string(UpperMode m);
/// Accepts "faithful" or "corrected"; throws std::invalid_argument.
UpperMode parse_upper_mode(std::string_view s);

enum class Verdict { minimal, unique_minimal, inconclusive };
std::string to_string(Verdict v);

using Rational = boost::rational<std::int64_t>;

/// Outcome of the partition-cover minimality test for a set of element
/// classes (pi) and a set of maximal-subgroup classes (cover).
struct CertificateReport {
  std::vector<std::size_t> pi_classes;
  std::vector<std::size_t> cover_classes;
  /// c(M) for every subgroup class outside the cover.
  std::map<std::size_t, Rational> c_values;
  bool partition_ok = false;
  Verdict verdict = Verdict::inconclusive;
};

/// Pre: every cover class contains elements of pi (std::invalid_argument
/// otherwise). Throws NotACover when a class of pi meets no cover class.
CertificateReport verify_minimal_cover(const IncidenceProfile& profile, std::vector<std::size_t> pi,
                                       std::vector<std::size_t> cover);

struct GreedyIteration {
  std::size_t element_class = 0;
  std::size_t subgroup_class = 0;
  std::uint64_t best = 0;
  std::uint64_t added = 0;
};

struct GreedyTrace {
  std::vector<GreedyIteration> iterations;
  std::vector<std::uint64_t> minlist;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool certified = false;
  UpperMode mode = UpperMode::corrected;
  /// Present when every iteration added exactly `best` subgroups.
  std::optional<CertificateReport> certificate;
};

/// Greedy class-level cover. Throws Unbounded when some element class lies in
/// no maximal subgroup, and std::invalid_argument in faithful mode when the
/// profile carries no subgroup indices.
GreedyTrace covering_number_bounds(const IncidenceProfile& profile, UpperMode mode = UpperMode::corrected);
GreedyTrace covering_number_bounds(const Group& g, const MaxClassSet& mx, UpperMode mode = UpperMode::corrected);

struct ClassBound {
  std::size_t element_class = 0;
  std::uint64_t remaining = 0;
  std::uint64_t n_max = 0;
  std::uint64_t bound = 0;  // ceil(remaining / n_max)
  std::vector<std::size_t> support;  // subgroup classes meeting the class
};

struct CountingBound {
  std::uint64_t total = 0;
  /// Classes whose bounds were added; supports are pairwise disjoint.
  std::vector<ClassBound> chosen;
  std::vector<ClassBound> per_class;
};

/// Sum of per-class counting bounds over a maximum-weight family of element
/// classes with pairwise disjoint supports. Throws Unbounded.
CountingBound counting_lower_bound(const IncidenceProfile& profile,
                                   const std::map<std::size_t, std::uint64_t>& remaining);
/// Every class at its full size.
CountingBound counting_lower_bound(const IncidenceProfile& profile);

}  // namespace covnum
