#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covnum/element_set.hpp"
#include "covnum/structure.hpp"

namespace covnum {

/// Set-cover instance over universe indices 0..universe_size-1.
struct CoverInstance {
  std::size_t universe_size = 0;
  /// Group element behind each universe index; empty for imported instances.
  std::vector<ElementId> universe;
  /// Element class of each universe index, or -1 when unknown.
  std::vector<int> element_class;
  std::vector<ElementSet> columns;
  /// Subgroup class of each column, or -1 when unknown.
  std::vector<int> column_class;
  /// Order of a group permuting the columns of each column class
  /// transitively while fixing the universe setwise; 1 when no such
  /// symmetry is known.
  std::uint64_t symmetry = 1;
};

/// Universe: every element of the chosen element classes. Columns: every
/// conjugate of every chosen maximal class, restricted to the universe, with
/// empty and repeated columns dropped. Throws Infeasible with the first
/// uncovered universe index as witness.
CoverInstance build_instance(const Group& g, const MaxClassSet& mx, std::vector<std::size_t> element_classes,
                             std::vector<std::size_t> subgroup_classes, int threads = 0);

struct SolveBudget {
  std::uint64_t max_nodes = 200'000'000;
  double time_limit_seconds = 600.0;  // <= 0 disables the clock
  int threads = 0;                     // 0 = OpenMP default, 1 = serial reference
  /// Known cover (column ids) used as the first incumbent.
  std::optional<std::vector<std::size_t>> incumbent;
  /// Fix the first chosen column of a class to its least id at the root;
  /// only used when the instance records a symmetry.
  bool root_symmetry = true;
};

struct CoverResult {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool optimal = false;
  std::vector<std::size_t> chosen;  // sorted column ids, |chosen| == upper
  std::uint64_t nodes_explored = 0;
  bool budget_exhausted = false;
};

/// Branch and bound. Never reports a wrong bound: exhausting the budget only
/// leaves lower < upper.
CoverResult solve(const CoverInstance& instance, const SolveBudget& budget = {});

/// Columns of the given subgroup classes.
std::vector<std::size_t> columns_of_classes(const CoverInstance& instance, const std::vector<std::size_t>& classes);

/// Covering number over all nonidentity elements and all maximal classes.
/// Throws CyclicGroup.
CoverResult sigma_exact(const Group& g, const MaxClassSet& mx, const SolveBudget& budget = {});
CoverResult sigma_exact(const Group& g, const SolveBudget& budget = {}, const LatticeBudget& lattice = {});

/// Text format:
///   universe <U>
///   columns <C>
///   <C lines: sorted 0-based universe indices separated by spaces>
///   classes <C class ids>      optional
///   symmetry <order>           optional
std::string export_instance(const CoverInstance& instance);
/// Throws ParseError.
CoverInstance import_instance(std::string_view text);

/// CPLEX LP text: minimise the column count subject to one covering row per
/// universe index, all variables binary.
std::string write_lp(const CoverInstance& instance);

}  // namespace covnum
