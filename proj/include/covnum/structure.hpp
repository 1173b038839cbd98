#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covnum/element_set.hpp"
#include "covnum/group.hpp"
#include "covnum/group_io.hpp"

namespace covnum {

/// A subgroup of an enumerated Group, held as its element set.
struct Subgroup {
  std::vector<ElementId> generator_ids;
  ElementSet elements;
  std::uint64_t order = 0;
  std::uint64_t index = 0;

  std::vector<Permutation> generators(const Group& g) const;
  bool contains(ElementId x) const { return elements.test(x); }
  bool is_subgroup_of(const Subgroup& other) const { return elements.is_subset_of(other.elements); }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

/// Subgroup generated by the given elements.
Subgroup make_subgroup(const Group& g, std::vector<ElementId> gens);
/// Throws std::invalid_argument when a generator is not in g.
Subgroup make_subgroup(const Group& g, const std::vector<Permutation>& gens);
/// Wraps a set already known to be a subgroup; a generating set is chosen greedily.
Subgroup subgroup_from_set(const Group& g, ElementSet elements);

struct LatticeBudget {
  std::uint64_t max_group_order = 2000;
  std::size_t max_subgroups = 250'000;
  int threads = 0;
};

/// One conjugacy class of subgroups with all of its members.
struct SubgroupClass {
  Subgroup representative;
  std::vector<ElementSet> members;  // members[0] is the representative
};

/// All subgroups by conjugacy class, sorted by order then element set.
/// Throws BudgetExceeded.
std::vector<SubgroupClass> subgroup_classes(const Group& g, const LatticeBudget& budget = {});

/// Every subgroup exactly once (trivial and whole group included), sorted by
/// order then element set.
std::vector<Subgroup> all_subgroups(const Group& g, const LatticeBudget& budget = {});

enum class MaxSource { computed, ingested };

struct MaxClass {
  Subgroup representative;
  std::uint64_t class_length = 0;
  std::uint64_t index = 0;
  bool self_normalizing = false;
};

struct MaxClassSet {
  std::vector<MaxClass> classes;
  MaxSource provenance = MaxSource::computed;
  /// Ingestion only: coset representatives checked and whether that covered
  /// every nontrivial coset of every class.
  std::uint64_t maximality_checks = 0;
  bool maximality_exhaustive = true;
};

/// Classes ordered by class length, then index, then element set; M1, M2, ...
/// follow that order. Throws BudgetExceeded.
MaxClassSet maximal_classes(const Group& g, const LatticeBudget& budget = {});

struct IngestOptions {
  /// Classes with index at most this get every coset checked.
  std::uint64_t exhaustive_index = 20'000;
  std::uint64_t samples = 2'000;
  std::uint64_t seed = 0x5eed;
};

/// Validates membership, index, class length, maximality and pairwise
/// non-conjugacy. Throws IngestInvalid.
MaxClassSet ingest_maximal_classes(const Group& g, const std::vector<MaximalSpec>& specs,
                                   const IngestOptions& options = {});

/// All conjugates of a subgroup (in walk order) with the conjugating elements.
struct ConjugateList {
  std::vector<ElementSet> sets;
  std::vector<ElementId> conjugators;
};
ConjugateList conjugates(const Group& g, const ElementSet& h, int threads = 0);

Subgroup normal_core(const Group& g, const Subgroup& h);

bool is_normal(const Group& g, const ElementSet& h);

struct CosetAction {
  PermGroup image;
  Subgroup kernel;
  /// coset_of[x] is the right coset H x as a point 0..index-1.
  std::vector<std::uint32_t> coset_of;
};

/// Action on right cosets. Throws IndexTooLarge when |G:H| > max_degree.
CosetAction coset_action(const Group& g, const Subgroup& h, std::uint64_t max_degree = 50'000);

/// Sorted by order then element set; empty only for the trivial group.
std::vector<Subgroup> minimal_normal_subgroups(const Group& g);

struct PrimitivityInfo {
  bool primitive = false;
  bool monolithic = false;
  std::optional<std::uint64_t> min_primitivity_degree;
};
PrimitivityInfo is_primitive_monolithic(const Group& g, const MaxClassSet& mx);

bool is_solvable(const Group& g);

/// Least index of a maximal subgroup not containing the normal subgroup n.
/// Throws NoSupplement.
std::uint64_t min_supplement_index(const Group& g, const MaxClassSet& mx, const Subgroup& n);

/// One table cell. k is absent only for fixture cells given without it.
struct IncidenceEntry {
  std::uint64_t n = 0;
  std::optional<std::uint64_t> k;
  bool operator==(const IncidenceEntry&) const = default;
};

/// Rows are element classes, columns maximal-subgroup classes.
struct IncidenceProfile {
  std::vector<std::string> row_labels;
  std::vector<std::uint64_t> class_sizes;  // 0 when not derivable
  std::vector<std::uint64_t> column_lengths;
  std::vector<std::uint64_t> column_indices;  // 0 when unknown
  std::vector<std::vector<IncidenceEntry>> entries;  // [row][column]

  std::size_t rows() const { return row_labels.size(); }
  std::size_t columns() const { return column_lengths.size(); }
};

IncidenceProfile incidence_profile(const Group& g, const MaxClassSet& mx, int threads = 0);

/// Tab-separated layout:
///   class<TAB>M1(<length>)<TAB>M2(<length>)...
///   <label><TAB><cell><TAB><cell>...
/// cells: `0`, `<n>,P` (k = 1), `<n>_<k>` (k >= 2), or bare `<n>` (k unknown).
std::string profile_to_tsv(const IncidenceProfile& p);
/// Throws ParseError. Class sizes are derived from cells with known k.
IncidenceProfile profile_from_tsv(std::string_view text);
IncidenceProfile read_profile(const std::string& path);

}  // namespace covnum
