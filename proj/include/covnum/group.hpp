#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covnum/element_set.hpp"
#include "covnum/perm_group.hpp"
#include "covnum/permutation.hpp"

namespace covnum {

using ElementId = std::uint32_t;

/// Flat storage of enumerated permutations with an open-addressing index.
class ElementStore {
 public:
  ElementStore() = default;
  ElementStore(std::size_t degree, std::vector<Point> flat_images);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return size_; }
  std::span<const Point> images(ElementId id) const {
    return {flat_.data() + static_cast<std::size_t>(id) * degree_, degree_};
  }
  std::optional<ElementId> find(std::span<const Point> images) const;

  /// Id of a * b (a then b), computed pointwise and looked up.
  ElementId multiply_slow(ElementId a, ElementId b) const;

 private:
  std::size_t slot_for(std::span<const Point> images) const;

  std::size_t degree_ = 0;
  std::size_t size_ = 0;
  std::vector<Point> flat_;
  std::vector<ElementId> slots_;  // kEmpty marks a free slot
};

/// One nonidentity conjugacy class x^G.
struct ConjClass {
  ElementId representative = 0;
  Permutation rep;
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  /// cl_<order> or cl_<order>,<j> when several classes share the order.
  std::string label;
};

/// Nonidentity classes sorted by element order descending, then size
/// descending, then representative id.
struct ConjClassTable {
  std::vector<ConjClass> classes;
  std::uint64_t total = 0;  // |G| - 1
};

struct EnumerationOptions {
  std::uint64_t cap = 1'000'000;
  /// A full multiplication table is cached when |G| is at most this.
  std::uint64_t table_cap = 4096;
  /// OpenMP threads for construction kernels; 0 = runtime default, 1 = serial.
  int threads = 0;
};

/// A permutation group small enough to enumerate, with every element given a
/// dense id (identity is id 0). Immutable after construction and safe to
/// share across threads.
class Group {
 public:
  explicit Group(PermGroup perm_group, EnumerationOptions options = {});
  static Group from_generators(std::vector<Permutation> gens, EnumerationOptions options = {}) {
    return Group(PermGroup(std::move(gens)), options);
  }

  const PermGroup& perm_group() const { return perm_; }
  std::uint64_t order() const { return store_.size(); }
  std::size_t degree() const { return perm_.degree(); }

  std::span<const Point> images(ElementId id) const { return store_.images(id); }
  Permutation element(ElementId id) const;
  std::optional<ElementId> find(const Permutation& g) const;
  /// Throws std::out_of_range when g is not a member.
  ElementId id_of(const Permutation& g) const;

  static constexpr ElementId identity_id() { return 0; }

  ElementId mul(ElementId a, ElementId b) const {
    return table_.empty() ? store_.multiply_slow(a, b)
                          : table_[static_cast<std::size_t>(a) * store_.size() + b];
  }
  ElementId inv(ElementId a) const { return inverse_[a]; }
  /// g^-1 x g
  ElementId conj(ElementId x, ElementId g) const { return mul(mul(inverse_[g], x), g); }
  std::uint64_t element_order(ElementId a) const { return orders_[a]; }
  bool has_table() const { return !table_.empty(); }

  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }
  const ConjClassTable& classes() const { return classes_; }
  /// Index into classes().classes, or -1 for the identity.
  int class_of(ElementId a) const { return class_of_[a]; }
  std::span<const int> class_map() const { return class_of_; }

  const ElementStore& store() const { return store_; }

  /// Subgroup generated by the given elements, as an element set.
  ElementSet generate(std::span<const ElementId> gens) const;
  /// Smallest subgroup containing `start` (assumed a subgroup) and `extra`.
  ElementSet join(const ElementSet& start, std::span<const ElementId> start_gens,
                  ElementId extra) const;
  ElementSet all() const;
  ElementSet conjugate_set(const ElementSet& s, ElementId g) const;

  bool is_cyclic() const;

 private:
  void compute_classes();

  PermGroup perm_;
  ElementStore store_;
  std::vector<std::uint16_t> table_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<ElementId> generator_ids_;
  ConjClassTable classes_;
  std::vector<int> class_of_;
};

/// Class table of an enumerable group (the group's cached table).
inline const ConjClassTable& conjugacy_classes(const Group& g) { return g.classes(); }

}  // namespace covnum
