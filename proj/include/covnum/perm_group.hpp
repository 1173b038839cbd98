#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "covnum/permutation.hpp"

namespace covnum {

/// A permutation group given by generators, with a stabilizer chain
/// (base and strong generating set) built by deterministic Schreier-Sims.
///
/// Base points are chosen as the smallest point moved by the element that
/// forces a new level, so the chain, the element enumeration order and all
/// downstream class orderings are reproducible.
class PermGroup {
 public:
  /// Throws DegreeMismatch when generators disagree on degree and
  /// std::invalid_argument on an empty list.
  explicit PermGroup(std::vector<Permutation> generators);

  /// Trivial group of the given degree.
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::uint64_t order() const { return order_; }

  bool contains(const Permutation& g) const;

  const std::vector<Point>& base() const { return base_; }
  /// Orbit of the i-th base point under the i-th stabilizer.
  std::vector<Point> basic_orbit(std::size_t level) const;
  std::size_t levels() const { return levels_.size(); }

  /// Visit every element exactly once, identity first. The visit order is
  /// the mixed-radix order of transversal coordinates.
  template <class F>
  void for_each_element(F&& f) const;

  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    // transversal[p] maps base to p; empty optional outside the orbit
    std::vector<std::optional<Permutation>> transversal;
  };

  void build();
  void recompute_orbit(Level& level) const;
  // Sift g through levels [from, end); returns residue and the level at which
  // it stopped (levels_.size() when it sifted through everything).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::vector<Point> base_;
  std::uint64_t order_ = 1;
};

/// Normal closure of `gens` inside `group`.
PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& gens);

/// Commutator subgroup [G, G].
PermGroup derived_subgroup(const PermGroup& group);

/// True iff the derived series reaches the trivial group.
bool is_solvable(const PermGroup& group);

/// All elements, identity first. Throws CapExceeded when |G| > cap.
std::vector<Permutation> enumerate_elements(const PermGroup& group, std::uint64_t cap);

template <class F>
void PermGroup::for_each_element(F&& f) const {
  const std::size_t k = levels_.size();
  if (k == 0) {
    f(Permutation::identity(degree_));
    return;
  }
  // partial[l] = t_{k-1} * ... * t_l
  std::vector<std::size_t> coord(k, 0);
  std::vector<Permutation> partial(k + 1, Permutation::identity(degree_));
  auto rebuild = [&](std::size_t from) {
    for (std::size_t l = from + 1; l-- > 0;) {
      const Level& lv = levels_[l];
      partial[l] = compose(partial[l + 1], *lv.transversal[lv.orbit[coord[l]]]);
    }
  };
  rebuild(k - 1);
  while (true) {
    f(partial[0]);
    std::size_t l = 0;
    while (l < k && ++coord[l] == levels_[l].orbit.size()) {
      coord[l] = 0;
      ++l;
    }
    if (l == k) break;
    rebuild(l);
  }
}

}  // namespace covnum
