#include "covnum/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "covnum/error.hpp"

namespace covnum {

PermGroup::PermGroup(std::vector<Permutation> generators) {
  if (generators.empty()) throw std::invalid_argument("a group needs at least one generator");
  degree_ = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree_)
      throw DegreeMismatch("generators of degree " + std::to_string(degree_) + " and " +
                           std::to_string(g.degree()));
  generators_ = std::move(generators);
  build();
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return PermGroup({Permutation::identity(degree)});
}

void PermGroup::recompute_orbit(Level& level) const {
  level.orbit.clear();
  level.transversal.assign(degree_, std::nullopt);
  level.transversal[level.base] = Permutation::identity(degree_);
  level.orbit.push_back(level.base);
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point p = level.orbit[i];
    for (const auto& s : level.gens) {
      Point q = s[p];
      if (!level.transversal[q]) {
        level.transversal[q] = compose(*level.transversal[p], s);
        level.orbit.push_back(q);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    Point x = g[lv.base];
    if (!lv.transversal[x]) return {std::move(g), l};
    g = compose(g, lv.transversal[x]->inverse());
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::build() {
  levels_.clear();
  std::vector<Permutation> nontrivial;
  for (const auto& g : generators_)
    if (!g.is_identity()) nontrivial.push_back(g);
  if (!nontrivial.empty()) {
    Point b = static_cast<Point>(degree_);
    for (const auto& g : nontrivial) b = std::min(b, g.first_moved());
    Level top;
    top.base = b;
    top.gens = nontrivial;
    recompute_orbit(top);
    levels_.push_back(std::move(top));
    // Subsequent levels: each strong generator fixing the earlier base points.
    // Start with an empty chain below and let the Schreier generator loop
    // fill it in.
  }

  // Holt's SCHREIERSIMS loop, scanning levels from the bottom up.
  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restarted = false;
    for (std::size_t oi = 0; oi < levels_[i].orbit.size() && !restarted; ++oi) {
      Point p = levels_[i].orbit[oi];
      for (std::size_t si = 0; si < levels_[i].gens.size() && !restarted; ++si) {
        const Permutation& s = levels_[i].gens[si];
        const Permutation& up = *levels_[i].transversal[p];
        const Permutation& uq = *levels_[i].transversal[s[p]];
        Permutation schreier = compose(compose(up, s), uq.inverse());
        if (schreier.is_identity()) continue;
        auto [h, j] = strip(std::move(schreier), i + 1);
        if (h.is_identity()) continue;
        if (j == levels_.size()) {
          Level fresh;
          fresh.base = h.first_moved();
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(h);
          recompute_orbit(levels_[l]);
        }
        i = j + 1;  // the while condition decrements back to j
        restarted = true;
      }
    }
  }

  base_.clear();
  order_ = 1;
  for (const auto& lv : levels_) {
    base_.push_back(lv.base);
    order_ *= lv.orbit.size();
  }
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [h, j] = strip(g, 0);
  return j == levels_.size() && h.is_identity();
}

std::vector<Point> PermGroup::basic_orbit(std::size_t level) const { return levels_.at(level).orbit; }

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<int> seen(degree_, -1);
  std::vector<std::vector<Point>> result;
  for (Point start = 0; start < degree_; ++start) {
    if (seen[start] >= 0) continue;
    std::vector<Point> orbit{start};
    seen[start] = static_cast<int>(result.size());
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : generators_) {
        Point q = g[orbit[i]];
        if (seen[q] < 0) {
          seen[q] = static_cast<int>(result.size());
          orbit.push_back(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& gens) {
  std::vector<Permutation> current;
  for (const auto& g : gens)
    if (!g.is_identity()) current.push_back(g);
  if (current.empty()) return PermGroup::trivial(group.degree());
  PermGroup closure(current);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < current.size() && !grew; ++i)
      for (const auto& g : group.generators()) {
        Permutation c = conjugate(current[i], g);
        if (!closure.contains(c)) {
          current.push_back(std::move(c));
          closure = PermGroup(current);
          grew = true;
          break;
        }
      }
  }
  return closure;
}

PermGroup derived_subgroup(const PermGroup& group) {
  std::vector<Permutation> comms;
  const auto& gs = group.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      Permutation c = compose(compose(gs[i].inverse(), gs[j].inverse()), compose(gs[i], gs[j]));
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(group, comms);
}

bool is_solvable(const PermGroup& group) {
  PermGroup current = group;
  while (current.order() > 1) {
    PermGroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

std::vector<Permutation> enumerate_elements(const PermGroup& group, std::uint64_t cap) {
  if (group.order() > cap)
    throw CapExceeded("group of order " + std::to_string(group.order()) +
                          " exceeds enumeration cap " + std::to_string(cap),
                      group.order(), cap);
  std::vector<Permutation> out;
  out.reserve(group.order());
  group.for_each_element([&](const Permutation& g) { out.push_back(g); });
  return out;
}

}  // namespace covnum
