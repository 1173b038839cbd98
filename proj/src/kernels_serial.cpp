#include <numeric>
#include <unordered_set>

#include "covnum/kernels.hpp"

namespace covnum::kernels {

std::vector<std::uint16_t> multiplication_table_serial(const ElementStore& store) {
  const std::size_t n = store.size();
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<std::uint16_t>(
          store.multiply_slow(static_cast<ElementId>(a), static_cast<ElementId>(b)));
  return table;
}

namespace {

std::uint64_t order_of(std::span<const Point> images) {
  std::vector<char> seen(images.size(), 0);
  std::uint64_t result = 1;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t p = start; !seen[p]; p = images[p]) {
      seen[p] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

}  // namespace

std::vector<std::uint64_t> element_orders_serial(const ElementStore& store) {
  std::vector<std::uint64_t> out(store.size());
  for (std::size_t i = 0; i < store.size(); ++i) out[i] = order_of(store.images(static_cast<ElementId>(i)));
  return out;
}

std::vector<std::vector<std::uint64_t>> class_histograms_serial(std::span<const ElementSet> sets,
                                                                std::span<const int> class_of,
                                                                std::size_t num_classes) {
  std::vector<std::vector<std::uint64_t>> out(sets.size(), std::vector<std::uint64_t>(num_classes, 0));
  for (std::size_t s = 0; s < sets.size(); ++s)
    sets[s].for_each([&](std::size_t e) {
      int c = class_of[e];
      if (c >= 0) ++out[s][static_cast<std::size_t>(c)];
    });
  return out;
}

ConjugateOrbit subgroup_class_serial(const Group& group, const ElementSet& start) {
  ConjugateOrbit orbit{{start}, {Group::identity_id()}};
  std::unordered_set<ElementSet, ElementSetHash> seen{start};
  for (std::size_t i = 0; i < orbit.sets.size(); ++i)
    for (ElementId g : group.generator_ids()) {
      ElementSet next = group.conjugate_set(orbit.sets[i], g);
      if (seen.insert(next).second) {
        orbit.sets.push_back(std::move(next));
        orbit.conjugators.push_back(group.mul(orbit.conjugators[i], g));
      }
    }
  return orbit;
}

std::vector<ElementSet> conjugate_sets_serial(const Group& group, const ElementSet& s,
                                              std::span<const ElementId> conjugators) {
  std::vector<ElementSet> out;
  out.reserve(conjugators.size());
  for (ElementId g : conjugators) out.push_back(group.conjugate_set(s, g));
  return out;
}

}  // namespace covnum::kernels
