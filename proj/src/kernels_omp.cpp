#include <omp.h>

#include <numeric>
#include <unordered_set>

#include "covnum/kernels.hpp"

namespace covnum::kernels {

namespace {

int resolve(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

std::uint64_t order_of(std::span<const Point> images, std::vector<char>& seen) {
  seen.assign(images.size(), 0);
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

int max_threads() { return omp_get_max_threads(); }

std::vector<std::uint16_t> multiplication_table_omp(const ElementStore& store, int threads) {
  const std::int64_t n = static_cast<std::int64_t>(store.size());
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n * n));
#pragma omp parallel for schedule(static) num_threads(resolve(threads))
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a * n + b)] = static_cast<std::uint16_t>(
          store.multiply_slow(static_cast<ElementId>(a), static_cast<ElementId>(b)));
  return table;
}

std::vector<std::uint64_t> element_orders_omp(const ElementStore& store, int threads) {
  const std::int64_t n = static_cast<std::int64_t>(store.size());
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n));
#pragma omp parallel num_threads(resolve(threads))
  {
    std::vector<char> seen;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
      out[static_cast<std::size_t>(i)] = order_of(store.images(static_cast<ElementId>(i)), seen);
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> class_histograms_omp(std::span<const ElementSet> sets,
                                                             std::span<const int> class_of,
                                                             std::size_t num_classes, int threads) {
  std::vector<std::vector<std::uint64_t>> out(sets.size(), std::vector<std::uint64_t>(num_classes, 0));
  const std::int64_t m = static_cast<std::int64_t>(sets.size());
#pragma omp parallel for schedule(dynamic) num_threads(resolve(threads))
  for (std::int64_t s = 0; s < m; ++s) {
    auto& row = out[static_cast<std::size_t>(s)];
    sets[static_cast<std::size_t>(s)].for_each([&](std::size_t e) {
      int c = class_of[e];
      if (c >= 0) ++row[static_cast<std::size_t>(c)];
    });
  }
  return out;
}

std::vector<ElementSet> conjugate_sets_omp(const Group& group, const ElementSet& s,
                                           std::span<const ElementId> conjugators, int threads) {
  std::vector<ElementSet> out(conjugators.size());
  const std::int64_t m = static_cast<std::int64_t>(conjugators.size());
#pragma omp parallel for schedule(dynamic) num_threads(resolve(threads))
  for (std::int64_t i = 0; i < m; ++i)
    out[static_cast<std::size_t>(i)] = group.conjugate_set(s, conjugators[static_cast<std::size_t>(i)]);
  return out;
}

ConjugateOrbit subgroup_class_omp(const Group& group, const ElementSet& start, int threads) {
  ConjugateOrbit orbit{{start}, {Group::identity_id()}};
  std::unordered_set<ElementSet, ElementSetHash> seen{start};
  const auto& gens = group.generator_ids();
  const std::int64_t ng = static_cast<std::int64_t>(gens.size());
  std::size_t layer_begin = 0;
  while (layer_begin < orbit.sets.size()) {
    const std::size_t layer_end = orbit.sets.size();
    const std::int64_t work = static_cast<std::int64_t>(layer_end - layer_begin) * ng;
    std::vector<ElementSet> next(static_cast<std::size_t>(work));
#pragma omp parallel for schedule(dynamic) num_threads(resolve(threads))
    for (std::int64_t w = 0; w < work; ++w) {
      std::size_t i = layer_begin + static_cast<std::size_t>(w / ng);
      next[static_cast<std::size_t>(w)] =
          group.conjugate_set(orbit.sets[i], gens[static_cast<std::size_t>(w % ng)]);
    }
    for (std::int64_t w = 0; w < work; ++w) {
      std::size_t i = layer_begin + static_cast<std::size_t>(w / ng);
      if (seen.insert(next[static_cast<std::size_t>(w)]).second) {
        orbit.sets.push_back(std::move(next[static_cast<std::size_t>(w)]));
        orbit.conjugators.push_back(group.mul(orbit.conjugators[i], gens[static_cast<std::size_t>(w % ng)]));
      }
    }
    layer_begin = layer_end;
  }
  return orbit;
}

}  // namespace covnum::kernels
