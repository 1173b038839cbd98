#pragma once

// Data-parallel kernels. Each kernel has a serial reference that the tests
// compare against and an OpenMP version used by the library. Both produce
// identical output for identical input.

#include <cstdint>
#include <span>
#include <vector>

#include "covnum/element_set.hpp"
#include "covnum/group.hpp"

namespace covnum::kernels {

/// Row-major |G| x |G| table of products, entry a*|G|+b = id(a * b).
std::vector<std::uint16_t> multiplication_table_serial(const ElementStore& store);
std::vector<std::uint16_t> multiplication_table_omp(const ElementStore& store, int threads = 0);

/// Element orders for every stored element.
std::vector<std::uint64_t> element_orders_serial(const ElementStore& store);
std::vector<std::uint64_t> element_orders_omp(const ElementStore& store, int threads = 0);

/// For each set, how many of its elements fall in each class;
/// result[s][c] with `class_of` giving -1 for elements outside every class.
std::vector<std::vector<std::uint64_t>> class_histograms_serial(std::span<const ElementSet> sets,
                                                                std::span<const int> class_of,
                                                                std::size_t num_classes);
std::vector<std::vector<std::uint64_t>> class_histograms_omp(std::span<const ElementSet> sets,
                                                             std::span<const int> class_of,
                                                             std::size_t num_classes,
                                                             int threads = 0);

/// The distinct conjugates of a subset under G, in order of first appearance
/// along the breadth-first walk by G's generators; sets[i] = start^conjugators[i].
struct ConjugateOrbit {
  std::vector<ElementSet> sets;
  std::vector<ElementId> conjugators;
};
ConjugateOrbit subgroup_class_serial(const Group& group, const ElementSet& start);
/// Same orbit in the same order; each breadth-first layer is conjugated in parallel.
ConjugateOrbit subgroup_class_omp(const Group& group, const ElementSet& start, int threads = 0);

/// Conjugates s^g for each g in `conjugators` (one output per conjugator).
std::vector<ElementSet> conjugate_sets_serial(const Group& group, const ElementSet& s,
                                              std::span<const ElementId> conjugators);
std::vector<ElementSet> conjugate_sets_omp(const Group& group, const ElementSet& s,
                                           std::span<const ElementId> conjugators, int threads = 0);

int max_threads();

}  // namespace covnum::kernels
