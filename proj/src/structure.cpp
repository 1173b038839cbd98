#include "covnum/structure.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "covnum/error.hpp"
#include "covnum/kernels.hpp"

namespace covnum {

std::vector<Permutation> Subgroup::generators(const Group& g) const {
  std::vector<Permutation> out;
  for (ElementId id : generator_ids) out.push_back(g.element(id));
  if (out.empty()) out.push_back(Permutation::identity(g.degree()));
  return out;
}

Subgroup make_subgroup(const Group& g, std::vector<ElementId> gens) {
  std::erase(gens, Group::identity_id());
  Subgroup s;
  s.elements = g.generate(gens);
  s.generator_ids = std::move(gens);
  s.order = s.elements.count();
  s.index = g.order() / s.order;
  return s;
}

Subgroup make_subgroup(const Group& g, const std::vector<Permutation>& gens) {
  std::vector<ElementId> ids;
  for (const auto& p : gens) {
    auto id = g.find(p);
    if (!id) throw std::invalid_argument("generator " + p.to_cycles() + " is not in the group");
    ids.push_back(*id);
  }
  return make_subgroup(g, std::move(ids));
}

Subgroup subgroup_from_set(const Group& g, ElementSet elements) {
  Subgroup s;
  s.order = elements.count();
  s.index = g.order() / s.order;
  ElementSet span(g.order());
  span.set(Group::identity_id());
  elements.for_each([&](std::size_t x) {
    if (span.test(x)) return;
    span = g.join(span, s.generator_ids, static_cast<ElementId>(x));
    s.generator_ids.push_back(static_cast<ElementId>(x));
  });
  s.elements = std::move(elements);
  return s;
}

ConjugateList conjugates(const Group& g, const ElementSet& h, int threads) {
  auto orbit = threads == 1 ? kernels::subgroup_class_serial(g, h) : kernels::subgroup_class_omp(g, h, threads);
  return {std::move(orbit.sets), std::move(orbit.conjugators)};
}

namespace {

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<ElementId> conjugate_ids(const Group& g, const std::vector<ElementId>& ids, ElementId c) {
  std::vector<ElementId> out;
  out.reserve(ids.size());
  for (ElementId x : ids) out.push_back(g.conj(x, c));
  return out;
}

bool set_less(const ElementSet& a, const ElementSet& b) { return a < b; }

}  // namespace

std::vector<SubgroupClass> subgroup_classes(const Group& g, const LatticeBudget& budget) {
  if (g.order() > budget.max_group_order)
    throw BudgetExceeded("subgroup lattice of a group of order " + std::to_string(g.order()) +
                         " exceeds max_group_order " + std::to_string(budget.max_group_order));

  // Cyclic subgroups of prime-power order, one generator each.
  std::vector<ElementId> cyclic_gens;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (ElementId x = 1; x < g.order(); ++x) {
      if (!is_prime_power(g.element_order(x))) continue;
      std::vector<ElementId> one{x};
      if (seen.insert(g.generate(one)).second) cyclic_gens.push_back(x);
    }
  }

  std::vector<SubgroupClass> classes;
  std::unordered_set<ElementSet, ElementSetHash> known;
  std::size_t total = 0;
  auto add = [&](ElementSet set, const std::vector<ElementId>& gens) {
    if (known.count(set)) return;
    ConjugateList orbit = conjugates(g, set, budget.threads);
    total += orbit.sets.size();
    if (total > budget.max_subgroups)
      throw BudgetExceeded("subgroup lattice exceeds max_subgroups " + std::to_string(budget.max_subgroups));
    std::size_t best = 0;
    for (std::size_t i = 1; i < orbit.sets.size(); ++i)
      if (orbit.sets[i] < orbit.sets[best]) best = i;
    for (const auto& s : orbit.sets) known.insert(s);
    SubgroupClass cls;
    cls.representative.generator_ids = conjugate_ids(g, gens, orbit.conjugators[best]);
    cls.representative.elements = orbit.sets[best];
    cls.representative.order = orbit.sets[best].count();
    cls.representative.index = g.order() / cls.representative.order;
    std::sort(orbit.sets.begin(), orbit.sets.end(), set_less);
    cls.members = std::move(orbit.sets);
    classes.push_back(std::move(cls));
  };

  ElementSet trivial(g.order());
  trivial.set(Group::identity_id());
  add(trivial, {});
  for (ElementId z : cyclic_gens) {
    std::vector<ElementId> one{z};
    add(g.generate(one), one);
  }
  // Every subgroup is a join of prime-power cyclic subgroups, so extending
  // one representative per class by every cyclic subgroup reaches a
  // conjugate of each subgroup.
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const ElementSet rep = classes[ci].representative.elements;
    const std::vector<ElementId> gens = classes[ci].representative.generator_ids;
    if (rep.count() == g.order()) continue;
    for (ElementId z : cyclic_gens) {
      if (rep.test(z)) continue;
      ElementSet joined = g.join(rep, gens, z);
      if (known.count(joined)) continue;
      std::vector<ElementId> next = gens;
      next.push_back(z);
      add(std::move(joined), next);
    }
  }

  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.order != b.representative.order) return a.representative.order < b.representative.order;
    return a.representative.elements < b.representative.elements;
  });
  return classes;
}

std::vector<Subgroup> all_subgroups(const Group& g, const LatticeBudget& budget) {
  auto classes = subgroup_classes(g, budget);
  std::vector<Subgroup> out;
  for (const auto& cls : classes) {
    ConjugateList orbit = conjugates(g, cls.representative.elements, budget.threads);
    for (std::size_t i = 0; i < orbit.sets.size(); ++i) {
      Subgroup s;
      s.generator_ids = conjugate_ids(g, cls.representative.generator_ids, orbit.conjugators[i]);
      s.elements = std::move(orbit.sets[i]);
      s.order = cls.representative.order;
      s.index = cls.representative.index;
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.elements < b.elements;
  });
  return out;
}

namespace {

void sort_max_classes(std::vector<MaxClass>& classes) {
  std::sort(classes.begin(), classes.end(), [](const MaxClass& a, const MaxClass& b) {
    if (a.class_length != b.class_length) return a.class_length < b.class_length;
    if (a.index != b.index) return a.index < b.index;
    return a.representative.elements < b.representative.elements;
  });
}

}  // namespace

MaxClassSet maximal_classes(const Group& g, const LatticeBudget& budget) {
  MaxClassSet out;
  out.provenance = MaxSource::computed;
  if (g.order() == 1) return out;
  auto classes = subgroup_classes(g, budget);
  for (const auto& cls : classes) {
    const Subgroup& h = cls.representative;
    if (h.order == g.order()) continue;
    bool maximal = true;
    for (const auto& other : classes) {
      const std::uint64_t o = other.representative.order;
      if (o <= h.order || o == g.order() || o % h.order) continue;
      for (const auto& k : other.members)
        if (h.elements.is_subset_of(k)) {
          maximal = false;
          break;
        }
      if (!maximal) break;
    }
    if (!maximal) continue;
    MaxClass m;
    m.representative = h;
    m.class_length = cls.members.size();
    m.index = h.index;
    m.self_normalizing = m.class_length == m.index;
    out.classes.push_back(std::move(m));
  }
  sort_max_classes(out.classes);
  return out;
}

MaxClassSet ingest_maximal_classes(const Group& g, const std::vector<MaximalSpec>& specs,
                                   const IngestOptions& options) {
  MaxClassSet out;
  out.provenance = MaxSource::ingested;
  std::mt19937_64 rng(options.seed);
  std::vector<ConjugateList> orbits;
  for (const auto& spec : specs) {
    const std::string where = "class " + std::to_string(spec.label) + ": ";
    Subgroup m;
    try {
      m = make_subgroup(g, spec.generators);
    } catch (const std::invalid_argument& e) {
      throw IngestInvalid(where + e.what());
    }
    if (m.order == g.order()) throw IngestInvalid(where + "generators generate the whole group");
    if (m.index != spec.index)
      throw IngestInvalid(where + "declared index " + std::to_string(spec.index) + " but the subgroup has index " +
                          std::to_string(m.index));
    ConjugateList orbit = conjugates(g, m.elements);
    if (orbit.sets.size() != spec.length)
      throw IngestInvalid(where + "declared class length " + std::to_string(spec.length) + " but found " +
                          std::to_string(orbit.sets.size()));

    // <M, x> depends only on the right coset Mx; every proper overgroup of M
    // contains such an x, so checking every coset proves maximality.
    auto generates_all = [&](ElementId x) { return g.join(m.elements, m.generator_ids, x).count() == g.order(); };
    if (m.index - 1 <= options.exhaustive_index) {
      ElementSet covered = m.elements;
      for (ElementId x = 0; x < g.order(); ++x) {
        if (covered.test(x)) continue;
        m.elements.for_each([&](std::size_t h) { covered.set(g.mul(static_cast<ElementId>(h), x)); });
        ++out.maximality_checks;
        if (!generates_all(x)) throw IngestInvalid(where + "not maximal: " + g.element(x).to_cycles() +
                                                   " generates a proper overgroup");
      }
    } else {
      out.maximality_exhaustive = false;
      std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
      for (std::uint64_t s = 0; s < options.samples; ++s) {
        ElementId x = pick(rng);
        if (m.elements.test(x)) continue;
        ++out.maximality_checks;
        if (!generates_all(x)) throw IngestInvalid(where + "not maximal: " + g.element(x).to_cycles() +
                                                   " generates a proper overgroup");
      }
    }

    for (std::size_t i = 0; i < out.classes.size(); ++i) {
      if (out.classes[i].representative.order != m.order) continue;
      for (const auto& s : orbits[i].sets)
        if (s == m.elements)
          throw IngestInvalid(where + "conjugate to class " + std::to_string(specs[i].label));
    }
    MaxClass mc;
    mc.class_length = orbit.sets.size();
    mc.index = m.index;
    mc.self_normalizing = mc.class_length == mc.index;
    mc.representative = std::move(m);
    out.classes.push_back(std::move(mc));
    orbits.push_back(std::move(orbit));
  }
  return out;
}

Subgroup normal_core(const Group& g, const Subgroup& h) {
  ConjugateList orbit = conjugates(g, h.elements);
  ElementSet core = h.elements;
  for (const auto& s : orbit.sets) core &= s;
  return subgroup_from_set(g, std::move(core));
}

bool is_normal(const Group& g, const ElementSet& h) {
  for (ElementId s : g.generator_ids())
    if (!(g.conjugate_set(h, s) == h)) return false;
  return true;
}

CosetAction coset_action(const Group& g, const Subgroup& h, std::uint64_t max_degree) {
  if (h.index > max_degree)
    throw IndexTooLarge("coset action of degree " + std::to_string(h.index) + " exceeds limit " +
                        std::to_string(max_degree));
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  CosetAction out{PermGroup::trivial(1), {}, std::vector<std::uint32_t>(g.order(), kUnset)};
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (out.coset_of[x] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    h.elements.for_each([&](std::size_t e) { out.coset_of[g.mul(static_cast<ElementId>(e), x)] = c; });
  }
  std::vector<Permutation> gens;
  for (ElementId s : g.generator_ids()) {
    std::vector<Point> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) img[c] = out.coset_of[g.mul(reps[c], s)];
    gens.emplace_back(std::move(img));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(reps.size()));
  out.image = PermGroup(std::move(gens));
  out.kernel = normal_core(g, h);
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const Group& g) {
  const auto& cls = g.classes().classes;
  std::vector<std::vector<ElementId>> members(cls.size());
  for (ElementId x = 1; x < g.order(); ++x) members[static_cast<std::size_t>(g.class_of(x))].push_back(x);
  std::vector<ElementSet> closures;
  for (const auto& m : members) {
    // Only members outside the running closure are needed as generators.
    std::vector<ElementId> gens{m.front()};
    ElementSet n = g.generate(gens);
    for (ElementId x : m)
      if (!n.test(x)) {
        gens.push_back(x);
        n = g.generate(gens);
      }
    if (std::find(closures.begin(), closures.end(), n) == closures.end()) closures.push_back(std::move(n));
  }
  std::vector<Subgroup> out;
  for (const auto& n : closures) {
    bool minimal = true;
    for (const auto& other : closures)
      if (!(other == n) && other.is_subset_of(n)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(subgroup_from_set(g, n));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.elements < b.elements;
  });
  return out;
}

PrimitivityInfo is_primitive_monolithic(const Group& g, const MaxClassSet& mx) {
  PrimitivityInfo info;
  for (const auto& m : mx.classes) {
    if (normal_core(g, m.representative).order != 1) continue;
    info.primitive = true;
    if (!info.min_primitivity_degree || m.index < *info.min_primitivity_degree) info.min_primitivity_degree = m.index;
  }
  info.monolithic = minimal_normal_subgroups(g).size() == 1;
  return info;
}

bool is_solvable(const Group& g) { return is_solvable(g.perm_group()); }

std::uint64_t min_supplement_index(const Group& g, const MaxClassSet& mx, const Subgroup& n) {
  if (!is_normal(g, n.elements)) throw std::invalid_argument("min_supplement_index needs a normal subgroup");
  std::optional<std::uint64_t> best;
  // For maximal M and normal N, MN is M or G, so M supplements N iff N is not inside M.
  for (const auto& m : mx.classes)
    if (!n.elements.is_subset_of(m.representative.elements))
      if (!best || m.index < *best) best = m.index;
  if (!best) throw NoSupplement("every maximal subgroup contains the normal subgroup");
  return *best;
}

IncidenceProfile incidence_profile(const Group& g, const MaxClassSet& mx, int threads) {
  const auto& cls = g.classes().classes;
  std::vector<ElementSet> reps;
  for (const auto& m : mx.classes) reps.push_back(m.representative.elements);
  auto hist = threads == 1 ? kernels::class_histograms_serial(reps, g.class_map(), cls.size())
                           : kernels::class_histograms_omp(reps, g.class_map(), cls.size(), threads);
  IncidenceProfile p;
  for (const auto& c : cls) {
    p.row_labels.push_back(c.label);
    p.class_sizes.push_back(c.size);
  }
  for (const auto& m : mx.classes) {
    p.column_lengths.push_back(m.class_length);
    p.column_indices.push_back(m.index);
  }
  p.entries.assign(cls.size(), std::vector<IncidenceEntry>(mx.classes.size()));
  for (std::size_t j = 0; j < cls.size(); ++j)
    for (std::size_t i = 0; i < mx.classes.size(); ++i) {
      const std::uint64_t n = hist[i][j];
      const std::uint64_t incidences = n * mx.classes[i].class_length;
      if (incidences % cls[j].size) throw std::logic_error("incidence count is not divisible by the class size");
      p.entries[j][i] = {n, incidences / cls[j].size};
    }
  return p;
}

std::string profile_to_tsv(const IncidenceProfile& p) {
  std::string out = "class";
  for (std::size_t i = 0; i < p.columns(); ++i)
    out += "\tM" + std::to_string(i + 1) + "(" + std::to_string(p.column_lengths[i]) + ")";
  out += "\n";
  for (std::size_t j = 0; j < p.rows(); ++j) {
    out += p.row_labels[j];
    for (const auto& e : p.entries[j]) {
      out += '\t';
      if (e.n == 0) {
        out += '0';
      } else {
        out += std::to_string(e.n);
        if (e.k == 1u) out += ",P";
        else if (e.k) out += "_" + std::to_string(*e.k);
      }
    }
    out += "\n";
  }
  return out;
}

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

bool to_u64(std::string_view s, std::uint64_t& v) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

IncidenceProfile profile_from_tsv(std::string_view text) {
  IncidenceProfile p;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  bool header = false;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++lineno;
    if (line.empty()) throw ParseError("empty line", lineno);
    auto cells = split_tabs(line);
    if (!header) {
      if (cells[0] != "class") throw ParseError("header must start with 'class'", lineno);
      for (std::size_t i = 1; i < cells.size(); ++i) {
        std::string_view c = cells[i];
        const std::string prefix = "M" + std::to_string(i) + "(";
        std::uint64_t len = 0;
        if (c.substr(0, prefix.size()) != prefix || c.back() != ')' ||
            !to_u64(c.substr(prefix.size(), c.size() - prefix.size() - 1), len) || len == 0)
          throw ParseError("bad column header '" + std::string(c) + "'", lineno);
        p.column_lengths.push_back(len);
        p.column_indices.push_back(0);
      }
      header = true;
      continue;
    }
    if (cells.size() != p.columns() + 1)
      throw ParseError("expected " + std::to_string(p.columns() + 1) + " cells, found " + std::to_string(cells.size()),
                       lineno);
    if (cells[0].substr(0, 3) != "cl_") throw ParseError("row label must start with 'cl_'", lineno);
    p.row_labels.emplace_back(cells[0]);
    std::vector<IncidenceEntry> row;
    std::uint64_t size = 0;
    for (std::size_t i = 1; i < cells.size(); ++i) {
      std::string_view c = cells[i];
      IncidenceEntry e;
      bool ok;
      if (c.size() > 2 && c.substr(c.size() - 2) == ",P") {
        ok = to_u64(c.substr(0, c.size() - 2), e.n) && e.n > 0;
        e.k = 1;
      } else if (auto us = c.find('_'); us != std::string_view::npos) {
        std::uint64_t k = 0;
        ok = to_u64(c.substr(0, us), e.n) && to_u64(c.substr(us + 1), k) && e.n > 0 && k >= 2;
        e.k = k;
      } else {
        ok = to_u64(c, e.n);
        if (e.n == 0) e.k = 0;
      }
      if (!ok) throw ParseError("bad cell '" + std::string(c) + "'", lineno);
      if (e.k && *e.k > 0) {
        const std::uint64_t incidences = e.n * p.column_lengths[i - 1];
        if (incidences % *e.k) throw ParseError("cell '" + std::string(c) + "' violates n*length = k*size", lineno);
        const std::uint64_t s = incidences / *e.k;
        if (size && s != size) throw ParseError("cells imply different class sizes", lineno);
        size = s;
      }
      row.push_back(e);
    }
    p.class_sizes.push_back(size);
    p.entries.push_back(std::move(row));
  }
  if (!header) throw ParseError("missing header", lineno + 1);
  return p;
}

IncidenceProfile read_profile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return profile_from_tsv(ss.str());
}

}  // namespace covnum
