#include "covnum/group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "covnum/error.hpp"
#include "covnum/kernels.hpp"

namespace covnum {

namespace {

constexpr ElementId kEmpty = ~ElementId{0};

std::size_t hash_images(std::span<const Point> images) {
  std::size_t h = 1469598103934665603ull;
  for (Point x : images) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h ^ (h >> 29);
}

}  // namespace

ElementStore::ElementStore(std::size_t degree, std::vector<Point> flat_images)
    : degree_(degree), size_(degree ? flat_images.size() / degree : 0), flat_(std::move(flat_images)) {
  std::size_t cap = 16;
  while (cap < 2 * size_) cap <<= 1;
  slots_.assign(cap, kEmpty);
  for (ElementId id = 0; id < size_; ++id) {
    std::size_t s = slot_for(images(id));
    if (slots_[s] != kEmpty) throw std::logic_error("duplicate element in store");
    slots_[s] = id;
  }
}

std::size_t ElementStore::slot_for(std::span<const Point> imgs) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash_images(imgs) & mask;
  while (slots_[s] != kEmpty) {
    auto other = images(slots_[s]);
    if (std::equal(other.begin(), other.end(), imgs.begin())) return s;
    s = (s + 1) & mask;
  }
  return s;
}

std::optional<ElementId> ElementStore::find(std::span<const Point> imgs) const {
  if (imgs.size() != degree_ || slots_.empty()) return std::nullopt;
  ElementId id = slots_[slot_for(imgs)];
  if (id == kEmpty) return std::nullopt;
  return id;
}

ElementId ElementStore::multiply_slow(ElementId a, ElementId b) const {
  thread_local std::vector<Point> buffer;
  buffer.resize(degree_);
  auto ia = images(a);
  auto ib = images(b);
  for (std::size_t i = 0; i < degree_; ++i) buffer[i] = ib[ia[i]];
  auto id = find(buffer);
  if (!id) throw std::logic_error("product left the enumerated group");
  return *id;
}

Group::Group(PermGroup perm_group, EnumerationOptions options) : perm_(std::move(perm_group)) {
  if (perm_.order() > options.cap)
    throw CapExceeded("group of order " + std::to_string(perm_.order()) +
                          " exceeds enumeration cap " + std::to_string(options.cap),
                      perm_.order(), options.cap);
  const std::size_t n = perm_.degree();
  std::vector<Point> flat;
  flat.reserve(static_cast<std::size_t>(perm_.order()) * n);
  perm_.for_each_element([&](const Permutation& g) {
    auto im = g.images();
    flat.insert(flat.end(), im.begin(), im.end());
  });
  store_ = ElementStore(n, std::move(flat));

  const std::uint64_t table_cap = std::min<std::uint64_t>(options.table_cap, 65535);
  if (store_.size() <= table_cap) {
    table_ = options.threads == 1 ? kernels::multiplication_table_serial(store_)
                                  : kernels::multiplication_table_omp(store_, options.threads);
  }
  orders_ = options.threads == 1 ? kernels::element_orders_serial(store_)
                                 : kernels::element_orders_omp(store_, options.threads);

  inverse_.resize(store_.size());
  std::vector<Point> buf(n);
  for (ElementId id = 0; id < store_.size(); ++id) {
    auto im = store_.images(id);
    for (std::size_t i = 0; i < n; ++i) buf[im[i]] = static_cast<Point>(i);
    inverse_[id] = *store_.find(buf);
  }

  for (const auto& g : perm_.generators()) {
    ElementId id = id_of(g);
    if (id != identity_id() &&
        std::find(generator_ids_.begin(), generator_ids_.end(), id) == generator_ids_.end())
      generator_ids_.push_back(id);
  }
  compute_classes();
}

Permutation Group::element(ElementId id) const {
  auto im = store_.images(id);
  return Permutation(std::vector<Point>(im.begin(), im.end()));
}

std::optional<ElementId> Group::find(const Permutation& g) const {
  if (g.degree() != degree()) return std::nullopt;
  return store_.find(g.images());
}

ElementId Group::id_of(const Permutation& g) const {
  auto id = find(g);
  if (!id) throw std::out_of_range("permutation " + g.to_cycles() + " is not in the group");
  return *id;
}

void Group::compute_classes() {
  const std::size_t n = store_.size();
  class_of_.assign(n, -1);
  struct Raw {
    ElementId rep;
    std::uint64_t size;
    std::uint64_t order;
    std::vector<ElementId> members;
  };
  std::vector<Raw> raw;
  std::vector<char> seen(n, 0);
  seen[identity_id()] = 1;
  for (ElementId x = 1; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<ElementId> orbit{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (ElementId g : generator_ids_) {
        ElementId y = conj(orbit[i], g);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    raw.push_back({x, orbit.size(), orders_[x], std::move(orbit)});
  }
  std::stable_sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    if (a.order != b.order) return a.order > b.order;
    if (a.size != b.size) return a.size > b.size;
    return a.rep < b.rep;
  });
  std::map<std::uint64_t, int> per_order;
  for (const auto& r : raw) ++per_order[r.order];
  std::map<std::uint64_t, int> seen_order;
  classes_.classes.clear();
  classes_.total = 0;
  for (std::size_t c = 0; c < raw.size(); ++c) {
    ConjClass cc;
    cc.representative = raw[c].rep;
    cc.rep = element(raw[c].rep);
    cc.size = raw[c].size;
    cc.element_order = raw[c].order;
    cc.label = "cl_" + std::to_string(cc.element_order);
    int j = ++seen_order[cc.element_order];
    if (per_order[cc.element_order] > 1) cc.label += "," + std::to_string(j);
    for (ElementId m : raw[c].members) class_of_[m] = static_cast<int>(c);
    classes_.total += cc.size;
    classes_.classes.push_back(std::move(cc));
  }
}

ElementSet Group::generate(std::span<const ElementId> gens) const {
  ElementSet set(store_.size());
  std::vector<ElementId> list{identity_id()};
  set.set(identity_id());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (ElementId g : gens) {
      ElementId y = mul(list[i], g);
      if (!set.test(y)) {
        set.set(y);
        list.push_back(y);
      }
    }
  return set;
}

ElementSet Group::join(const ElementSet& start, std::span<const ElementId> start_gens,
                       ElementId extra) const {
  if (start.test(extra)) return start;
  ElementSet set = start;
  std::vector<ElementId> list;
  list.reserve(store_.size());
  start.for_each([&](std::size_t e) { list.push_back(static_cast<ElementId>(e)); });
  // The start elements are closed under start_gens already, so only the
  // products that introduce `extra` can leave the set at first.
  std::vector<ElementId> gens(start_gens.begin(), start_gens.end());
  gens.push_back(extra);
  const std::size_t start_size = list.size();
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (i < start_size && gi + 1 < gens.size()) continue;
      ElementId y = mul(list[i], gens[gi]);
      if (!set.test(y)) {
        set.set(y);
        list.push_back(y);
        if (2 * list.size() > store_.size()) return all();  // no proper subgroup is this large
      }
    }
  return set;
}

ElementSet Group::all() const {
  ElementSet s(store_.size());
  s.set_all();
  return s;
}

ElementSet Group::conjugate_set(const ElementSet& s, ElementId g) const {
  ElementSet out(store_.size());
  s.for_each([&](std::size_t x) { out.set(conj(static_cast<ElementId>(x), g)); });
  return out;
}

bool Group::is_cyclic() const {
  for (ElementId x = 0; x < store_.size(); ++x)
    if (orders_[x] == store_.size()) return true;
  return false;
}

}  // namespace covnum
