#include "covnum/greedy.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "covnum/error.hpp"

namespace covnum {

std::string to_string(UpperMode m) { return m == UpperMode::faithful ? "faithful" : "corrected"; }

UpperMode parse_upper_mode(std::string_view s) {
  if (s == "faithful") return UpperMode::faithful;
  if (s == "corrected") return UpperMode::corrected;
  throw std::invalid_argument("mode must be 'faithful' or 'corrected'");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::minimal: return "minimal";
    case Verdict::unique_minimal: return "unique_minimal";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

void normalize(std::vector<std::size_t>& ids, std::size_t limit, const char* what) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (!ids.empty() && ids.back() >= limit)
    throw std::invalid_argument(std::string(what) + " id " + std::to_string(ids.back()) + " out of range");
}

}  // namespace

CertificateReport verify_minimal_cover(const IncidenceProfile& profile, std::vector<std::size_t> pi,
                                       std::vector<std::size_t> cover) {
  normalize(pi, profile.rows(), "element class");
  normalize(cover, profile.columns(), "subgroup class");
  CertificateReport r;
  r.pi_classes = pi;
  r.cover_classes = cover;
  r.partition_ok = true;

  // pi_of[i]: the classes of pi that cover class i meets
  std::map<std::size_t, std::vector<std::size_t>> pi_of;
  for (std::size_t j : pi) {
    std::size_t touching = 0;
    for (std::size_t i : cover) {
      const IncidenceEntry& e = profile.entries[j][i];
      if (e.n == 0) continue;
      ++touching;
      pi_of[i].push_back(j);
      if (e.k != 1u) r.partition_ok = false;
    }
    if (touching == 0) throw NotACover("class " + profile.row_labels[j] + " meets no subgroup class of the cover");
    if (touching > 1) r.partition_ok = false;
  }
  for (std::size_t i : cover)
    if (!pi_of.count(i))
      throw std::invalid_argument("cover class M" + std::to_string(i + 1) + " contains no element of the classes");

  bool all_below = true, all_at_most = true;
  for (std::size_t m = 0; m < profile.columns(); ++m) {
    if (std::binary_search(cover.begin(), cover.end(), m)) continue;
    Rational c = 0;
    for (const auto& [i, js] : pi_of) {
      std::int64_t num = 0, den = 0;
      for (std::size_t j : js) {
        num += static_cast<std::int64_t>(profile.entries[j][m].n);
        den += static_cast<std::int64_t>(profile.entries[j][i].n);
      }
      c += Rational(num, den);
    }
    r.c_values[m] = c;
    if (c >= 1) all_below = false;
    if (c > 1) all_at_most = false;
  }
  if (r.partition_ok && all_below) r.verdict = Verdict::unique_minimal;
  else if (r.partition_ok && all_at_most) r.verdict = Verdict::minimal;
  else r.verdict = Verdict::inconclusive;
  return r;
}

GreedyTrace covering_number_bounds(const IncidenceProfile& profile, UpperMode mode) {
  if (mode == UpperMode::faithful)
    for (auto idx : profile.column_indices)
      if (idx == 0) throw std::invalid_argument("faithful mode needs subgroup indices");
  for (auto s : profile.class_sizes)
    if (s == 0) throw std::invalid_argument("greedy bounds need every class size");

  GreedyTrace t;
  t.mode = mode;
  bool certified = true;  // no iteration has disproved it yet
  std::vector<std::size_t> left(profile.rows());
  for (std::size_t j = 0; j < left.size(); ++j) left[j] = j;

  while (!left.empty()) {
    std::uint64_t best = 0;
    std::size_t x0 = left.front();
    for (std::size_t j : left) {
      std::uint64_t n_max = 0;
      for (const auto& e : profile.entries[j]) n_max = std::max(n_max, e.n);
      if (n_max == 0) throw Unbounded("class " + profile.row_labels[j] + " lies in no maximal subgroup");
      std::uint64_t need = ceil_div(profile.class_sizes[j], n_max);
      if (need > best) {
        best = need;
        x0 = j;
      }
    }
    t.minlist.push_back(best);

    std::size_t m0 = 0;
    for (std::size_t i = 1; i < profile.columns(); ++i) {
      const auto ni = profile.entries[x0][i].n, nb = profile.entries[x0][m0].n;
      if (ni > nb || (ni == nb && profile.column_lengths[i] < profile.column_lengths[m0])) m0 = i;
    }
    const std::uint64_t added =
        mode == UpperMode::faithful ? profile.column_indices[m0] : profile.column_lengths[m0];
    if (best != added) certified = false;
    t.upper += added;
    t.iterations.push_back({x0, m0, best, added});
    std::erase_if(left, [&](std::size_t j) { return profile.entries[j][m0].n > 0; });
  }
  t.lower = t.minlist.empty() ? 0 : t.minlist.front();

  if (certified && !t.iterations.empty()) {
    std::vector<std::size_t> pi, cover;
    for (const auto& it : t.iterations) {
      pi.push_back(it.element_class);
      cover.push_back(it.subgroup_class);
    }
    t.certificate = verify_minimal_cover(profile, pi, cover);
    certified = t.certificate->partition_ok && t.certificate->verdict != Verdict::inconclusive;
  }
  t.certified = certified && !t.iterations.empty();
  return t;
}

GreedyTrace covering_number_bounds(const Group& g, const MaxClassSet& mx, UpperMode mode) {
  return covering_number_bounds(incidence_profile(g, mx), mode);
}

CountingBound counting_lower_bound(const IncidenceProfile& profile,
                                   const std::map<std::size_t, std::uint64_t>& remaining) {
  CountingBound out;
  for (const auto& [j, c] : remaining) {
    if (j >= profile.rows()) throw std::invalid_argument("element class id out of range");
    if (profile.class_sizes[j] && c > profile.class_sizes[j])
      throw std::invalid_argument("remaining count exceeds the size of " + profile.row_labels[j]);
    if (c == 0) continue;
    ClassBound b;
    b.element_class = j;
    b.remaining = c;
    for (std::size_t i = 0; i < profile.columns(); ++i) {
      const auto n = profile.entries[j][i].n;
      if (n == 0) continue;
      b.support.push_back(i);
      b.n_max = std::max(b.n_max, n);
    }
    if (b.n_max == 0) throw Unbounded("class " + profile.row_labels[j] + " lies in no maximal subgroup");
    b.bound = ceil_div(c, b.n_max);
    out.per_class.push_back(std::move(b));
  }

  // Maximum-weight family with pairwise disjoint supports, by exhaustive
  // branch and bound over classes in decreasing weight.
  std::vector<std::size_t> order(out.per_class.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return out.per_class[a].bound > out.per_class[b].bound; });
  std::vector<std::uint64_t> suffix(order.size() + 1, 0);
  for (std::size_t i = order.size(); i-- > 0;) suffix[i] = suffix[i + 1] + out.per_class[order[i]].bound;

  auto disjoint = [&](const std::vector<std::size_t>& a, const std::set<std::size_t>& used) {
    return std::none_of(a.begin(), a.end(), [&](std::size_t i) { return used.count(i); });
  };
  std::uint64_t best = 0;
  std::vector<std::size_t> best_pick, pick;
  std::set<std::size_t> used;
  std::function<void(std::size_t, std::uint64_t)> search = [&](std::size_t pos, std::uint64_t weight) {
    if (weight > best) {
      best = weight;
      best_pick = pick;
    }
    if (pos == order.size() || weight + suffix[pos] <= best) return;
    const ClassBound& b = out.per_class[order[pos]];
    if (disjoint(b.support, used)) {
      for (auto i : b.support) used.insert(i);
      pick.push_back(order[pos]);
      search(pos + 1, weight + b.bound);
      pick.pop_back();
      for (auto i : b.support) used.erase(i);
    }
    search(pos + 1, weight);
  };
  search(0, 0);

  std::sort(best_pick.begin(), best_pick.end());
  out.total = best;
  for (auto k : best_pick) out.chosen.push_back(out.per_class[k]);
  return out;
}

CountingBound counting_lower_bound(const IncidenceProfile& profile) {
  std::map<std::size_t, std::uint64_t> remaining;
  for (std::size_t j = 0; j < profile.rows(); ++j) {
    if (profile.class_sizes[j] == 0)
      throw std::invalid_argument("size of " + profile.row_labels[j] + " is not derivable from the profile");
    remaining[j] = profile.class_sizes[j];
  }
  return counting_lower_bound(profile, remaining);
}

}  // namespace covnum
