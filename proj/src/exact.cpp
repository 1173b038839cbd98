#include "covnum/exact.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <chrono>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "covnum/error.hpp"
#include "covnum/greedy.hpp"

namespace covnum {

CoverInstance build_instance(const Group& g, const MaxClassSet& mx, std::vector<std::size_t> element_classes,
                             std::vector<std::size_t> subgroup_classes, int threads) {
  const auto& cls = g.classes().classes;
  std::sort(element_classes.begin(), element_classes.end());
  element_classes.erase(std::unique(element_classes.begin(), element_classes.end()), element_classes.end());
  std::sort(subgroup_classes.begin(), subgroup_classes.end());
  subgroup_classes.erase(std::unique(subgroup_classes.begin(), subgroup_classes.end()), subgroup_classes.end());
  for (auto c : element_classes)
    if (c >= cls.size()) throw std::invalid_argument("element class id " + std::to_string(c) + " out of range");
  for (auto s : subgroup_classes)
    if (s >= mx.classes.size()) throw std::invalid_argument("subgroup class id " + std::to_string(s) + " out of range");

  CoverInstance inst;
  inst.symmetry = g.order();
  std::vector<std::int64_t> index_of(g.order(), -1);
  std::vector<char> wanted(cls.size(), 0);
  for (auto c : element_classes) wanted[c] = 1;
  for (ElementId x = 1; x < g.order(); ++x) {
    int c = g.class_of(x);
    if (!wanted[static_cast<std::size_t>(c)]) continue;
    index_of[x] = static_cast<std::int64_t>(inst.universe.size());
    inst.universe.push_back(x);
    inst.element_class.push_back(c);
  }
  inst.universe_size = inst.universe.size();

  std::unordered_set<ElementSet, ElementSetHash> seen;
  ElementSet covered(inst.universe_size);
  for (auto s : subgroup_classes) {
    ConjugateList orbit = conjugates(g, mx.classes[s].representative.elements, threads);
    for (const auto& members : orbit.sets) {
      ElementSet col(inst.universe_size);
      members.for_each([&](std::size_t x) {
        if (index_of[x] >= 0) col.set(static_cast<std::size_t>(index_of[x]));
      });
      if (col.none() || !seen.insert(col).second) continue;
      covered |= col;
      inst.columns.push_back(std::move(col));
      inst.column_class.push_back(static_cast<int>(s));
    }
  }
  for (std::size_t u = 0; u < inst.universe_size; ++u)
    if (!covered.test(u))
      throw Infeasible("element " + g.element(inst.universe[u]).to_cycles() + " (universe index " +
                           std::to_string(u) + ") lies in no candidate subgroup",
                       u);
  return inst;
}

std::vector<std::size_t> columns_of_classes(const CoverInstance& instance, const std::vector<std::size_t>& classes) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < instance.columns.size(); ++c)
    if (std::find(classes.begin(), classes.end(), static_cast<std::size_t>(instance.column_class[c])) != classes.end())
      out.push_back(c);
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::uint64_t kInfinity = std::numeric_limits<std::uint64_t>::max();

std::size_t count_andnot(const ElementSet& a, const ElementSet& mask) {
  const auto& wa = a.words();
  const auto& wm = mask.words();
  std::size_t c = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) c += static_cast<std::size_t>(std::popcount(wa[i] & ~wm[i]));
  return c;
}

// |a & ~mask & b|
std::size_t count_andnot_and(const ElementSet& a, const ElementSet& mask, const ElementSet& b) {
  const auto& wa = a.words();
  const auto& wm = mask.words();
  const auto& wb = b.words();
  std::size_t c = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) c += static_cast<std::size_t>(std::popcount(wa[i] & ~wm[i] & wb[i]));
  return c;
}

ElementSet andnot(const ElementSet& a, const ElementSet& mask) {
  ElementSet out = a;
  out.subtract(mask);
  return out;
}

// The instance after dominance reductions, in row/column incidence form.
struct Reduced {
  std::size_t rows = 0, cols = 0;
  std::vector<ElementSet> row_cols;  // cols bits
  std::vector<ElementSet> col_rows;  // rows bits
  std::vector<std::size_t> col_original;
  std::vector<int> col_class;
  std::vector<ElementSet> group_rows;  // rows of each element class present
  std::vector<std::size_t> row_order;  // by increasing column count
};

Reduced reduce(const CoverInstance& inst) {
  Reduced r;
  const std::size_t n = inst.columns.size();
  // Column dominance on the full universe keeps the column set invariant
  // under the instance symmetry.
  std::vector<char> keep(n, 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (!inst.columns[a].is_subset_of(inst.columns[b])) continue;
      if (!(inst.columns[a] == inst.columns[b]) || b < a) keep[a] = 0;
    }
  for (std::size_t c = 0; c < n; ++c)
    if (keep[c]) {
      r.col_original.push_back(c);
      r.col_class.push_back(inst.column_class.empty() ? -1 : inst.column_class[c]);
    }
  r.cols = r.col_original.size();

  // Row dominance: a row whose column set contains another row's is implied.
  std::vector<ElementSet> raw(inst.universe_size, ElementSet(r.cols));
  for (std::size_t k = 0; k < r.cols; ++k)
    inst.columns[r.col_original[k]].for_each([&](std::size_t u) { raw[u].set(k); });
  std::vector<std::size_t> distinct;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (std::size_t u = 0; u < inst.universe_size; ++u)
      if (seen.insert(raw[u]).second) distinct.push_back(u);
  }
  std::stable_sort(distinct.begin(), distinct.end(),
                   [&](std::size_t a, std::size_t b) { return raw[a].count() < raw[b].count(); });
  std::vector<std::size_t> kept;
  for (std::size_t u : distinct) {
    bool dominated = false;
    for (std::size_t v : kept)
      if (raw[v].is_subset_of(raw[u])) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(u);
  }
  std::sort(kept.begin(), kept.end());
  r.rows = kept.size();
  r.col_rows.assign(r.cols, ElementSet(r.rows));
  std::vector<int> group_id;
  std::vector<int> group_of_row(r.rows, 0);
  for (std::size_t i = 0; i < r.rows; ++i) {
    r.row_cols.push_back(raw[kept[i]]);
    raw[kept[i]].for_each([&](std::size_t k) { r.col_rows[k].set(i); });
    int cls = inst.element_class.empty() ? -1 : inst.element_class[kept[i]];
    auto it = std::find(group_id.begin(), group_id.end(), cls);
    if (it == group_id.end()) {
      group_id.push_back(cls);
      it = group_id.end() - 1;
    }
    group_of_row[i] = static_cast<int>(it - group_id.begin());
  }
  r.group_rows.assign(group_id.size(), ElementSet(r.rows));
  for (std::size_t i = 0; i < r.rows; ++i) r.group_rows[static_cast<std::size_t>(group_of_row[i])].set(i);
  r.row_order.resize(r.rows);
  std::iota(r.row_order.begin(), r.row_order.end(), std::size_t{0});
  std::stable_sort(r.row_order.begin(), r.row_order.end(),
                   [&](std::size_t a, std::size_t b) { return r.row_cols[a].count() < r.row_cols[b].count(); });
  return r;
}

struct Node {
  ElementSet covered;    // rows
  ElementSet forbidden;  // cols
  std::vector<std::size_t> chosen;
};

// Lower bound on the columns still needed below a node; kInfinity when some
// uncovered row has no allowed column.
std::uint64_t lower_bound(const Reduced& r, const Node& s) {
  const ElementSet allowed_cols = andnot([&] {
    ElementSet all(r.cols);
    all.set_all();
    return all;
  }(), s.forbidden);
  std::size_t uncovered = 0;

  // Rows whose allowed columns are pairwise disjoint each need their own column.
  std::uint64_t independent = 0;
  ElementSet used(r.cols);
  for (std::size_t row : r.row_order) {
    if (s.covered.test(row)) continue;
    ++uncovered;
    ElementSet allowed = andnot(r.row_cols[row], s.forbidden);
    if (allowed.none()) return kInfinity;
    if (!allowed.intersects(used)) {
      ++independent;
      used |= allowed;
    }
  }
  if (uncovered == 0) return 0;

  std::size_t max_cover = 0;
  allowed_cols.for_each([&](std::size_t c) { max_cover = std::max(max_cover, count_andnot(r.col_rows[c], s.covered)); });
  const std::uint64_t counting = (uncovered + max_cover - 1) / max_cover;

  // Per element class counting bounds, summed over classes whose allowed
  // columns are pairwise disjoint.
  struct Part {
    std::uint64_t weight;
    ElementSet support;
  };
  std::vector<Part> parts;
  for (const auto& rows : r.group_rows) {
    const std::size_t u = count_andnot(rows, s.covered);
    if (u == 0) continue;
    std::size_t best = 0;
    ElementSet support(r.cols);
    allowed_cols.for_each([&](std::size_t c) {
      const std::size_t k = count_andnot_and(rows, s.covered, r.col_rows[c]);
      if (k) {
        support.set(c);
        best = std::max(best, k);
      }
    });
    parts.push_back({(u + best - 1) / best, std::move(support)});
  }
  std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.weight > b.weight; });
  std::uint64_t by_class = 0;
  ElementSet taken(r.cols);
  for (const auto& p : parts)
    if (!p.support.intersects(taken)) {
      by_class += p.weight;
      taken |= p.support;
    }
  return std::max({independent, counting, by_class});
}

struct Shared {
  std::atomic<std::uint64_t> best_size{kInfinity};
  std::mutex mutex;
  std::vector<std::size_t> best_cols;  // reduced ids
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::uint64_t max_nodes = 0;
  std::optional<Clock::time_point> deadline;

  void offer(const std::vector<std::size_t>& cols) {
    std::lock_guard<std::mutex> lock(mutex);
    if (cols.size() < best_size.load()) {
      best_cols = cols;
      best_size.store(cols.size());
    }
  }
};

class Searcher {
 public:
  Searcher(const Reduced& r, Shared& shared) : r_(r), shared_(shared) {}

  // False when the budget ran out inside this subtree.
  bool run(Node s) {
    if (shared_.stop.load(std::memory_order_relaxed)) return false;
    const std::uint64_t n = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > shared_.max_nodes) {
      shared_.stop = true;
      return false;
    }
    if ((n & 255u) == 0 && shared_.deadline && Clock::now() > *shared_.deadline) {
      shared_.stop = true;
      return false;
    }

    std::size_t branch_row = 0, branch_count = 0;
    while (true) {
      bool complete = true, unit = false;
      branch_count = std::numeric_limits<std::size_t>::max();
      for (std::size_t row : r_.row_order) {
        if (s.covered.test(row)) continue;
        complete = false;
        const std::size_t k = count_andnot(r_.row_cols[row], s.forbidden);
        if (k == 0) return true;
        if (k < branch_count) {
          branch_count = k;
          branch_row = row;
          if (k == 1) {
            unit = true;
            break;
          }
        }
      }
      if (complete) {
        if (s.chosen.size() < shared_.best_size.load()) shared_.offer(s.chosen);
        return true;
      }
      if (s.chosen.size() + 1 >= shared_.best_size.load()) return true;
      if (!unit) break;
      // A row with one allowed column forces it.
      const std::size_t c = andnot(r_.row_cols[branch_row], s.forbidden).first();
      s.chosen.push_back(c);
      s.covered |= r_.col_rows[c];
    }

    const std::uint64_t lb = lower_bound(r_, s);
    if (lb == kInfinity || s.chosen.size() + lb >= shared_.best_size.load()) return true;

    std::vector<std::pair<std::size_t, std::size_t>> cands;  // (coverage, column)
    andnot(r_.row_cols[branch_row], s.forbidden).for_each([&](std::size_t c) {
      cands.emplace_back(count_andnot(r_.col_rows[c], s.covered), c);
    });
    std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [coverage, c] : cands) {
      Node child{s.covered, s.forbidden, s.chosen};
      child.chosen.push_back(c);
      child.covered |= r_.col_rows[c];
      if (!run(std::move(child))) return false;
      s.forbidden.set(c);  // later siblings exclude it
    }
    return true;
  }

 private:
  const Reduced& r_;
  Shared& shared_;
};

std::vector<std::size_t> greedy_cover(const Reduced& r) {
  std::vector<std::size_t> out;
  ElementSet covered(r.rows);
  while (covered.count() < r.rows) {
    std::size_t best = 0, best_c = 0;
    for (std::size_t c = 0; c < r.cols; ++c) {
      std::size_t k = count_andnot(r.col_rows[c], covered);
      if (k > best) {
        best = k;
        best_c = c;
      }
    }
    out.push_back(best_c);
    covered |= r.col_rows[best_c];
  }
  return out;
}

bool covers(const CoverInstance& inst, const std::vector<std::size_t>& cols) {
  ElementSet u(inst.universe_size);
  for (auto c : cols) {
    if (c >= inst.columns.size()) return false;
    u |= inst.columns[c];
  }
  return u.count() == inst.universe_size;
}

}  // namespace

CoverResult solve(const CoverInstance& inst, const SolveBudget& budget) {
  CoverResult result;
  if (inst.universe_size == 0) {
    result.optimal = true;
    return result;
  }
  const Reduced r = reduce(inst);

  Shared shared;
  shared.max_nodes = budget.max_nodes;
  if (budget.time_limit_seconds > 0)
    shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(budget.time_limit_seconds));

  std::vector<std::size_t> witness;  // original ids
  {
    auto g = greedy_cover(r);
    for (auto c : g) witness.push_back(r.col_original[c]);
  }
  if (budget.incumbent) {
    if (!covers(inst, *budget.incumbent)) throw std::invalid_argument("supplied incumbent does not cover the universe");
    std::vector<std::size_t> inc = *budget.incumbent;
    std::sort(inc.begin(), inc.end());
    inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
    if (inc.size() < witness.size()) witness = inc;
  }
  shared.best_size = witness.size();

  Node root{ElementSet(r.rows), ElementSet(r.cols), {}};
  const std::uint64_t root_lb = lower_bound(r, root);

  // Root tasks: with a transitive symmetry on each column class, any cover
  // whose least class is i can be moved to contain that class's least column.
  std::vector<Node> tasks;
  const bool symmetric = budget.root_symmetry && inst.symmetry > 1 &&
                         std::none_of(r.col_class.begin(), r.col_class.end(), [](int c) { return c < 0; });
  if (symmetric) {
    std::vector<int> classes(r.col_class);
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    for (int cls : classes) {
      Node t{ElementSet(r.rows), ElementSet(r.cols), {}};
      std::size_t first = r.cols;
      for (std::size_t c = 0; c < r.cols; ++c) {
        if (r.col_class[c] < cls) t.forbidden.set(c);
        if (r.col_class[c] == cls && first == r.cols) first = c;
      }
      t.chosen.push_back(first);
      t.covered |= r.col_rows[first];
      tasks.push_back(std::move(t));
    }
  } else {
    tasks.push_back(root);
  }

  std::vector<std::uint64_t> task_lb(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::uint64_t lb = lower_bound(r, tasks[i]);
    task_lb[i] = lb == kInfinity ? kInfinity : tasks[i].chosen.size() + lb;
  }
  std::vector<char> finished(tasks.size(), 0);
  const std::int64_t ntasks = static_cast<std::int64_t>(tasks.size());
  auto run_task = [&](std::int64_t i) {
    const auto k = static_cast<std::size_t>(i);
    if (task_lb[k] >= shared.best_size.load()) {
      finished[k] = 1;
      return;
    }
    Searcher s(r, shared);
    finished[k] = s.run(tasks[k]) ? 1 : 0;
  };
  if (budget.threads == 1) {
    for (std::int64_t i = 0; i < ntasks; ++i) run_task(i);
  } else {
    const int threads = budget.threads > 0 ? budget.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t i = 0; i < ntasks; ++i) run_task(i);
  }

  if (!shared.best_cols.empty()) {
    witness.clear();
    for (auto c : shared.best_cols) witness.push_back(r.col_original[c]);
  }
  std::sort(witness.begin(), witness.end());
  if (!covers(inst, witness)) throw std::logic_error("solver witness does not cover the universe");

  result.upper = witness.size();
  result.chosen = witness;
  result.nodes_explored = shared.nodes.load();
  std::uint64_t open_lb = result.upper;
  for (std::size_t i = 0; i < tasks.size(); ++i)
    if (!finished[i]) {
      result.budget_exhausted = true;
      open_lb = std::min(open_lb, task_lb[i]);
    }
  result.lower = std::min(result.upper, std::max(root_lb == kInfinity ? 0 : root_lb, open_lb));
  result.optimal = result.lower == result.upper;
  return result;
}

CoverResult sigma_exact(const Group& g, const MaxClassSet& mx, const SolveBudget& budget) {
  if (g.is_cyclic()) throw CyclicGroup("cyclic groups have no finite cover by proper subgroups");
  std::vector<std::size_t> elts(g.classes().classes.size()), subs(mx.classes.size());
  std::iota(elts.begin(), elts.end(), std::size_t{0});
  std::iota(subs.begin(), subs.end(), std::size_t{0});
  CoverInstance inst = build_instance(g, mx, elts, subs, budget.threads);
  SolveBudget b = budget;
  if (!b.incumbent) {
    GreedyTrace t = covering_number_bounds(g, mx, UpperMode::corrected);
    std::vector<std::size_t> classes;
    for (const auto& it : t.iterations) classes.push_back(it.subgroup_class);
    b.incumbent = columns_of_classes(inst, classes);
  }
  return solve(inst, b);
}

CoverResult sigma_exact(const Group& g, const SolveBudget& budget, const LatticeBudget& lattice) {
  if (g.is_cyclic()) throw CyclicGroup("cyclic groups have no finite cover by proper subgroups");
  return sigma_exact(g, maximal_classes(g, lattice), budget);
}

std::string export_instance(const CoverInstance& inst) {
  std::string out = "universe " + std::to_string(inst.universe_size) + "\n";
  out += "columns " + std::to_string(inst.columns.size()) + "\n";
  for (const auto& col : inst.columns) {
    bool first = true;
    col.for_each([&](std::size_t u) {
      if (!first) out += ' ';
      out += std::to_string(u);
      first = false;
    });
    out += "\n";
  }
  if (!inst.column_class.empty() &&
      std::none_of(inst.column_class.begin(), inst.column_class.end(), [](int c) { return c < 0; })) {
    out += "classes";
    for (int c : inst.column_class) out += " " + std::to_string(c);
    out += "\n";
  }
  if (inst.symmetry > 1) out += "symmetry " + std::to_string(inst.symmetry) + "\n";
  return out;
}

namespace {

std::vector<std::uint64_t> parse_numbers(std::string_view s, std::size_t lineno) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r') {
      ++pos;
      continue;
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc()) throw ParseError("expected a number", lineno);
    pos = static_cast<std::size_t>(ptr - s.data());
    if (pos < s.size() && s[pos] != ' ' && s[pos] != '\t' && s[pos] != '\r')
      throw ParseError("expected a number", lineno);
    out.push_back(v);
  }
  return out;
}

std::uint64_t keyword(std::string_view line, std::string_view key, std::size_t lineno) {
  if (line.substr(0, key.size() + 1) != std::string(key) + " ")
    throw ParseError("expected '" + std::string(key) + " <n>'", lineno);
  auto v = parse_numbers(line.substr(key.size() + 1), lineno);
  if (v.size() != 1) throw ParseError("expected '" + std::string(key) + " <n>'", lineno);
  return v[0];
}

}  // namespace

CoverInstance import_instance(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    lines.push_back(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
  }
  if (lines.size() < 2) throw ParseError("expected 'universe' and 'columns' lines", lines.size() + 1);
  CoverInstance inst;
  inst.universe_size = keyword(lines[0], "universe", 1);
  const std::uint64_t ncols = keyword(lines[1], "columns", 2);
  if (lines.size() < 2 + ncols) throw ParseError("fewer column lines than declared", lines.size() + 1);
  for (std::size_t c = 0; c < ncols; ++c) {
    const std::size_t lineno = c + 3;
    ElementSet col(inst.universe_size);
    std::uint64_t prev = 0;
    bool first = true;
    for (auto v : parse_numbers(lines[2 + c], lineno)) {
      if (v >= inst.universe_size) throw ParseError("index " + std::to_string(v) + " outside the universe", lineno);
      if (!first && v <= prev) throw ParseError("column indices must be strictly increasing", lineno);
      col.set(v);
      prev = v;
      first = false;
    }
    inst.columns.push_back(std::move(col));
  }
  for (std::size_t i = 2 + ncols; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    std::string_view line = lines[i];
    if (line.empty()) continue;
    if (line.substr(0, 8) == "classes ") {
      auto v = parse_numbers(line.substr(8), lineno);
      if (v.size() != ncols) throw ParseError("classes line needs one id per column", lineno);
      for (auto c : v) inst.column_class.push_back(static_cast<int>(c));
    } else if (line.substr(0, 9) == "symmetry ") {
      inst.symmetry = keyword(line, "symmetry", lineno);
    } else {
      throw ParseError("unrecognised line", lineno);
    }
  }
  if (inst.column_class.empty()) inst.column_class.assign(ncols, -1);
  inst.element_class.assign(inst.universe_size, -1);
  ElementSet covered(inst.universe_size);
  for (const auto& c : inst.columns) covered |= c;
  for (std::size_t u = 0; u < inst.universe_size; ++u)
    if (!covered.test(u)) throw Infeasible("universe index " + std::to_string(u) + " lies in no column", u);
  return inst;
}

std::string write_lp(const CoverInstance& inst) {
  std::ostringstream out;
  out << "\\ set cover: " << inst.universe_size << " elements, " << inst.columns.size() << " columns\n";
  out << "Minimize\n obj:";
  for (std::size_t c = 0; c < inst.columns.size(); ++c) {
    if (c && c % 16 == 0) out << "\n     ";
    out << (c ? " + " : " ") << "x" << c;
  }
  out << "\nSubject To\n";
  std::vector<std::vector<std::size_t>> rows(inst.universe_size);
  for (std::size_t c = 0; c < inst.columns.size(); ++c) inst.columns[c].for_each([&](std::size_t u) { rows[u].push_back(c); });
  for (std::size_t u = 0; u < inst.universe_size; ++u) {
    out << " e" << u << ":";
    for (std::size_t k = 0; k < rows[u].size(); ++k) {
      if (k && k % 16 == 0) out << "\n     ";
      out << (k ? " + " : " ") << "x" << rows[u][k];
    }
    out << " >= 1\n";
  }
  out << "Binary\n";
  for (std::size_t c = 0; c < inst.columns.size(); ++c) out << " x" << c << (c % 16 == 15 ? "\n" : "");
  if (inst.columns.size() % 16) out << "\n";
  out << "End\n";
  return out.str();
}

}  // namespace covnum
