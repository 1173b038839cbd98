#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "covnum/error.hpp"
#include "covnum/galois.hpp"
#include "covnum/group.hpp"
#include "covnum/group_io.hpp"
#include "covnum/kernels.hpp"
#include "covnum/library.hpp"
#include "covnum/perm_group.hpp"
#include "covnum/permutation.hpp"
#include "covnum/structure.hpp"
#include "oracles.hpp"

using namespace covnum;

namespace {

Permutation cyc(const char* text, std::size_t degree) { return Permutation::from_cycles(text, degree); }

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("composition applies the left factor first") {
  const auto a = cyc("(1,2)", 3), b = cyc("(2,3)", 3);
  const auto ab = a * b;
  CHECK(ab[0] == 2);  // 1 -> 2 -> 3
  CHECK(ab[1] == 0);
  CHECK(ab[2] == 1);
  CHECK(ab.to_cycles() == "(1,3,2)");
  CHECK((b * a).to_cycles() == "(1,2,3)");
}

TEST_CASE("cycle notation round trip and validation") {
  CHECK(cyc("(3,1,2)(5,4)", 6).to_cycles() == "(1,2,3)(4,5)");
  CHECK(cyc("()", 4).is_identity());
  CHECK(Permutation(4).to_cycles() == "()");
  CHECK_THROWS(cyc("(1,2,1)", 3));
  CHECK_THROWS(cyc("(1,5)", 4));
  CHECK_THROWS(cyc("(1,2", 4));
  CHECK_THROWS(Permutation(std::vector<Point>{0, 0, 1}));
}

TEST_CASE("inverse, order, power and conjugation") {
  const auto x = cyc("(1,2,3)(4,5)", 6);
  CHECK(x.order() == 6);
  CHECK((x * x.inverse()).is_identity());
  CHECK(power(x, 6).is_identity());
  CHECK(power(x, -1) == x.inverse());
  CHECK(power(x, 2) == x * x);
  const auto g = cyc("(1,4)(2,6)", 6);
  CHECK(conjugate(x, g) == g.inverse() * x * g);
  CHECK(conjugate(x, g).order() == x.order());
  CHECK(x.first_moved() == 0);
  CHECK(Permutation(5).first_moved() == 5);
}

TEST_CASE("composing different degrees throws") {
  CHECK_THROWS_AS(cyc("(1,2)", 3) * cyc("(1,2)", 4), DegreeMismatch);
  CHECK_THROWS_AS(PermGroup({cyc("(1,2)", 3), cyc("(1,2)", 4)}), DegreeMismatch);
}

TEST_CASE("orders of symmetric and alternating groups") {
  for (std::size_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(library::symmetric(n).order() == factorial(n));
    if (n >= 2) CHECK(library::alternating(n).order() == factorial(n) / 2);
  }
}

TEST_CASE("library orders") {
  const std::map<std::string, std::uint64_t> expected = {
      {"V4", 4},        {"S3", 6},          {"C6", 6},        {"D8", 8},         {"Q8", 8},
      {"A4", 12},       {"D10", 10},        {"C3xC3", 9},     {"C2^3", 8},       {"C2xC4", 8},
      {"S3xS3", 36},    {"A5xC2", 120},     {"PSL27", 168},   {"PGL27", 336},    {"AGL13", 6},
      {"AGL14", 12},    {"AGL15", 20},      {"AGL17", 42},    {"AGL18", 56},     {"AGL32", 1344},
      {"M11", 7920},    {"PSL(2,8)", 504},  {"PGL(2,9)", 720}, {"AGL(2,3)", 432}, {"ASL(2,3)", 216},
      {"Frob(7,3)", 21}, {"PSL(2,11)", 660}, {"C5^2", 25},
  };
  for (const auto& [name, order] : expected) {
    CAPTURE(name);
    CHECK(library::by_name(name).order() == order);
  }
  for (const auto& name : library::names()) CHECK_NOTHROW(library::by_name(name));
  CHECK_THROWS_AS(library::by_name("Nonsense"), UnknownName);
}

TEST_CASE("membership agrees with brute-force closure") {
  const auto s4 = library::symmetric(4);
  for (const char* name : {"D8", "A4", "V4"}) {
    CAPTURE(name);
    const auto sub = library::by_name(name);
    if (sub.degree() != 4) continue;
    const auto elements = oracle::closure(sub.generators(), 4);
    CHECK(elements.size() == sub.order());
    s4.for_each_element([&](const Permutation& p) { CHECK(sub.contains(p) == (elements.count(p) == 1)); });
  }
  // A degree-6 group whose stabilizer chain has several levels.
  const PermGroup h({cyc("(1,2,3)(4,5,6)", 6), cyc("(1,4)(2,5)", 6)});
  const auto elements = oracle::closure(h.generators(), 6);
  CHECK(h.order() == elements.size());
  library::symmetric(6).for_each_element(
      [&](const Permutation& p) { CHECK(h.contains(p) == (elements.count(p) == 1)); });
}

TEST_CASE("enumerated group: ids, products, inverses, orders") {
  for (const char* name : {"S4", "PSL27", "D10", "Q8"}) {
    CAPTURE(name);
    const Group g(library::by_name(name));
    CHECK(g.element(0).is_identity());
    CHECK(g.has_table());
    std::set<Permutation> seen;
    for (ElementId a = 0; a < g.order(); ++a) {
      const Permutation pa = g.element(a);
      seen.insert(pa);
      CHECK(g.id_of(pa) == a);
      CHECK(g.element(g.inv(a)) == pa.inverse());
      CHECK(g.element_order(a) == pa.order());
    }
    CHECK(seen.size() == g.order());
    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
      const auto a = static_cast<ElementId>(rng() % g.order()), b = static_cast<ElementId>(rng() % g.order());
      CHECK(g.element(g.mul(a, b)) == g.element(a) * g.element(b));
      CHECK(g.element(g.conj(a, b)) == conjugate(g.element(a), g.element(b)));
    }
  }
}

TEST_CASE("groups above the table cap multiply without a table") {
  const Group g(library::mathieu11());
  CHECK(g.order() == 7920);
  CHECK_FALSE(g.has_table());
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto a = static_cast<ElementId>(rng() % g.order()), b = static_cast<ElementId>(rng() % g.order());
    CHECK(g.element(g.mul(a, b)) == g.element(a) * g.element(b));
  }
}

TEST_CASE("A5 element orders") {
  const Group g(library::alternating(5));
  std::map<std::uint64_t, std::uint64_t> hist;
  for (ElementId a = 0; a < g.order(); ++a) ++hist[g.element_order(a)];
  CHECK(hist == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
}

TEST_CASE("conjugacy classes agree with brute force") {
  for (const char* name : {"S4", "A5", "D8", "Q8", "AGL18", "S3xS3", "PSL27"}) {
    CAPTURE(name);
    const PermGroup pg = library::by_name(name);
    const Group g(pg);
    const auto brute = oracle::classes(oracle::closure(pg.generators(), pg.degree()));
    const auto& table = g.classes();
    CHECK(table.classes.size() == brute.size());
    CHECK(table.total == g.order() - 1);
    std::set<std::vector<Permutation>> ours;
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
      std::vector<Permutation> members;
      for (ElementId x = 1; x < g.order(); ++x)
        if (g.class_of(x) == static_cast<int>(c)) members.push_back(g.element(x));
      std::sort(members.begin(), members.end());
      CHECK(members.size() == table.classes[c].size);
      CHECK(g.class_of(table.classes[c].representative) == static_cast<int>(c));
      CHECK(table.classes[c].rep == g.element(table.classes[c].representative));
      ours.insert(members);
    }
    CHECK(ours == brute);
    CHECK(g.class_of(0) == -1);
    // sorted by element order descending, then size descending
    for (std::size_t c = 1; c < table.classes.size(); ++c) {
      const auto &p = table.classes[c - 1], &q = table.classes[c];
      CHECK((p.element_order > q.element_order || (p.element_order == q.element_order && p.size >= q.size)));
    }
    std::set<std::string> labels;
    for (const auto& c : table.classes) labels.insert(c.label);
    CHECK(labels.size() == table.classes.size());
  }
}

TEST_CASE("class labels") {
  const Group g(library::alternating(5));
  std::vector<std::string> labels;
  for (const auto& c : g.classes().classes) labels.push_back(c.label);
  CHECK(labels == std::vector<std::string>{"cl_5,1", "cl_5,2", "cl_3", "cl_2"});
}

TEST_CASE("enumeration cap") {
  EnumerationOptions opts;
  opts.cap = 1000;
  try {
    Group g(library::symmetric(8), opts);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.needed() == 40320);
    CHECK(e.cap() == 1000);
  }
}

TEST_CASE("serial and OpenMP kernels agree") {
  for (const char* name : {"S5", "AGL32", "PSL27"}) {
    CAPTURE(name);
    const Group g(library::by_name(name));
    const auto& store = g.store();
    CHECK(kernels::multiplication_table_serial(store) == kernels::multiplication_table_omp(store, 3));
    CHECK(kernels::element_orders_serial(store) == kernels::element_orders_omp(store, 3));
    std::vector<ElementSet> sets;
    std::mt19937_64 rng(5);
    for (int i = 0; i < 6; ++i) {
      ElementSet s(g.order());
      for (int k = 0; k < 40; ++k) s.set(rng() % g.order());
      sets.push_back(s);
    }
    const auto nc = g.classes().classes.size();
    CHECK(kernels::class_histograms_serial(sets, g.class_map(), nc) ==
          kernels::class_histograms_omp(sets, g.class_map(), nc, 3));
    const ElementSet h = g.generate(std::vector<ElementId>{g.generator_ids().front()});
    const auto a = kernels::subgroup_class_serial(g, h), b = kernels::subgroup_class_omp(g, h, 3);
    CHECK(a.sets == b.sets);
    CHECK(a.conjugators == b.conjugators);
    std::vector<ElementId> conj(g.order());
    for (ElementId x = 0; x < g.order(); ++x) conj[x] = x;
    CHECK(kernels::conjugate_sets_serial(g, h, conj) == kernels::conjugate_sets_omp(g, h, conj, 3));
  }
}

TEST_CASE("threaded and serial construction give the same group") {
  EnumerationOptions serial, threaded;
  serial.threads = 1;
  threaded.threads = 4;
  const Group a(library::by_name("PGL27"), serial), b(library::by_name("PGL27"), threaded);
  REQUIRE(a.order() == b.order());
  for (ElementId x = 0; x < a.order(); ++x) {
    CHECK(a.element(x) == b.element(x));
    CHECK(a.class_of(x) == b.class_of(x));
  }
}

TEST_CASE("generate, join and cyclicity") {
  const Group g(library::symmetric(4));
  const auto all = oracle::subgroups(g);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    std::vector<ElementId> gens{static_cast<ElementId>(rng() % g.order()), static_cast<ElementId>(rng() % g.order())};
    CHECK(g.generate(gens) == oracle::generate(g, gens));
    const ElementSet start = g.generate(std::vector<ElementId>{gens[0]});
    CHECK(g.join(start, std::vector<ElementId>{gens[0]}, gens[1]) == oracle::generate(g, gens));
  }
  CHECK_FALSE(g.is_cyclic());
  CHECK(Group(library::cyclic(6)).is_cyclic());
  CHECK_FALSE(Group(library::by_name("V4")).is_cyclic());
  CHECK(Group(PermGroup::trivial(3)).is_cyclic());
  CHECK(g.all().count() == 24);
}

TEST_CASE("group file round trip") {
  const std::string text =
      "# a comment\n"
      "degree 5\n"
      "\n"
      "(1,2,3,4,5)   # five-cycle\n"
      "(1,2)\n";
  const GroupFile f = parse_group_text(text);
  CHECK(f.degree == 5);
  REQUIRE(f.generators.size() == 2);
  CHECK(PermGroup(f.generators).order() == 120);
  const std::string canonical = print_group_file(f);
  const GroupFile again = parse_group_text(canonical);
  CHECK(again.degree == f.degree);
  CHECK(again.generators == f.generators);
  CHECK(print_group_file(again) == canonical);

  const GroupFile m11 = read_group_file(COVNUM_DATA_DIR "/m11.grp");
  CHECK(PermGroup(m11.generators).order() == 7920);
}

TEST_CASE("group file errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_group_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("degree 4\n(1,2)\n(1,9)\n") == 3);
  CHECK(line_of("# header\n(1,2)\n") == 2);
  CHECK(line_of("degree x\n") == 1);
  CHECK(line_of("degree 3\n(1,2,2)\n") == 2);
}

TEST_CASE("empty generator list is the trivial group") {
  const GroupFile f = parse_group_text("degree 3\n");
  CHECK(PermGroup(f.generators).order() == 1);
}

TEST_CASE("maximal file round trip") {
  const GroupFile gf = read_group_file(COVNUM_DATA_DIR "/m11.grp");
  const auto specs = read_maximal_file(COVNUM_DATA_DIR "/m11.max", gf.degree);
  REQUIRE(specs.size() == 5);
  std::vector<std::uint64_t> indices;
  for (const auto& s : specs) indices.push_back(s.index);
  CHECK(indices == std::vector<std::uint64_t>{11, 12, 55, 66, 165});
  const std::string text = print_maximal_file(specs);
  std::istringstream in(text);
  const auto again = parse_maximal_file(in, gf.degree);
  REQUIRE(again.size() == specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    CHECK(again[i].index == specs[i].index);
    CHECK(again[i].length == specs[i].length);
    CHECK(again[i].generators == specs[i].generators);
  }
  std::istringstream bad("[class 1]\nindex 2\nlength\n");
  CHECK_THROWS_AS(parse_maximal_file(bad, 4), ParseError);
}

TEST_CASE("finite fields") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    CAPTURE(q);
    const GaloisField f(q);
    CHECK(f.order() == q);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (std::uint32_t c = 0; c < q; c += (q > 9 ? 3 : 1))
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    std::set<std::uint32_t> powers;
    for (std::uint32_t k = 0; k < q - 1; ++k) powers.insert(f.pow(f.primitive(), k));
    CHECK(powers.size() == q - 1);
  }
  CHECK(prime_power(27) == std::pair<std::uint32_t, std::uint32_t>{3, 3});
  CHECK(prime_power(12).first == 0);
  CHECK_THROWS_AS(GaloisField(6), OutOfRange);
}

TEST_CASE("direct products") {
  const auto p = library::direct_product(library::symmetric(3), library::cyclic(4));
  CHECK(p.order() == 24);
  CHECK(p.degree() == 7);
  CHECK_FALSE(p.is_transitive());
  CHECK(library::symmetric(5).is_transitive());
}
