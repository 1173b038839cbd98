#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "covnum/error.hpp"
#include "covnum/group_io.hpp"
#include "covnum/library.hpp"
#include "covnum/structure.hpp"
#include "oracles.hpp"

using namespace covnum;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const Group& m11() {
  static const Group g(library::mathieu11());
  return g;
}

const MaxClassSet& m11_maximals() {
  static const MaxClassSet mx = ingest_maximal_classes(m11(), read_maximal_file(COVNUM_DATA_DIR "/m11.max", 11));
  return mx;
}

std::set<ElementSet> as_set(const std::vector<Subgroup>& v) {
  std::set<ElementSet> out;
  for (const auto& s : v) out.insert(s.elements);
  return out;
}

const std::vector<std::string> kSmall = {"V4",  "S3",    "D8",    "Q8",   "A4",    "S4",    "D10",   "D12",  "C3xC3",
                                         "C2^3", "C2xC4", "S3xS3", "C3xS3", "A5",   "AGL15", "AGL14", "AGL18", "C6"};

}  // namespace

TEST_CASE("subgroup lattice agrees with the brute-force join closure") {
  for (const auto& name : kSmall) {
    CAPTURE(name);
    const Group g(library::by_name(name));
    const auto brute = oracle::subgroups(g);
    const auto ours = all_subgroups(g);
    CHECK(as_set(ours) == std::set<ElementSet>(brute.begin(), brute.end()));
    CHECK(ours.size() == brute.size());
    for (const auto& s : ours) {
      CHECK(s.order == s.elements.count());
      CHECK(s.index * s.order == g.order());
      CHECK(g.generate(s.generator_ids) == s.elements);
    }
  }
  CHECK(all_subgroups(Group(library::symmetric(4))).size() == 30);
  CHECK(all_subgroups(Group(library::alternating(5))).size() == 59);
  CHECK(all_subgroups(Group(library::by_name("C2^3"))).size() == 16);
}

TEST_CASE("subgroup classes are conjugacy classes") {
  for (const char* name : {"S4", "A5", "S3xS3", "D12"}) {
    CAPTURE(name);
    const Group g(library::by_name(name));
    const auto classes = subgroup_classes(g);
    std::size_t total = 0;
    for (const auto& c : classes) {
      CHECK(c.members.front() == c.representative.elements);
      const auto conj = oracle::conjugates(g, {c.representative.elements});
      CHECK(std::set<ElementSet>(c.members.begin(), c.members.end()) == std::set<ElementSet>(conj.begin(), conj.end()));
      total += c.members.size();
    }
    CHECK(total == all_subgroups(g).size());
  }
}

TEST_CASE("computed maximal classes agree with brute force") {
  for (const auto& name : kSmall) {
    CAPTURE(name);
    const Group g(library::by_name(name));
    const auto brute = oracle::maximal_subgroups(g, oracle::subgroups(g));
    const MaxClassSet mx = maximal_classes(g);
    CHECK(mx.provenance == MaxSource::computed);
    std::set<ElementSet> ours;
    std::uint64_t previous = 0;
    for (const auto& m : mx.classes) {
      const auto conj = oracle::conjugates(g, {m.representative.elements});
      CHECK(m.class_length == conj.size());
      CHECK(m.index == g.order() / m.representative.order);
      CHECK(m.self_normalizing == (m.class_length == m.index));
      CHECK(m.class_length >= previous);
      previous = m.class_length;
      ours.insert(conj.begin(), conj.end());
    }
    CHECK(ours == std::set<ElementSet>(brute.begin(), brute.end()));
  }
}

TEST_CASE("maximal classes of A5 and S4") {
  auto indices = [](const MaxClassSet& mx) {
    std::multiset<std::uint64_t> out;
    for (const auto& m : mx.classes) out.insert(m.index);
    return out;
  };
  CHECK(indices(maximal_classes(Group(library::alternating(5)))) == std::multiset<std::uint64_t>{5, 6, 10});
  CHECK(indices(maximal_classes(Group(library::symmetric(4)))) == std::multiset<std::uint64_t>{2, 3, 4});
}

TEST_CASE("lattice budgets") {
  CHECK_THROWS_AS(maximal_classes(m11()), BudgetExceeded);
  LatticeBudget tight;
  tight.max_subgroups = 10;
  CHECK_THROWS_AS(all_subgroups(Group(library::symmetric(4)), tight), BudgetExceeded);
}

TEST_CASE("ingested M11 maximal classes") {
  const MaxClassSet& mx = m11_maximals();
  CHECK(mx.provenance == MaxSource::ingested);
  CHECK(mx.maximality_exhaustive);
  REQUIRE(mx.classes.size() == 5);
  std::vector<std::uint64_t> lengths, orders;
  for (const auto& m : mx.classes) {
    lengths.push_back(m.class_length);
    orders.push_back(m.representative.order);
  }
  CHECK(lengths == std::vector<std::uint64_t>{11, 12, 55, 66, 165});
  CHECK(orders == std::vector<std::uint64_t>{720, 660, 144, 120, 48});
}

TEST_CASE("ingestion matches computation on S5") {
  const Group g(library::symmetric(5));
  const MaxClassSet computed = maximal_classes(g);
  std::vector<MaximalSpec> specs;
  for (std::size_t i = 0; i < computed.classes.size(); ++i) {
    const auto& m = computed.classes[i];
    specs.push_back({i + 1, m.index, m.class_length, m.representative.generators(g)});
  }
  const MaxClassSet ingested = ingest_maximal_classes(g, specs);
  REQUIRE(ingested.classes.size() == computed.classes.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    CHECK(ingested.classes[i].representative.elements == computed.classes[i].representative.elements);
    CHECK(ingested.classes[i].class_length == computed.classes[i].class_length);
  }
}

TEST_CASE("ingestion rejects bad data") {
  const Group g(library::symmetric(5));
  const MaxClassSet computed = maximal_classes(g);
  const auto& a5 = computed.classes.front();  // the index-2 class has length 1
  REQUIRE(a5.index == 2);
  const MaximalSpec good{1, 2, 1, a5.representative.generators(g)};

  MaximalSpec wrong_index = good;
  wrong_index.index = 3;
  CHECK_THROWS_AS(ingest_maximal_classes(g, {wrong_index}), IngestInvalid);

  MaximalSpec wrong_length = good;
  wrong_length.length = 2;
  CHECK_THROWS_AS(ingest_maximal_classes(g, {wrong_length}), IngestInvalid);

  // A4 on the first four points lies inside A5 and S4.
  const MaximalSpec a4{2, 10, 5, {Permutation::from_cycles("(1,2,3)", 5), Permutation::from_cycles("(1,2)(3,4)", 5)}};
  CHECK_THROWS_AS(ingest_maximal_classes(g, {a4}), IngestInvalid);

  const MaximalSpec whole{3, 1, 1, g.perm_group().generators()};
  CHECK_THROWS_AS(ingest_maximal_classes(g, {whole}), IngestInvalid);

  CHECK_THROWS_AS(ingest_maximal_classes(g, {good, good}), IngestInvalid);

  const MaximalSpec outsider{4, 2, 1, {Permutation::from_cycles("(1,2)", 5)}};
  CHECK_NOTHROW(ingest_maximal_classes(g, {good}));
  CHECK_THROWS(ingest_maximal_classes(Group(library::alternating(5)), {outsider}));
}

TEST_CASE("normality and normal cores agree with brute force") {
  for (const char* name : {"S4", "D12", "S3xS3", "A4"}) {
    CAPTURE(name);
    const Group g(library::by_name(name));
    for (const auto& s : all_subgroups(g)) {
      CHECK(is_normal(g, s.elements) == oracle::is_normal(g, s.elements));
      ElementSet core = s.elements;
      for (const auto& c : oracle::conjugates(g, {s.elements})) core &= c;
      CHECK(normal_core(g, s).elements == core);
    }
  }
}

TEST_CASE("conjugates are independent of the thread count") {
  const Group g(library::by_name("PGL27"));
  const auto mx = maximal_classes(g);
  for (const auto& m : mx.classes) {
    const auto a = conjugates(g, m.representative.elements, 1), b = conjugates(g, m.representative.elements, 4);
    CHECK(a.sets == b.sets);
    CHECK(a.conjugators == b.conjugators);
    CHECK(a.sets.size() == m.class_length);
    for (std::size_t i = 0; i < a.sets.size(); ++i)
      CHECK(g.conjugate_set(m.representative.elements, a.conjugators[i]) == a.sets[i]);
  }
}

TEST_CASE("coset action on right cosets") {
  const Group g(library::symmetric(4));
  for (const auto& h : all_subgroups(g)) {
    if (h.index > 12) continue;
    const CosetAction a = coset_action(g, h);
    CHECK(a.image.degree() == h.index);
    CHECK(a.kernel.elements == normal_core(g, h).elements);
    CHECK(a.image.order() * a.kernel.order == g.order());
    for (ElementId x = 0; x < g.order(); ++x)
      for (ElementId y = 0; y < g.order(); ++y)
        CHECK((a.coset_of[x] == a.coset_of[y]) == h.contains(g.mul(x, g.inv(y))));
  }
  const Subgroup trivial = make_subgroup(g, std::vector<ElementId>{});
  CHECK_THROWS_AS(coset_action(g, trivial, 10), IndexTooLarge);
}

TEST_CASE("minimal normal subgroups agree with brute force") {
  for (const char* name : {"S4", "A5xC2", "C2^3", "D12", "S3xS3", "A4", "Q8", "A5"}) {
    CAPTURE(name);
    const Group g(library::by_name(name));
    std::vector<ElementSet> normal;
    for (const auto& s : oracle::subgroups(g))
      if (s.count() > 1 && oracle::is_normal(g, s)) normal.push_back(s);
    std::set<ElementSet> minimal;
    for (const auto& n : normal)
      if (std::none_of(normal.begin(), normal.end(),
                       [&](const ElementSet& m) { return m.count() < n.count() && m.is_subset_of(n); }))
        minimal.insert(n);
    CHECK(as_set(minimal_normal_subgroups(g)) == minimal);
  }
  CHECK(minimal_normal_subgroups(Group(library::by_name("C2^3"))).size() == 7);
  CHECK(minimal_normal_subgroups(m11()).size() == 1);
}

TEST_CASE("primitivity and monolithicity") {
  auto info = [](const char* name) {
    const Group g(library::by_name(name));
    return is_primitive_monolithic(g, maximal_classes(g));
  };
  const auto s4 = info("S4");
  CHECK(s4.primitive);
  CHECK(s4.monolithic);
  CHECK(s4.min_primitivity_degree == 4u);
  CHECK(info("A5").min_primitivity_degree == 5u);
  CHECK(info("PSL27").min_primitivity_degree == 7u);
  const auto v4 = info("V4");
  CHECK_FALSE(v4.primitive);
  CHECK_FALSE(v4.monolithic);
  CHECK_FALSE(info("A5xC2").monolithic);
  CHECK(is_primitive_monolithic(m11(), m11_maximals()).min_primitivity_degree == 11u);
}

TEST_CASE("solvability") {
  CHECK(is_solvable(Group(library::symmetric(4))));
  CHECK(is_solvable(Group(library::by_name("AGL18"))));
  CHECK_FALSE(is_solvable(Group(library::alternating(5))));
  CHECK_FALSE(is_solvable(Group(library::by_name("AGL32"))));
}

TEST_CASE("least supplement index") {
  const Group s4(library::symmetric(4));
  const MaxClassSet mx = maximal_classes(s4);
  Subgroup v4, a4;
  for (const auto& s : all_subgroups(s4)) {
    if (s.order == 4 && is_normal(s4, s.elements)) v4 = s;
    if (s.order == 12) a4 = s;
  }
  CHECK(min_supplement_index(s4, mx, v4) == 4);
  CHECK(min_supplement_index(s4, mx, a4) == 3);
  const Subgroup s3 = make_subgroup(s4, std::vector<Permutation>{Permutation::from_cycles("(1,2,3)", 4),
                                                                  Permutation::from_cycles("(1,2)", 4)});
  CHECK_THROWS_AS(min_supplement_index(s4, mx, s3), std::invalid_argument);

  const Group q8(library::quaternion8());
  const Subgroup centre = minimal_normal_subgroups(q8).front();
  CHECK_THROWS_AS(min_supplement_index(q8, maximal_classes(q8), centre), NoSupplement);
}

TEST_CASE("subgroup construction") {
  const Group g(library::symmetric(4));
  CHECK_THROWS_AS(make_subgroup(g, std::vector<Permutation>{Permutation::from_cycles("(1,2)", 5)}),
                  std::invalid_argument);
  const Subgroup h = make_subgroup(g, std::vector<Permutation>{Permutation::from_cycles("(1,2,3,4)", 4)});
  CHECK(h.order == 4);
  CHECK(h.index == 6);
  CHECK(subgroup_from_set(g, h.elements) == h);
}

TEST_CASE("incidence profile agrees with brute-force counts") {
  for (const char* name : {"A5", "S4", "PSL27", "S3xS3"}) {
    CAPTURE(name);
    const Group g(library::by_name(name));
    const MaxClassSet mx = maximal_classes(g);
    const IncidenceProfile p = incidence_profile(g, mx);
    REQUIRE(p.rows() == g.classes().classes.size());
    REQUIRE(p.columns() == mx.classes.size());
    for (std::size_t j = 0; j < p.rows(); ++j) {
      const auto& cls = g.classes().classes[j];
      CHECK(p.class_sizes[j] == cls.size);
      for (std::size_t i = 0; i < p.columns(); ++i) {
        const auto& rep = mx.classes[i].representative.elements;
        std::uint64_t n = 0;
        for (ElementId x = 1; x < g.order(); ++x) n += rep.test(x) && g.class_of(x) == static_cast<int>(j);
        std::uint64_t k = 0;
        for (const auto& c : oracle::conjugates(g, {rep})) k += c.test(cls.representative);
        CHECK(p.entries[j][i].n == n);
        if (n) CHECK(p.entries[j][i].k == k);
        CHECK(n * mx.classes[i].class_length == k * cls.size);
      }
    }
  }
}

TEST_CASE("element distribution tables") {
  const Group a5(library::alternating(5));
  CHECK(profile_to_tsv(incidence_profile(a5, maximal_classes(a5))) ==
        "class\tM1(5)\tM2(6)\tM3(10)\n"
        "cl_5,1\t0\t2,P\t0\n"
        "cl_5,2\t0\t2,P\t0\n"
        "cl_3\t8_2\t0\t2,P\n"
        "cl_2\t3,P\t5_2\t3_2\n");
  const Group v4(library::by_name("V4"));
  CHECK(profile_to_tsv(incidence_profile(v4, maximal_classes(v4))) ==
        "class\tM1(1)\tM2(1)\tM3(1)\n"
        "cl_2,1\t1,P\t0\t0\n"
        "cl_2,2\t0\t1,P\t0\n"
        "cl_2,3\t0\t0\t1,P\n");
}

TEST_CASE("profile TSV round trip") {
  for (const char* name : {"A5", "PGL27", "AGL32"}) {
    CAPTURE(name);
    const Group g(library::by_name(name));
    const IncidenceProfile p = incidence_profile(g, maximal_classes(g));
    const std::string text = profile_to_tsv(p);
    const IncidenceProfile q = profile_from_tsv(text);
    CHECK(q.row_labels == p.row_labels);
    CHECK(q.class_sizes == p.class_sizes);
    CHECK(q.column_lengths == p.column_lengths);
    CHECK(q.entries == p.entries);
    CHECK(profile_to_tsv(q) == text);
  }
}

TEST_CASE("stored fixtures replay byte for byte") {
  for (const char* file : {"psl27sq4.tsv", "o8minus2.tsv"}) {
    CAPTURE(file);
    const std::string path = std::string(COVNUM_DATA_DIR) + "/" + file;
    CHECK(profile_to_tsv(read_profile(path)) == slurp(path));
  }
  const IncidenceProfile p = read_profile(COVNUM_DATA_DIR "/psl27sq4.tsv");
  CHECK(p.class_sizes == std::vector<std::uint64_t>{4704, 16 * 441, 294 * 64 / 2, 294 * 64 / 2});
  CHECK(p.column_lengths == std::vector<std::uint64_t>{1, 64, 441, 784});
}

TEST_CASE("profile parse errors") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      profile_from_tsv(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("klass\tM1(1)\n") == 1);
  CHECK(line_of("class\tM1(1)\tM2(x)\n") == 1);
  CHECK(line_of("class\tM1(1)\nrow\t1,P\n") == 2);
  CHECK(line_of("class\tM1(1)\tM2(2)\ncl_2\t1,P\n") == 2);
  CHECK(line_of("class\tM1(1)\ncl_2\tabc\n") == 2);
  // inconsistent sizes: 2*1/1 versus 3*2/1
  CHECK(line_of("class\tM1(1)\tM2(2)\ncl_2\t2,P\t3,P\n") == 2);
}

TEST_CASE("noncyclic groups are the union of their maximal subgroups") {
  for (const auto& name : library::names()) {
    if (name == "M11") continue;
    CAPTURE(name);
    const Group g(library::by_name(name));
    const MaxClassSet mx = maximal_classes(g);
    ElementSet u(g.order());
    for (const auto& m : mx.classes)
      for (const auto& c : conjugates(g, m.representative.elements).sets) u |= c;
    CHECK((u.count() == g.order()) == !g.is_cyclic());
  }
}
