// Writes the M11 group file and its maximal-subgroup file.
// Representatives: the stabilizers of a point, a 2-set, a 3-set and a 5-set
// from the 66-orbit, and an L2(11) found as <11:5, involution>.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

#include "covnum/group_io.hpp"
#include "covnum/library.hpp"
#include "covnum/structure.hpp"

using namespace covnum;

namespace {

ElementSet setwise_stabilizer(const Group& g, const std::vector<Point>& set) {
  ElementSet out(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    auto img = g.images(x);
    bool keeps = std::all_of(set.begin(), set.end(), [&](Point p) {
      return std::find(set.begin(), set.end(), img[p]) != set.end();
    });
    if (keeps) out.set(x);
  }
  return out;
}

std::uint64_t orbit_size_on_sets(const Group& g, std::vector<Point> set) {
  std::sort(set.begin(), set.end());
  std::vector<std::vector<Point>> orbit{set};
  std::map<std::vector<Point>, bool> seen{{set, true}};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (ElementId s : g.generator_ids()) {
      std::vector<Point> img;
      for (Point p : orbit[i]) img.push_back(g.images(s)[p]);
      std::sort(img.begin(), img.end());
      if (seen.emplace(img, true).second) orbit.push_back(img);
    }
  return orbit.size();
}

Subgroup find_l2_11(const Group& g) {
  ElementId a = 0;
  for (ElementId x = 1; x < g.order(); ++x)
    if (g.element_order(x) == 11) {
      a = x;
      break;
    }
  std::vector<ElementId> gens{a};
  Subgroup cyc = make_subgroup(g, gens);
  Subgroup frob;
  for (ElementId y = 1; y < g.order(); ++y) {
    if (g.element_order(y) != 5 || !(g.conjugate_set(cyc.elements, y) == cyc.elements)) continue;
    frob = make_subgroup(g, std::vector<ElementId>{a, y});
    break;
  }
  for (ElementId t = 1; t < g.order(); ++t) {
    if (g.element_order(t) != 2) continue;
    ElementSet j = g.join(frob.elements, frob.generator_ids, t);
    if (j.count() == 660) return subgroup_from_set(g, j);
  }
  throw std::runtime_error("no L2(11) found");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";
  PermGroup m11 = library::mathieu11();
  Group g(m11);

  std::vector<Subgroup> reps;
  reps.push_back(subgroup_from_set(g, setwise_stabilizer(g, {0})));
  reps.push_back(find_l2_11(g));
  reps.push_back(subgroup_from_set(g, setwise_stabilizer(g, {0, 1})));
  std::vector<Point> five;
  for (Point a = 0; a < 11 && five.empty(); ++a)
    for (Point b = a + 1; b < 11 && five.empty(); ++b) {
      std::vector<Point> s{0, 1, 2, a, b};
      std::sort(s.begin(), s.end());
      if (std::unique(s.begin(), s.end()) != s.end()) continue;
      if (orbit_size_on_sets(g, s) == 66) five = s;
    }
  reps.push_back(subgroup_from_set(g, setwise_stabilizer(g, five)));
  reps.push_back(subgroup_from_set(g, setwise_stabilizer(g, {0, 1, 2})));

  std::vector<MaximalSpec> specs;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    MaximalSpec s;
    s.label = i + 1;
    s.index = reps[i].index;
    s.length = conjugates(g, reps[i].elements).sets.size();
    s.generators = reps[i].generators(g);
    specs.push_back(std::move(s));
  }
  ingest_maximal_classes(g, specs);  // throws unless every class checks out

  std::ofstream(dir + "/m11.grp") << "# Mathieu group M11 on 11 points, order 7920\n"
                                  << print_group_file({11, m11.generators()});
  std::ofstream(dir + "/m11.max") << "# maximal subgroup classes of M11: M10, L2(11), M9:2, S5, 2.S4\n"
                                  << print_maximal_file(specs);
  std::cout << "wrote " << dir << "/m11.grp and " << dir << "/m11.max\n";
}
