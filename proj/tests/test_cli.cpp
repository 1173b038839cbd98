#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "covnum/cli.hpp"
#include "covnum/error.hpp"
#include "covnum/exact.hpp"

using namespace covnum;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<nlohmann::json> records(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(nlohmann::json::parse(line));  // throws on malformed lines
  }
  return out;
}

std::vector<nlohmann::json> of_kind(const std::vector<nlohmann::json>& recs, const std::string& kind) {
  std::vector<nlohmann::json> out;
  for (const auto& r : recs)
    if (r.at("record") == kind) out.push_back(r);
  return out;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "covnum_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kData = COVNUM_DATA_DIR;

}  // namespace

TEST_CASE("records are JSON lines with provenance") {
  const Run r = run({"bounds", "--library", "A5", "--format", "records", "--no-timing"});
  CHECK(r.code == cli::ok);
  const auto recs = records(r.out);
  const auto bounds = of_kind(recs, "bounds");
  REQUIRE(bounds.size() == 1);
  CHECK(bounds[0]["lower"] == 6);
  CHECK(bounds[0]["upper"] == 11);
  CHECK(bounds[0]["certified"] == false);
  CHECK(of_kind(recs, "trace").size() == 2);
  for (const auto& rec : recs)
    if (rec["record"] != "note") CHECK(rec.contains("provenance"));
  const auto reg = of_kind(recs, "registry");
  REQUIRE(reg.size() == 1);
  CHECK(reg[0]["agrees"] == true);
  CHECK(reg[0]["provenance"].get<std::string>().rfind("registry(", 0) == 0);
}

TEST_CASE("global options may follow the subcommand or precede it") {
  const Run a = run({"--format", "records", "--no-timing", "exact", "--library", "S4"});
  const Run b = run({"exact", "--library", "S4", "--format", "records", "--no-timing"});
  CHECK(a.code == cli::ok);
  CHECK(a.out == b.out);
  const auto exact = of_kind(records(a.out), "exact");
  REQUIRE(exact.size() == 1);
  CHECK(exact[0]["upper"] == 4);
  CHECK(exact[0]["optimal"] == true);
}

TEST_CASE("bounds in both modes") {
  const auto faithful = of_kind(records(run({"bounds", "--library", "V4", "--mode", "faithful", "--format",
                                             "records", "--no-timing"})
                                            .out),
                                "bounds");
  const auto corrected = of_kind(records(run({"bounds", "--library", "V4", "--format", "records"}).out), "bounds");
  CHECK(faithful.at(0)["upper"] == 6);
  CHECK(corrected.at(0)["upper"] == 3);
  CHECK(run({"bounds", "--library", "V4", "--mode", "sloppy"}).code == cli::failure);
}

TEST_CASE("human output is a set of aligned tables") {
  const Run r = run({"exact", "--library", "A5", "--no-timing"});
  CHECK(r.code == cli::ok);
  CHECK(r.out.find("[exact]") != std::string::npos);
  CHECK(r.out.find("provenance") != std::string::npos);
  CHECK(r.out.find("computed") != std::string::npos);
}

TEST_CASE("exact on chosen classes, with instance export and LP output") {
  const fs::path dir = scratch_dir();
  const fs::path inst = dir / "a5_order5.txt", lp = dir / "a5_order5.lp";
  const Run r = run({"exact", "--library", "A5", "--classes", "cl_5,1,cl_5,2", "--subgroup-classes", "M2", "--export",
                     inst.string(), "--lp", lp.string(), "--format", "records", "--no-timing"});
  CHECK(r.code == cli::ok);
  CHECK(of_kind(records(r.out), "exact").at(0)["upper"] == 6);
  const CoverInstance back = import_instance(slurp(inst));
  CHECK(back.universe_size == 24);
  CHECK(back.columns.size() == 6);
  CHECK(slurp(lp).rfind("\\ set cover: 24 elements, 6 columns\n", 0) == 0);

  const Run again = run({"exact", "--instance", inst.string(), "--format", "records", "--no-timing"});
  CHECK(again.code == cli::ok);
  CHECK(of_kind(records(again.out), "exact").at(0)["upper"] == 6);
}

TEST_CASE("verify on the stored fixture") {
  const Run r = run({"verify", "--fixture", kData + "/psl27sq4.tsv", "--pi", "cl_24,cl_16", "--cover", "M1,M3",
                     "--format", "records"});
  CHECK(r.code == cli::ok);
  const auto recs = records(r.out);
  CHECK(of_kind(recs, "certificate").at(0)["verdict"] == "unique_minimal");
  const auto comp = of_kind(recs, "competitor");
  REQUIRE(comp.size() == 2);
  for (const auto& c : comp) CHECK(c["c"] == "0");

  const Run bad = run({"verify", "--fixture", kData + "/psl27sq4.tsv", "--pi", "cl_24,cl_16", "--cover", "M1"});
  CHECK(bad.code == cli::failure);
  CHECK(bad.err.rfind("error: NotACover:", 0) == 0);
}

TEST_CASE("table replays fixtures byte for byte") {
  for (const char* file : {"psl27sq4.tsv", "o8minus2.tsv"}) {
    const Run r = run({"table", "--fixture", kData + "/" + file});
    CHECK(r.code == cli::ok);
    CHECK(r.out == slurp(kData + "/" + file));
  }
  const Run a5 = run({"table", "--library", "A5"});
  CHECK(a5.out.find("cl_3\t8_2\t0\t2,P") != std::string::npos);
}

TEST_CASE("bounds on a fixture uses the counting bound") {
  const Run r = run({"bounds", "--fixture", kData + "/o8minus2.tsv", "--format", "records", "--no-timing"});
  CHECK(r.code == cli::ok);
  CHECK(of_kind(records(r.out), "counting_total").at(0)["lower"] == 25706);
}

TEST_CASE("sigma-elementary") {
  const Run yes = run({"sigma-elementary", "--library", "PSL27", "--format", "records", "--no-timing"});
  CHECK(yes.code == cli::ok);
  CHECK(of_kind(records(yes.out), "elementary").at(0)["elementary"] == true);
  const Run no = run({"sigma-elementary", "--library", "S4", "--format", "records", "--no-timing"});
  CHECK(no.code == cli::ok);
  CHECK(of_kind(records(no.out), "elementary").at(0)["elementary"] == false);
}

TEST_CASE("M11 picks up its stored maximal classes") {
  const Run r = run({"bounds", "--library", "M11", "--format", "records", "--no-timing"});
  CHECK(r.code == cli::ok);
  const auto b = of_kind(records(r.out), "bounds").at(0);
  CHECK(b["lower"].get<int>() <= 23);
  CHECK(b["upper"].get<int>() >= 23);
}

TEST_CASE("batch suites") {
  const Run empty = run({"batch", "empty", "--format", "records"});
  CHECK(empty.code == cli::ok);
  const auto summary = of_kind(records(empty.out), "summary");
  REQUIRE(summary.size() == 1);
  CHECK(summary[0]["entries"] == 0);

  const Run golden = run({"batch", "golden-small", "--format", "records", "--no-timing"});
  CHECK(golden.code == cli::ok);
  const auto recs = records(golden.out);
  const auto entries = of_kind(recs, "entry");
  const std::vector<std::string> expected = cli::suite("golden-small");
  REQUIRE(entries.size() == expected.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(entries[i]["group"] == expected[i]);
    CHECK(entries[i]["status"] == "pass");
  }
  CHECK(of_kind(recs, "summary").at(0)["passed"] == expected.size());

  // Single-threaded runs are reproducible.
  CHECK(run({"batch", "golden-small", "--format", "records", "--no-timing", "--threads", "1"}).out ==
        run({"batch", "golden-small", "--format", "records", "--no-timing", "--threads", "1"}).out);

  CHECK(run({"batch", "nonsense"}).code == cli::failure);
  CHECK_THROWS_AS(cli::suite("nonsense"), UnknownName);
  CHECK(cli::suite_names().size() >= 4);
}

TEST_CASE("known") {
  const Run j2 = run({"known", "J2", "--format", "records"});
  CHECK(j2.code == cli::ok);
  CHECK(of_kind(records(j2.out), "known").at(0)["sigma"] == "1063..1121");
  const Run f = run({"known", "--formula", "psl2", "--params", "11", "--format", "records"});
  CHECK(f.code == cli::ok);
  const auto row = of_kind(records(f.out), "formula").at(0);
  CHECK(row["sigma"] == 67);
  CHECK(row["provenance"] == "formula(psl2)");
  CHECK(run({"known", "--formula", "psl2", "--params", "7"}).code == cli::failure);
  const Run list = run({"known", "--list", "--format", "records"});
  CHECK(of_kind(records(list.out), "known").size() >= 60);
  const Run missing = run({"known", "Monster"});
  CHECK(missing.code == cli::failure);
  CHECK(missing.err.rfind("error: UnknownName:", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::failure);
  CHECK(run({"frobnicate"}).code == cli::failure);
  const Run cyclic = run({"exact", "--library", "C6"});
  CHECK(cyclic.code == cli::failure);
  CHECK(cyclic.err.find("error: CyclicGroup:") != std::string::npos);

  // A file named after A5 but holding S5 disagrees with the registry.
  const fs::path file = scratch_dir() / "A5.grp";
  std::ofstream(file) << "degree 5\n(1,2,3,4,5)\n(1,2)\n";
  const Run wrong = run({"exact", "--file", file.string(), "--format", "records", "--no-timing"});
  CHECK(wrong.code == cli::mismatch);
  CHECK(of_kind(records(wrong.out), "registry").at(0)["agrees"] == false);

  std::ofstream(scratch_dir() / "broken.grp") << "degree 5\n(1,2,9)\n";
  const Run broken = run({"bounds", "--file", (scratch_dir() / "broken.grp").string()});
  CHECK(broken.code == cli::failure);
  CHECK(broken.err.rfind("error: ", 0) == 0);
}

TEST_CASE("budgets are surfaced, never silent") {
  const Run r = run({"exact", "--library", "A6", "--max-nodes", "1", "--threads", "1", "--format", "records",
                     "--no-timing"});
  CHECK(r.code == cli::ok);
  const auto row = of_kind(records(r.out), "exact").at(0);
  CHECK(row["budget_exhausted"] == true);
  CHECK(row["optimal"] == false);
  CHECK(row["lower"].get<int>() <= 16);
  CHECK(row["upper"].get<int>() >= 16);

  const Run lattice = run({"bounds", "--library", "S6", "--max-order", "100"});
  CHECK(lattice.code == cli::failure);
  CHECK(lattice.err.find("BudgetExceeded") != std::string::npos);
}
