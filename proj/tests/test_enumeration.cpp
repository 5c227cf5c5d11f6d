#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "gauss_lintel/enumeration.hpp"
#include "gauss_lintel/format.hpp"
#include "gauss_lintel/generator.hpp"
#include "test_helpers.hpp"

using namespace gauss_lintel;
using test_helpers::naive_canonical;

namespace {

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

EnumerationOptions quiet() {
  EnumerationOptions o;
  o.workers = 2;
  return o;
}

}  // namespace

TEST_CASE("filter spec parsing and rendering") {
  CHECK(FilterSpec::parse("prime,ca").str() == "prime+CA");
  CHECK(FilterSpec::parse("prime,b").str() == "prime+B");
  CHECK(FilterSpec::parse("").str() == "all");
  CHECK(FilterSpec::parse("all").str() == "all");
  CHECK(FilterSpec::parse("prime+STZ").str() == "prime+STZ");
  CHECK(FilterSpec::parse("ca,stz,prime").str() == "prime+STZ+CA");
  CHECK(FilterSpec::parse("c2,b3,gl,r").str() == "C2+B3+GL+R");
  CHECK_THROWS_AS(FilterSpec::parse("bogus"), ParseError);
  CHECK_THROWS_AS(parse_criterion("c3"), ParseError);
  CHECK(parse_criterion("CA") == Criterion::CA);
  CHECK(parse_dedup_mode("set") == DedupMode::Set);
  CHECK(parse_dedup_mode("lyndon-test") == DedupMode::LyndonTest);
  CHECK_THROWS_AS(parse_dedup_mode("other"), ParseError);
}

TEST_CASE("enumerate matches the brute-force class grouping up to size 6") {
  for (int n = 1; n <= 6; ++n) {
    std::set<SortedLintel> expected;
    LintelGenerator gen(n);
    while (auto L = gen.next()) expected.insert(naive_canonical(*L));

    const EnumerationResult result =
        enumerate_lintels(n, FilterSpec::parse(""), quiet());
    CHECK(result.report.total_canonical == expected.size());
    CHECK(result.report.count == expected.size());
    const std::set<SortedLintel> emitted(result.lintels.begin(),
                                         result.lintels.end());
    CHECK(emitted == expected);
  }
}

TEST_CASE("worked enumeration examples") {
  CHECK(enumerate_lintels(5, FilterSpec::parse("prime,ca"), quiet())
            .report.count == 2);
  CHECK(enumerate_lintels(1, FilterSpec::parse("prime"), quiet())
            .report.count == 1);

  const EnumerationResult trefoil =
      enumerate_lintels(3, FilterSpec::parse("prime,stz"), quiet());
  REQUIRE(trefoil.report.count == 1);
  CHECK(format_lintel(trefoil.lintels[0]) == "[[0,3],[1,4],[2,5]]");
}

TEST_CASE("dedup modes agree") {
  for (int n : {1, 4, 6}) {
    EnumerationOptions set_mode = quiet();
    set_mode.dedup = DedupMode::Set;
    EnumerationOptions lyndon = quiet();
    lyndon.dedup = DedupMode::LyndonTest;
    const auto a = enumerate_lintels(n, FilterSpec::parse(""), set_mode);
    const auto b = enumerate_lintels(n, FilterSpec::parse(""), lyndon);
    CHECK(a.report.total_canonical == b.report.total_canonical);
    CHECK(a.report.count == b.report.count);
    CHECK(a.lintels == b.lintels);
  }

  EnumerationOptions set_mode = quiet();
  set_mode.dedup = DedupMode::Set;
  CHECK(enumerate_lintels(7, FilterSpec::parse("prime,ca"), set_mode)
            .report.count == 10);
}

TEST_CASE("worker count does not change the outcome") {
  const FilterSpec filter = FilterSpec::parse("prime,b");
  EnumerationResult baseline;
  for (int workers : {1, 2, 3}) {
    EnumerationOptions options;
    options.workers = workers;
    const EnumerationResult r = enumerate_lintels(7, filter, options);
    if (workers == 1) {
      baseline = r;
      continue;
    }
    CHECK(r.report.total_canonical == baseline.report.total_canonical);
    CHECK(r.report.count == baseline.report.count);
    CHECK(r.lintels == baseline.lintels);
  }
}

TEST_CASE("emitted lintels are canonical, distinct and L-sorted") {
  const EnumerationResult r =
      enumerate_lintels(6, FilterSpec::parse("prime"), quiet());
  for (std::size_t i = 0; i < r.lintels.size(); ++i) {
    CHECK(is_canonical(r.lintels[i]));
    if (i > 0) CHECK(l_compare(r.lintels[i - 1], r.lintels[i]) < 0);
  }
}

TEST_CASE("prime+B dominates prime+CA at every size") {
  for (int n = 1; n <= 8; ++n) {
    const auto results = enumerate_many(
        n, {FilterSpec::parse("prime,b"), FilterSpec::parse("prime,ca")},
        quiet());
    CHECK(results[0].report.count >= results[1].report.count);
  }
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(enumerate_lintels(12, FilterSpec::parse("prime"), quiet()),
                  SizeTooLarge);
  CHECK_THROWS_AS(enumerate_lintels(0, FilterSpec::parse(""), quiet()),
                  OutOfRange);
  EnumerationOptions tight = quiet();
  tight.max_size = 5;
  CHECK_THROWS_AS(enumerate_lintels(6, FilterSpec::parse(""), tight),
                  SizeTooLarge);
}

TEST_CASE("find_discrepancies") {
  CHECK(find_discrepancies(8, Criterion::B, Criterion::CA, quiet()).empty());
  // every realizable diagram satisfies STZ, and vice versa, at small sizes
  CHECK(find_discrepancies(6, Criterion::STZ, Criterion::CA, quiet()).empty());
}

TEST_CASE("save and load round-trip") {
  const auto path = temp_file("gauss_lintel_roundtrip.txt");
  const EnumerationResult out =
      enumerate_lintels(5, FilterSpec::parse("prime,ca"), quiet());
  save_results(path, out);

  const EnumerationResult in = load_results(path);
  CHECK(in.report.size == 5);
  CHECK(in.report.filter.str() == "prime+CA");
  CHECK(in.report.count == out.report.count);
  CHECK(in.lintels == out.lintels);
  std::filesystem::remove(path);
}

TEST_CASE("load accepts the listing style with periods and comments") {
  const auto path = temp_file("gauss_lintel_listing.txt");
  {
    std::ofstream f(path);
    f << "# gauss-lintel v1 size=3 filter=all\n";
    f << "# a comment line\n";
    f << "  [[0,1],[2,3],[4,5]].\n";
    f << "[[0,3],[1,4],[2,5]]\n";
  }
  const EnumerationResult in = load_results(path);
  CHECK(in.lintels.size() == 2);
  CHECK(in.report.count == 2);
  std::filesystem::remove(path);
}

TEST_CASE("load reports corrupted chords with their line number") {
  const auto path = temp_file("gauss_lintel_corrupt.txt");
  {
    std::ofstream f(path);
    f << "# gauss-lintel v1 size=2 filter=all\n";
    f << "[[0,1],[2,3]]\n";
    f << "[[0,2],[1,3]]\n";  // even difference
  }
  try {
    load_results(path);
    FAIL("expected C1Violation");
  } catch (const C1Violation& e) {
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
  std::filesystem::remove(path);
}

TEST_CASE("load rejects files without a header or with a bad footer") {
  const auto path = temp_file("gauss_lintel_bad.txt");
  {
    std::ofstream f(path);
    f << "[[0,1]]\n";
  }
  CHECK_THROWS_AS(load_results(path), ParseError);
  {
    std::ofstream f(path);
    f << "# gauss-lintel v1 size=1 filter=all\n[[0,1]]\n# count=5\n";
  }
  CHECK_THROWS_AS(load_results(path), ParseError);
  CHECK_THROWS_AS(load_results(temp_file("no_such_file_here.txt")), IoError);
  std::filesystem::remove(path);
}

TEST_CASE("summary tsv accumulates across invocations") {
  const auto path = temp_file("gauss_lintel_summary.tsv");
  std::filesystem::remove(path);
  for (int n : {3, 4, 5}) {
    append_summary_tsv(
        path, enumerate_lintels(n, FilterSpec::parse("prime,ca"), quiet())
                  .report);
  }
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "size\tfilter\tcount");
  std::getline(in, line);
  CHECK(line == "3\tprime+CA\t1");
  std::getline(in, line);
  CHECK(line == "4\tprime+CA\t1");
  std::getline(in, line);
  CHECK(line == "5\tprime+CA\t2");
  std::filesystem::remove(path);
}
