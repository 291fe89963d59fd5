#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "symchar/report.hpp"

using namespace symchar;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "symchar_report_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("write_csv layout") {
  CsvDocument doc;
  doc.comments = {"one", "two"};
  doc.header = {"a", "b"};
  doc.rows = {{"1", "2"}, {"3", "4"}};
  std::ostringstream out;
  write_csv(doc, out);
  CHECK(out.str() == "# one\n# two\na,b\n1,2\n3,4\n");
}

TEST_CASE("an empty report is a header-only file") {
  CsvDocument doc;
  doc.header = {"N", "p", "total", "divisible", "zero", "frac_div", "frac_zero"};
  const auto path = scratch("empty.csv");
  emit_csv(doc, path);
  CHECK(slurp(path) == "N,p,total,divisible,zero,frac_div,frac_zero\n");
  CHECK(density_csv({}).rows.empty());
}

TEST_CASE("emit_csv names the path on failure") {
  CsvDocument doc;
  doc.header = {"x"};
  const std::filesystem::path bad = "/nonexistent-dir/for/sure/out.csv";
  try {
    emit_csv(doc, bad);
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
  }
}

TEST_CASE("formatting helpers") {
  CHECK(format_fixed(0.5) == "0.5000000000");
  CHECK(format_fixed(1.0 / 3.0, 4) == "0.3333");
  CHECK(quoted("3,2,1") == "\"3,2,1\"");
}

TEST_CASE("density_csv") {
  std::vector<DensityReport> reports;
  for (int n = 1; n <= 6; ++n) reports.push_back(density_report(n, 2));
  const CsvDocument doc = density_csv(reports);
  CHECK(doc.header == std::vector<std::string>{"N", "p", "total", "divisible", "zero", "frac_div", "frac_zero"});
  REQUIRE(doc.rows.size() == 6);
  CHECK(doc.rows[0] == std::vector<std::string>{"1", "2", "1", "0", "0", "0.0000000000", "0.0000000000"});

  DensityReport no_zero = density_report(3, 2);
  no_zero.zero.reset();
  const CsvDocument partial = density_csv({no_zero});
  CHECK(partial.rows[0][4].empty());
  CHECK(partial.rows[0][6].empty());
}

TEST_CASE("table_csv and the cache round trip") {
  const ExactTable exact = build_exact_table(5);
  const CsvDocument doc = table_csv(exact);
  CHECK(doc.header == std::vector<std::string>{"lambda", "mu", "value"});
  CHECK(doc.rows.size() == 49);
  CHECK(doc.rows[0] == std::vector<std::string>{"\"5\"", "\"5\"", "1"});

  CHECK(table_cache_name(5, std::nullopt) == "table_n5_exact.csv");
  CHECK(table_cache_name(5, 3) == "table_n5_mod3.csv");

  const auto exact_path = scratch(table_cache_name(5, std::nullopt));
  emit_csv(doc, exact_path);
  const auto loaded = load_exact_table(exact_path, 5);
  REQUIRE(loaded.has_value());
  CHECK(loaded->entries == exact.entries);
  CHECK(loaded->partitions == exact.partitions);

  const ModTable mod = build_mod_table(6, 3);
  const auto mod_path = scratch(table_cache_name(6, 3));
  emit_csv(table_csv(mod), mod_path);
  const auto loaded_mod = load_mod_table(mod_path, 6, 3);
  REQUIRE(loaded_mod.has_value());
  CHECK(loaded_mod->entries == mod.entries);

  CHECK_FALSE(load_exact_table(scratch("missing.csv"), 5).has_value());
  CHECK_THROWS_AS(load_exact_table(exact_path, 6), std::runtime_error);

  const auto junk = scratch("junk.csv");
  {
    std::ofstream out(junk);
    out << "lambda,mu,value\n\"5\",\"5\",notanumber\n";
  }
  CHECK_THROWS_AS(load_exact_table(junk, 5), std::runtime_error);
}

TEST_CASE("bounds_csv") {
  const CsvDocument doc = bounds_csv({{"a", Interval(2), true}, {"b", Interval::hull(1.0, 2.0), std::nullopt},
                                      {"c", Interval(0), false}});
  CHECK(doc.header == std::vector<std::string>{"name", "lo", "hi", "certified"});
  REQUIRE(doc.rows.size() == 3);
  CHECK(doc.rows[0][0] == "a");
  CHECK(doc.rows[0][3] == "1");
  CHECK(doc.rows[1][3].empty());
  CHECK(doc.rows[2][3] == "0");
  CHECK(doc.rows[1][1].rfind("1.0000", 0) == 0);
  CHECK(doc.rows[1][2].rfind("2.0000", 0) == 0);
}
