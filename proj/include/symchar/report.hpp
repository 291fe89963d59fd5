#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symchar/characters.hpp"
#include "symchar/interval.hpp"

namespace symchar {

/// A CSV file: `#`-prefixed comment lines, a header row, data rows.
/// Cells are written verbatim; callers quote where needed.
struct CsvDocument {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const CsvDocument& doc, std::ostream& out);
/// Throws std::runtime_error naming `path` when it cannot be written.
void emit_csv(const CsvDocument& doc, const std::filesystem::path& path);

/// Fixed-point rendering with `digits` decimals; deterministic across runs.
std::string format_fixed(double value, int digits = 10);
std::string quoted(const std::string& cell);

/// Header `N,p,total,divisible,zero,frac_div,frac_zero`; zero columns are
/// left empty when no exact table was built.
CsvDocument density_csv(const std::vector<DensityReport>& reports);

/// Header `lambda,mu,value`, one row per entry, partitions quoted.
template <class Arith>
CsvDocument table_csv(const CharTable<Arith>& table) {
  CsvDocument doc;
  doc.header = {"lambda", "mu", "value"};
  const std::size_t size = table.size();
  doc.rows.reserve(size * size);
  for (std::size_t row = 0; row < size; ++row) {
    for (std::size_t col = 0; col < size; ++col) {
      std::string value;
      if constexpr (std::is_same_v<Arith, ExactArithmetic>) {
        value = table(row, col).str();
      } else {
        value = std::to_string(table(row, col));
      }
      doc.rows.push_back({quoted(table.partitions[row].to_string()),
                          quoted(table.partitions[col].to_string()), std::move(value)});
    }
  }
  return doc;
}

struct BoundRow {
  std::string name;
  Interval value;
  std::optional<bool> certified;
};

/// Header `name,lo,hi,certified`; `certified` is 1, 0 or empty.
CsvDocument bounds_csv(const std::vector<BoundRow>& rows);

/// Cache file name for a table: table_n<N>_exact.csv or table_n<N>_mod<p>.csv.
std::string table_cache_name(int n, std::optional<int> p);

/// Reads a table written by table_csv. Returns nullopt when the file does
/// not exist; throws std::runtime_error on a malformed file.
std::optional<ExactTable> load_exact_table(const std::filesystem::path& path, int n);
std::optional<ModTable> load_mod_table(const std::filesystem::path& path, int n, int p);

}  // namespace symchar
