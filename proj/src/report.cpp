#include "symchar/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace symchar {

void write_csv(const CsvDocument& doc, std::ostream& out) {
  for (const auto& comment : doc.comments) out << "# " << comment << '\n';
  auto write_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  if (!doc.header.empty()) write_row(doc.header);
  for (const auto& row : doc.rows) write_row(row);
}

void emit_csv(const CsvDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_csv(doc, out);
  out.flush();
  if (!out) throw std::runtime_error("failed while writing " + path.string());
}

std::string format_fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string quoted(const std::string& cell) { return '"' + cell + '"'; }

CsvDocument density_csv(const std::vector<DensityReport>& reports) {
  CsvDocument doc;
  doc.header = {"N", "p", "total", "divisible", "zero", "frac_div", "frac_zero"};
  for (const auto& r : reports) {
    const auto frac_zero = r.fraction_zero();
    doc.rows.push_back({std::to_string(r.n), std::to_string(r.p), std::to_string(r.total),
                        std::to_string(r.divisible), r.zero ? std::to_string(*r.zero) : std::string(),
                        format_fixed(r.fraction_divisible()),
                        frac_zero ? format_fixed(*frac_zero) : std::string()});
  }
  return doc;
}

CsvDocument bounds_csv(const std::vector<BoundRow>& rows) {
  CsvDocument doc;
  doc.header = {"name", "lo", "hi", "certified"};
  for (const auto& row : rows) {
    doc.rows.push_back({row.name, row.value.lo_string(), row.value.hi_string(),
                        row.certified ? (*row.certified ? "1" : "0") : ""});
  }
  return doc;
}

std::string table_cache_name(int n, std::optional<int> p) {
  return "table_n" + std::to_string(n) + (p ? "_mod" + std::to_string(*p) : std::string("_exact")) + ".csv";
}

namespace {

// Splits `"a,b","c,d",v` into its three cells with the quotes removed.
std::vector<std::string> split_table_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool in_quotes = false;
  for (char c : line) {
    if (c == '"') {
      in_quotes = !in_quotes;
    } else if (c == ',' && !in_quotes) {
      cells.push_back(std::move(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(std::move(cell));
  return cells;
}

template <class Table, class Parse>
std::optional<Table> load_table(const std::filesystem::path& path, Table table, Parse parse) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  const std::size_t size = table.size();
  table.entries.assign(size * size, table.arith.zero());
  std::string line;
  std::size_t filled = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto cells = split_table_line(line);
    if (cells.size() != 3) throw std::runtime_error(path.string() + ": malformed row '" + line + "'");
    try {
      const std::size_t row = table.index_of(Partition::parse(cells[0]));
      const std::size_t col = table.index_of(Partition::parse(cells[1]));
      table(row, col) = parse(cells[2]);
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ": bad row '" + line + "': " + e.what());
    }
    ++filled;
  }
  if (filled != size * size) {
    throw std::runtime_error(path.string() + ": expected " + std::to_string(size * size) + " entries, found " +
                             std::to_string(filled));
  }
  return table;
}

}  // namespace

std::optional<ExactTable> load_exact_table(const std::filesystem::path& path, int n) {
  ExactTable table{n, ExactArithmetic{}, enumerate_partitions(n), {}};
  return load_table(path, std::move(table), [](const std::string& s) { return BigInt(s); });
}

std::optional<ModTable> load_mod_table(const std::filesystem::path& path, int n, int p) {
  ModTable table{n, ModArithmetic(p), enumerate_partitions(n), {}};
  return load_table(path, std::move(table), [p](const std::string& s) {
    const unsigned long v = std::stoul(s);
    if (v >= static_cast<unsigned long>(p)) throw std::runtime_error("residue out of range: " + s);
    return static_cast<std::uint32_t>(v);
  });
}

}  // namespace symchar
