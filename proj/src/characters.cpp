#include "symchar/characters.hpp"

namespace symchar {

BigInt character_value(const Partition& lambda, const Partition& mu) {
  ColumnEvaluator<ExactArithmetic> column(mu, ExactArithmetic{});
  return column.value(lambda);
}

int character_value_mod(const Partition& lambda, const Partition& mu, int p) {
  ColumnEvaluator<ModArithmetic> column(mu, ModArithmetic(p));
  return static_cast<int>(column.value(lambda));
}

ExactTable build_exact_table(int n, const TableOptions& options) {
  if (n > options.exact_cap) {
    throw ResourceError("exact table for n = " + std::to_string(n) + " exceeds the exact cap " +
                        std::to_string(options.exact_cap));
  }
  return build_table(n, ExactArithmetic{}, options.threads);
}

ModTable build_mod_table(int n, int p, const TableOptions& options) {
  if (n > options.mod_cap) {
    throw ResourceError("residue table for n = " + std::to_string(n) + " exceeds the mod cap " +
                        std::to_string(options.mod_cap));
  }
  return build_table(n, ModArithmetic(p), options.threads);
}

BigInt hook_length_dimension(const Partition& lambda) {
  BigInt denom = 1;
  for (const auto& row : hook_lengths(lambda)) {
    for (int h : row) denom *= h;
  }
  return factorial(lambda.n()) / denom;
}

DensityReport density_report(const ModTable& mod_table, const ExactTable* exact_table) {
  DensityReport report;
  report.n = mod_table.n;
  report.p = static_cast<int>(mod_table.arith.modulus());
  report.total = static_cast<long long>(mod_table.entries.size());
  for (auto v : mod_table.entries) {
    if (v == 0) ++report.divisible;
  }
  if (exact_table != nullptr) {
    if (exact_table->n != mod_table.n) throw DomainError("density_report: table sizes differ");
    long long zeros = 0;
    for (const auto& v : exact_table->entries) {
      if (v == 0) ++zeros;
    }
    report.zero = zeros;
  }
  return report;
}

DensityReport density_report(int n, int p, const TableOptions& options) {
  const ModTable mod_table = build_mod_table(n, p, options);
  if (n <= options.exact_cap) {
    const ExactTable exact_table = build_exact_table(n, options);
    return density_report(mod_table, &exact_table);
  }
  return density_report(mod_table, nullptr);
}

}  // namespace symchar
