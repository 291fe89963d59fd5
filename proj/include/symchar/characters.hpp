#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "symchar/bigint.hpp"
#include "symchar/errors.hpp"
#include "symchar/hooks.hpp"
#include "symchar/partition.hpp"

namespace symchar {

/// Character values as exact signed integers.
struct ExactArithmetic {
  using value_type = BigInt;

  value_type one() const { return 1; }
  value_type zero() const { return 0; }
  void accumulate(value_type& acc, const value_type& v, int sign) const {
    if (sign > 0) {
      acc += v;
    } else {
      acc -= v;
    }
  }
  bool is_zero(const value_type& v) const { return v == 0; }
  // Residue of v mod p in [0, p).
  std::uint32_t residue(const value_type& v, std::uint32_t p) const {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint32_t>();
  }
};

// Largest modulus accepted by ModArithmetic.
inline constexpr int kMaxModulus = 64;

/// Character values reduced mod a prime p <= kMaxModulus, as residues in [0, p).
class ModArithmetic {
 public:
  using value_type = std::uint32_t;

  explicit ModArithmetic(int p) : p_(static_cast<std::uint32_t>(p)) {
    if (!is_prime(p) || p > kMaxModulus) {
      throw DomainError("modulus must be a prime <= " + std::to_string(kMaxModulus));
    }
  }

  std::uint32_t modulus() const { return p_; }
  value_type one() const { return 1 % p_; }
  value_type zero() const { return 0; }
  void accumulate(value_type& acc, value_type v, int sign) const {
    acc = sign > 0 ? (acc + v) % p_ : (acc + p_ - v) % p_;
  }
  bool is_zero(value_type v) const { return v == 0; }

 private:
  std::uint32_t p_;
};

/// Murnaghan-Nakayama evaluation of one column chi^{.}_mu.
///
/// Strips of length mu_1 are removed first, then mu_2, and so on. A
/// partition reached during the recursion has size mu_{i+1} + ... , which
/// determines how many parts of mu are already consumed, so the memo is
/// keyed by the partition alone. The memo lives as long as the evaluator.
template <class Arith>
class ColumnEvaluator {
 public:
  using value_type = typename Arith::value_type;

  ColumnEvaluator(Partition mu, Arith arith) : mu_(std::move(mu)), arith_(std::move(arith)) {
    suffix_index_.assign(static_cast<std::size_t>(mu_.n()) + 1, -1);
    int remaining = mu_.n();
    for (int i = 0; i < mu_.length(); ++i) {
      suffix_index_[static_cast<std::size_t>(remaining)] = i;
      remaining -= mu_[static_cast<std::size_t>(i)];
    }
  }

  const Partition& mu() const { return mu_; }

  value_type value(const Partition& lambda) {
    if (lambda.n() != mu_.n()) {
      throw DomainError("character value: |lambda| = " + std::to_string(lambda.n()) +
                        " differs from |mu| = " + std::to_string(mu_.n()));
    }
    return eval(lambda);
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  value_type eval(const Partition& lambda) {
    if (lambda.empty()) return arith_.one();
    if (auto it = memo_.find(lambda); it != memo_.end()) return it->second;
    const int t = mu_[static_cast<std::size_t>(suffix_index_[static_cast<std::size_t>(lambda.n())])];
    value_type acc = arith_.zero();
    // An empty strip list means lambda is a t-core and the value is 0.
    for (const StripRemoval& strip : remove_border_strips(lambda, t)) {
      arith_.accumulate(acc, eval(strip.result), strip.sign());
    }
    memo_.emplace(lambda, acc);
    return acc;
  }

  Partition mu_;
  Arith arith_;
  std::vector<int> suffix_index_;
  std::unordered_map<Partition, value_type, PartitionHash> memo_;
};

/// chi^lambda_mu exactly. Throws DomainError when |lambda| != |mu|.
BigInt character_value(const Partition& lambda, const Partition& mu);

/// chi^lambda_mu mod p, in [0, p), computed in residue arithmetic.
int character_value_mod(const Partition& lambda, const Partition& mu, int p);

struct TableOptions {
  int threads = 1;
  int exact_cap = 20;
  int mod_cap = 26;
};

/// Dense p(n) x p(n) character table. Rows are characters lambda, columns
/// classes mu, both in enumerate_partitions(n) order.
template <class Arith>
struct CharTable {
  using value_type = typename Arith::value_type;

  int n = 0;
  Arith arith;
  std::vector<Partition> partitions;
  std::vector<value_type> entries;  // row-major

  std::size_t size() const { return partitions.size(); }
  const value_type& operator()(std::size_t row, std::size_t col) const {
    return entries[row * size() + col];
  }
  value_type& operator()(std::size_t row, std::size_t col) { return entries[row * size() + col]; }

  /// Position of `lambda` in the index order; throws DomainError if absent.
  std::size_t index_of(const Partition& lambda) const {
    const auto it = std::lower_bound(partitions.begin(), partitions.end(), lambda, std::greater<>());
    if (it == partitions.end() || *it != lambda) {
      throw DomainError("partition " + lambda.to_string() + " is not in the table");
    }
    return static_cast<std::size_t>(it - partitions.begin());
  }
};

using ExactTable = CharTable<ExactArithmetic>;
using ModTable = CharTable<ModArithmetic>;

/// Fills `table` column by column. Columns are handed to `threads` workers;
/// each column is written into its own slots, so the result does not depend
/// on the thread count.
template <class Arith>
CharTable<Arith> build_table(int n, const Arith& arith, int threads = 1) {
  CharTable<Arith> table{n, arith, enumerate_partitions(n), {}};
  const std::size_t size = table.size();
  table.entries.assign(size * size, arith.zero());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t col = next++; col < size; col = next++) {
      ColumnEvaluator<Arith> column(table.partitions[col], arith);
      for (std::size_t row = 0; row < size; ++row) {
        table(row, col) = column.value(table.partitions[row]);
      }
    }
  };
  const int workers = std::max(1, threads);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  return table;
}

/// Throws ResourceError above options.exact_cap.
ExactTable build_exact_table(int n, const TableOptions& options = {});
/// Throws ResourceError above options.mod_cap.
ModTable build_mod_table(int n, int p, const TableOptions& options = {});

/// f^lambda = n! / prod(hook lengths).
BigInt hook_length_dimension(const Partition& lambda);

struct OrthogonalityReport {
  std::size_t pairs_checked = 0;
  std::size_t violations = 0;
};

/// Checks sum_lambda chi^lambda_mu chi^lambda_nu = z_mu [mu = nu] for every
/// column pair. Only exact tables qualify; residue tables raise DomainError.
template <class Arith>
OrthogonalityReport verify_orthogonality(const CharTable<Arith>& table) {
  if constexpr (!std::is_same_v<Arith, ExactArithmetic>) {
    throw DomainError("verify_orthogonality needs an exact table");
  } else {
    OrthogonalityReport report;
    const std::size_t size = table.size();
    for (std::size_t a = 0; a < size; ++a) {
      const BigInt z = centralizer_order(table.partitions[a]);
      for (std::size_t b = a; b < size; ++b) {
        BigInt dot = 0;
        for (std::size_t row = 0; row < size; ++row) dot += table(row, a) * table(row, b);
        const BigInt expected = a == b ? z : BigInt(0);
        ++report.pairs_checked;
        if (dot != expected) ++report.violations;
      }
    }
    return report;
  }
}

struct DensityReport {
  int n = 0;
  int p = 0;
  long long total = 0;
  long long divisible = 0;
  // Exact zero count; empty when the exact table was not built.
  std::optional<long long> zero;

  double fraction_divisible() const { return total == 0 ? 0.0 : static_cast<double>(divisible) / total; }
  double fraction_not_divisible() const { return 1.0 - fraction_divisible(); }
  std::optional<double> fraction_zero() const {
    if (!zero) return std::nullopt;
    return total == 0 ? 0.0 : static_cast<double>(*zero) / total;
  }
};

/// Divisibility counts from `mod_table`; zeros from `exact_table` if given.
DensityReport density_report(const ModTable& mod_table, const ExactTable* exact_table = nullptr);

/// Builds the residue table and, when n <= options.exact_cap, the exact one.
DensityReport density_report(int n, int p, const TableOptions& options = {});

}  // namespace symchar
