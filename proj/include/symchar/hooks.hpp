#pragma once

#include <vector>

#include "symchar/partition.hpp"

namespace symchar {

/// Strictly decreasing first-column hook lengths of a diagram padded to
/// `pad()` rows: beta_i = lambda_i + (pad - 1 - i).
class BetaSet {
 public:
  BetaSet() = default;

  /// Throws DomainError unless `betas` is strictly decreasing and >= 0.
  explicit BetaSet(std::vector<int> betas);

  const std::vector<int>& betas() const { return betas_; }
  int pad() const { return static_cast<int>(betas_.size()); }
  bool contains(int beta) const;

  friend bool operator==(const BetaSet&, const BetaSet&) = default;

 private:
  std::vector<int> betas_;
};

/// Pads to `pad` rows. Throws DomainError if pad < lambda.length().
BetaSet beta_set(const Partition& lambda, int pad);
/// Pads to lambda.length() rows.
BetaSet beta_set(const Partition& lambda);
/// Inverse of beta_set; zero rows are dropped.
Partition partition_of(const BetaSet& beta);

/// Row i holds the hook lengths of row i of the diagram, left to right.
using HookTable = std::vector<std::vector<int>>;

HookTable hook_lengths(const Partition& lambda);

/// True iff no hook length of lambda is divisible by t.
bool is_t_core(const Partition& lambda, int t);

/// Same predicate via the abacus: some beta >= t has beta - t missing.
bool is_t_core_beta(const Partition& lambda, int t);

struct StripRemoval {
  Partition result;
  int height = 0;  // rows spanned by the strip, minus one

  int sign() const { return height % 2 == 0 ? 1 : -1; }
  friend bool operator==(const StripRemoval&, const StripRemoval&) = default;
  friend auto operator<=>(const StripRemoval&, const StripRemoval&) = default;
};

/// Every removable border strip of length t, ordered by the beta that
/// moves (largest first).
std::vector<StripRemoval> remove_border_strips(const Partition& lambda, int t);

/// Number of partitions of n that are not t-cores. Requires 1 <= t.
long long count_non_t_cores(int n, int t, int cap = kDefaultEnumerationCap);

}  // namespace symchar
