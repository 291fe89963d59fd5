#include "symchar/hooks.hpp"

#include <algorithm>

#include "symchar/errors.hpp"

namespace symchar {

BetaSet::BetaSet(std::vector<int> betas) : betas_(std::move(betas)) {
  for (std::size_t i = 0; i < betas_.size(); ++i) {
    if (betas_[i] < 0) throw DomainError("beta numbers must be >= 0");
    if (i > 0 && betas_[i] >= betas_[i - 1]) throw DomainError("beta numbers must be strictly decreasing");
  }
}

bool BetaSet::contains(int beta) const {
  return std::binary_search(betas_.begin(), betas_.end(), beta, std::greater<>());
}

BetaSet beta_set(const Partition& lambda, int pad) {
  if (pad < lambda.length()) throw DomainError("beta_set: pad smaller than the number of parts");
  std::vector<int> betas(static_cast<std::size_t>(pad));
  for (int i = 0; i < pad; ++i) {
    const int part = i < lambda.length() ? lambda[static_cast<std::size_t>(i)] : 0;
    betas[static_cast<std::size_t>(i)] = part + (pad - 1 - i);
  }
  return BetaSet(std::move(betas));
}

BetaSet beta_set(const Partition& lambda) { return beta_set(lambda, lambda.length()); }

Partition partition_of(const BetaSet& beta) {
  std::vector<int> parts;
  const int pad = beta.pad();
  for (int i = 0; i < pad; ++i) {
    const int part = beta.betas()[static_cast<std::size_t>(i)] - (pad - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

HookTable hook_lengths(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  HookTable hooks(static_cast<std::size_t>(lambda.length()));
  for (int i = 0; i < lambda.length(); ++i) {
    const int row = lambda[static_cast<std::size_t>(i)];
    auto& out = hooks[static_cast<std::size_t>(i)];
    out.reserve(static_cast<std::size_t>(row));
    for (int j = 0; j < row; ++j) {
      const int arm = row - j - 1;
      const int leg = conj[static_cast<std::size_t>(j)] - i - 1;
      out.push_back(arm + leg + 1);
    }
  }
  return hooks;
}

bool is_t_core(const Partition& lambda, int t) {
  if (t < 1) throw DomainError("is_t_core: t must be >= 1");
  for (const auto& row : hook_lengths(lambda)) {
    for (int h : row) {
      if (h % t == 0) return false;
    }
  }
  return true;
}

bool is_t_core_beta(const Partition& lambda, int t) {
  if (t < 1) throw DomainError("is_t_core_beta: t must be >= 1");
  const BetaSet beta = beta_set(lambda);
  for (int b : beta.betas()) {
    if (b >= t && !beta.contains(b - t)) return false;
  }
  return true;
}

std::vector<StripRemoval> remove_border_strips(const Partition& lambda, int t) {
  if (t < 1) throw DomainError("remove_border_strips: t must be >= 1");
  std::vector<StripRemoval> out;
  const BetaSet beta = beta_set(lambda);
  const auto& b = beta.betas();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int moved = b[i] - t;
    if (moved < 0 || beta.contains(moved)) continue;
    // Betas are decreasing, so those strictly between moved and b[i]
    // sit at indices i+1 .. first index with value < moved.
    std::size_t j = i + 1;
    while (j < b.size() && b[j] > moved) ++j;
    const int height = static_cast<int>(j - i - 1);

    std::vector<int> next(b.begin(), b.end());
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
    next.insert(next.begin() + static_cast<std::ptrdiff_t>(j - 1), moved);
    out.push_back({partition_of(BetaSet(std::move(next))), height});
  }
  return out;
}

long long count_non_t_cores(int n, int t, int cap) {
  if (t < 1) throw DomainError("count_non_t_cores: t must be >= 1");
  long long count = 0;
  for (const Partition& lambda : enumerate_partitions(n, cap)) {
    if (!is_t_core(lambda, t)) ++count;
  }
  return count;
}

}  // namespace symchar
