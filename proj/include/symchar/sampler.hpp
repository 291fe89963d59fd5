#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "symchar/bigint.hpp"
#include "symchar/partition.hpp"

namespace symchar {

/// Per-sample random stream: stream `index` of `seed`. Streams for distinct
/// indices are independent, so sample i is the same no matter which thread
/// draws it.
std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index);

/// Exactly uniform sampler over the partitions of a fixed n.
///
/// Up to `kTableSamplerCap` the sampler walks the descending-part chain over
/// the bounded-count table b(m, k) = #partitions of m with parts <= k: one
/// uniform rank in [0, p(n)) is drawn, and the largest remaining part is
/// fixed by comparing the rank against b(m, k - 1). Above the cap the
/// triangular table no longer fits in memory, and the sampler switches to
/// the divisor-sum chain m p(m) = sum_s sigma(s) p(m - s), which needs only
/// p(0..n). Both chains are exact.
class PartitionSampler {
 public:
  static constexpr int kTableSamplerCap = 2000;

  enum class Method { automatic, bounded_table, divisor_chain };

  explicit PartitionSampler(int n, Method method = Method::automatic);

  int n() const { return n_; }
  Method method() const { return method_; }

  Partition sample(std::mt19937_64& rng) const;

  /// sample(sample_stream(seed, index)).
  Partition sample(std::uint64_t seed, std::uint64_t index) const;

 private:
  const BigInt& bounded(int m, int k) const;
  Partition sample_table(std::mt19937_64& rng) const;
  Partition sample_divisor_chain(std::mt19937_64& rng) const;

  int n_;
  Method method_;
  // Row m holds b(m, 0..m).
  std::vector<std::vector<BigInt>> bounded_;
  std::vector<BigInt> p_;
  std::vector<long long> sigma_;
};

/// One uniform partition of n drawn from stream (seed, index).
Partition sample_uniform_partition(int n, std::uint64_t seed, std::uint64_t index = 0);

}  // namespace symchar
