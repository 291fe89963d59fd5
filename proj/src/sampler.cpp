#include "symchar/sampler.hpp"

#include <algorithm>
#include <boost/random/uniform_int_distribution.hpp>

#include "symchar/errors.hpp"

namespace symchar {

std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

namespace {

BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng) {
  boost::random::uniform_int_distribution<BigInt> dist(0, bound - 1);
  return dist(rng);
}

}  // namespace

PartitionSampler::PartitionSampler(int n, Method method) : n_(n), method_(method) {
  if (n < 0) throw DomainError("PartitionSampler: n must be >= 0");
  if (method_ == Method::automatic) {
    method_ = n <= kTableSamplerCap ? Method::bounded_table : Method::divisor_chain;
  }
  if (method_ == Method::bounded_table) {
    bounded_.resize(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
      auto& row = bounded_[static_cast<std::size_t>(m)];
      row.resize(static_cast<std::size_t>(m) + 1);
      row[0] = m == 0 ? 1 : 0;
      for (int k = 1; k <= m; ++k) {
        // b(m, k) = b(m, k - 1) + b(m - k, k)
        row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] + bounded(m - k, k);
      }
    }
  } else {
    p_ = partition_numbers(n);
    sigma_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int d = 1; d <= n; ++d) {
      for (int s = d; s <= n; s += d) sigma_[static_cast<std::size_t>(s)] += d;
    }
  }
}

const BigInt& PartitionSampler::bounded(int m, int k) const {
  const auto& row = bounded_[static_cast<std::size_t>(m)];
  return row[static_cast<std::size_t>(std::min(k, m))];
}

Partition PartitionSampler::sample(std::mt19937_64& rng) const {
  return method_ == Method::bounded_table ? sample_table(rng) : sample_divisor_chain(rng);
}

Partition PartitionSampler::sample(std::uint64_t seed, std::uint64_t index) const {
  auto rng = sample_stream(seed, index);
  return sample(rng);
}

Partition PartitionSampler::sample_table(std::mt19937_64& rng) const {
  std::vector<int> parts;
  int m = n_;
  int k = n_;
  if (m == 0) return Partition();
  BigInt rank = uniform_below(bounded(m, k), rng);
  while (m > 0) {
    k = std::min(k, m);
    const BigInt& below = bounded(m, k - 1);
    if (rank < below) {
      --k;
    } else {
      rank -= below;
      parts.push_back(k);
      m -= k;
    }
  }
  return Partition(std::move(parts));
}

Partition PartitionSampler::sample_divisor_chain(std::mt19937_64& rng) const {
  std::vector<int> parts;
  int m = n_;
  BigInt acc;
  while (m > 0) {
    // Pick s = j d with weight sigma(s) p(m - s), then d | s with weight d.
    const BigInt total = BigInt(m) * p_[static_cast<std::size_t>(m)];
    const BigInt r = uniform_below(total, rng);
    acc = 0;
    int s = 1;
    for (; s <= m; ++s) {
      acc += p_[static_cast<std::size_t>(m - s)] * sigma_[static_cast<std::size_t>(s)];
      if (r < acc) break;
    }
    // Within s, the offset r - (acc - sigma(s) p(m - s)) picks d in proportion to d.
    BigInt offset = r - (acc - p_[static_cast<std::size_t>(m - s)] * sigma_[static_cast<std::size_t>(s)]);
    offset /= p_[static_cast<std::size_t>(m - s)];
    long long cursor = offset.convert_to<long long>();
    int d = 1;
    for (; d <= s; ++d) {
      if (s % d != 0) continue;
      if (cursor < d) break;
      cursor -= d;
    }
    parts.insert(parts.end(), static_cast<std::size_t>(s / d), d);
    m -= s;
  }
  return Partition::from_unsorted(std::move(parts));
}

Partition sample_uniform_partition(int n, std::uint64_t seed, std::uint64_t index) {
  return PartitionSampler(n).sample(seed, index);
}

}  // namespace symchar
