#include "symchar/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "symchar/sampler.hpp"

namespace symchar {

namespace {

Partition from_multiplicities(const std::map<int, int>& mult) {
  std::vector<int> parts;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
  }
  return Partition(std::move(parts));
}

void require_prime(int p, const char* where) {
  if (!is_prime(p)) throw DomainError(std::string(where) + ": p must be prime");
}

}  // namespace

Partition merge_step(const Partition& mu, int p, int m) {
  require_prime(p, "merge_step");
  auto mult = mu.multiplicities();
  auto it = mult.find(m);
  if (it == mult.end() || it->second < p) {
    throw DomainError("merge_step: fewer than " + std::to_string(p) + " parts equal to " + std::to_string(m));
  }
  if ((it->second -= p) == 0) mult.erase(it);
  ++mult[p * m];
  return from_multiplicities(mult);
}

Partition tilde_reduce_digits(const Partition& mu, int p) {
  require_prime(p, "tilde_reduce_digits");
  // k -> l, where the parts k p^j of mu sum to k l
  std::map<long long, long long> groups;
  for (int part : mu.parts()) {
    const auto [k, j] = split_p_power(part, p);
    groups[k] += part / k;
  }
  std::vector<int> parts;
  for (const auto& [k, l] : groups) {
    const DigitVector digits = base_p_digits(l, p);
    long long size = k;
    for (int digit : digits.digits) {
      parts.insert(parts.end(), static_cast<std::size_t>(digit), static_cast<int>(size));
      size *= p;
    }
  }
  return Partition::from_unsorted(std::move(parts));
}

ReductionTrace tilde_reduce(const Partition& mu, int p, TraceMode mode) {
  ReductionTrace trace{mu, {}, tilde_reduce_digits(mu, p)};
  if (mode == TraceMode::final_only) return trace;

  auto mult = mu.multiplicities();
  for (;;) {
    const auto it = std::find_if(mult.begin(), mult.end(), [p](const auto& e) { return e.second >= p; });
    if (it == mult.end()) break;
    const int m = it->first;
    if ((it->second -= p) == 0) mult.erase(it);
    ++mult[p * m];
    trace.steps.push_back({m, p, from_multiplicities(mult)});
  }
  return trace;
}

CongruenceReport verify_congruence(const ModTable& table) {
  const int p = static_cast<int>(table.arith.modulus());
  CongruenceReport report{table.n, p, 0, 0};
  const std::size_t size = table.size();
  for (std::size_t col = 0; col < size; ++col) {
    const std::size_t reduced = table.index_of(tilde_reduce_digits(table.partitions[col], p));
    for (std::size_t row = 0; row < size; ++row) {
      ++report.pairs_checked;
      if (table(row, col) != table(row, reduced)) ++report.violations;
    }
  }
  return report;
}

CongruenceReport verify_congruence(int n, int p, const TableOptions& options) {
  return verify_congruence(build_mod_table(n, p, options));
}

void RestrictedCountSpec::validate() const {
  require_prime(p, "RestrictedCountSpec");
  if (n < 0) throw DomainError("RestrictedCountSpec: n must be >= 0");
  if (r < 0) throw DomainError("RestrictedCountSpec: r must be >= 0");
  if (r > 0 && std::log(static_cast<double>(p)) * r > 40.0) {
    throw DomainError("RestrictedCountSpec: p^r too large");
  }
  for (int k : ks) {
    if (k < 1) throw DomainError("RestrictedCountSpec: k must be positive");
    if (std::gcd(k, p) != 1) {
      throw DomainError("RestrictedCountSpec: k = " + std::to_string(k) + " is not coprime to p");
    }
  }
}

long long RestrictedCountSpec::p_to_r() const {
  long long v = 1;
  for (int i = 0; i < r; ++i) v *= p;
  return v;
}

BigInt count_restricted_bruteforce(const RestrictedCountSpec& spec, int cap) {
  spec.validate();
  const long long limit = spec.p_to_r();
  BigInt count = 0;
  for (const Partition& mu : enumerate_partitions(spec.n, cap)) {
    std::map<long long, long long> groups;
    for (int part : mu.parts()) {
      const auto [k, j] = split_p_power(part, spec.p);
      groups[k] += part / k;
    }
    const bool ok = std::all_of(spec.ks.begin(), spec.ks.end(), [&](int k) {
      const auto it = groups.find(k);
      return it == groups.end() || it->second < limit;
    });
    if (ok) ++count;
  }
  return count;
}

BigInt count_restricted_gf(const RestrictedCountSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const auto degree = static_cast<std::size_t>(n);
  std::vector<BigInt> poly(degree + 1, 0);
  poly[0] = 1;

  const long long limit = spec.p_to_r();
  const std::vector<BigInt> pt = power_partition_numbers(
      static_cast<int>(std::min<long long>(limit, static_cast<long long>(n) + 1)), spec.p);

  for (int k = 1; k <= n; ++k) {
    if (k % spec.p == 0) continue;
    if (spec.ks.contains(k)) {
      // Multiply by sum_{l < p^r, k l <= n} pt(l) q^{k l}.
      std::vector<BigInt> next(degree + 1, 0);
      for (std::size_t a = 0; a <= degree; ++a) {
        if (poly[a] == 0) continue;
        for (long long l = 0; l < limit && a + static_cast<std::size_t>(k * l) <= degree; ++l) {
          next[a + static_cast<std::size_t>(k * l)] += poly[a] * pt[static_cast<std::size_t>(l)];
        }
      }
      poly = std::move(next);
    } else {
      // Multiply by (1 - q^s)^{-1} for s = k p^j <= n.
      for (long long s = k; s <= n; s *= spec.p) {
        for (std::size_t a = static_cast<std::size_t>(s); a <= degree; ++a) {
          poly[a] += poly[a - static_cast<std::size_t>(s)];
        }
      }
    }
  }
  return poly[degree];
}

double largest_part_threshold(int n, double factor) {
  return std::sqrt(6.0 * n) * std::log(static_cast<double>(n)) / (2.0 * std::numbers::pi) * factor;
}

std::pair<double, double> wilson_interval(std::size_t k, std::size_t n) {
  if (n == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double nn = static_cast<double>(n);
  const double phat = static_cast<double>(k) / nn;
  const double denom = 1.0 + z * z / nn;
  const double centre = (phat + z * z / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z * z / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

TailReport tail_experiment(int n, int p, std::size_t samples, std::uint64_t seed, int threads,
                           std::optional<double> factor) {
  require_prime(p, "tail_experiment");
  if (n < 1) throw DomainError("tail_experiment: n must be >= 1");
  TailReport report;
  report.n = n;
  report.p = p;
  report.seed = seed;
  report.samples = samples;
  report.threshold = largest_part_threshold(n, factor.value_or(1.0 + 1.0 / (5.0 * p)));

  const PartitionSampler sampler(n);
  std::vector<unsigned char> below(samples, 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < samples; i = next++) {
      const Partition reduced = tilde_reduce_digits(sampler.sample(seed, i), p);
      below[i] = reduced.largest() < report.threshold ? 1 : 0;
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  report.below = static_cast<std::size_t>(std::count(below.begin(), below.end(), 1));
  report.fraction = samples == 0 ? 0.0 : static_cast<double>(report.below) / static_cast<double>(samples);
  std::tie(report.wilson_lo, report.wilson_hi) = wilson_interval(report.below, samples);
  return report;
}

}  // namespace symchar
