#include "symchar/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "symchar/errors.hpp"

namespace symchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be non-increasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw DomainError("cannot parse partition part '" + std::string(token) + "'");
    }
    if (value < 1) throw DomainError("partition parts must be >= 1");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return from_unsorted(std::move(parts));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int part : parts_) ++m[part];
  return m;
}

int Partition::max_multiplicity() const {
  int best = 0;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    best = std::max(best, static_cast<int>(j - i));
    i = j;
  }
  return best;
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(largest()), 0);
  for (int part : parts_) {
    for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part);
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    enumerate_into(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int cap) {
  if (n < 0) throw DomainError("enumerate_partitions: n must be >= 0");
  if (n > cap) {
    throw ResourceError("enumerate_partitions: n = " + std::to_string(n) +
                        " exceeds the enumeration cap " + std::to_string(cap));
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(n, n, prefix, out);
  return out;
}

std::vector<BigInt> partition_numbers(int n_max) {
  if (n_max < 0) throw DomainError("partition_numbers: n must be >= 0");
  std::vector<BigInt> p(static_cast<std::size_t>(n_max) + 1);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const int g2 = k * (3 * k + 1) / 2;
      BigInt term = p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) term += p[static_cast<std::size_t>(n - g2)];
      if (k % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return p;
}

BigInt count_partitions(int n) { return partition_numbers(n).back(); }

Interval hr_asymptotic(int n, mpfr_prec_t prec) {
  if (n < 1) throw DomainError("hr_asymptotic: n must be >= 1");
  const Interval nn(n, prec);
  const Interval exponent = Interval::pi(prec) * sqrt(Interval(2, prec) * nn / Interval(3, prec));
  return exp(exponent) / (Interval(4, prec) * nn * sqrt(Interval(3, prec)));
}

BigInt count_partitions_bounded(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("count_partitions_bounded: arguments must be >= 0");
  std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= std::min(k, n); ++part) {
    for (int m = part; m <= n; ++m) {
      ways[static_cast<std::size_t>(m)] += ways[static_cast<std::size_t>(m - part)];
    }
  }
  return ways.back();
}

BigInt centralizer_order(const Partition& mu) {
  BigInt z = 1;
  for (const auto& [part, mult] : mu.multiplicities()) {
    for (int i = 0; i < mult; ++i) z *= part;
    z *= factorial(mult);
  }
  return z;
}

BigInt DigitVector::value() const {
  BigInt v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * base + *it;
  return v;
}

DigitVector base_p_digits(long long value, int p) {
  if (p < 2) throw DomainError("base_p_digits: base must be >= 2");
  if (value < 0) throw DomainError("base_p_digits: value must be >= 0");
  DigitVector out;
  out.base = p;
  while (value > 0) {
    out.digits.push_back(static_cast<int>(value % p));
    value /= p;
  }
  return out;
}

std::vector<BigInt> power_partition_numbers(int j_max, int p) {
  if (p < 2) throw DomainError("power_partition_numbers: p must be >= 2");
  if (j_max < 0) throw DomainError("power_partition_numbers: j must be >= 0");
  std::vector<BigInt> pt(static_cast<std::size_t>(j_max) + 1);
  pt[0] = 1;
  for (int n = 1; n <= j_max; ++n) {
    pt[static_cast<std::size_t>(n)] = pt[static_cast<std::size_t>(n - 1)];
    if (n % p == 0) pt[static_cast<std::size_t>(n)] += pt[static_cast<std::size_t>(n / p)];
  }
  return pt;
}

BigInt count_power_partitions(int j, int p) { return power_partition_numbers(j, p).back(); }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<long long, int> split_p_power(long long part, int p) {
  if (part < 1) throw DomainError("split_p_power: part must be positive");
  int j = 0;
  while (part % p == 0) {
    part /= p;
    ++j;
  }
  return {part, j};
}

}  // namespace symchar
