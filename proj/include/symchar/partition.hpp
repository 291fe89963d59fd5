#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symchar/bigint.hpp"
#include "symchar/interval.hpp"

namespace symchar {

// Default cap on enumerate_partitions; p(40) = 37338.
inline constexpr int kDefaultEnumerationCap = 40;

/// A partition of n: a non-increasing sequence of positive parts.
///
/// The part list is canonical. The multiplicity view is derived on demand.
class Partition {
 public:
  Partition() = default;

  /// Takes ownership of `parts`, which must already be non-increasing and
  /// positive. Throws DomainError otherwise.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts `parts` into non-increasing order; rejects any part < 1.
  static Partition from_unsorted(std::vector<int> parts);

  /// Parses a comma-separated list such as "3,3,2,1,1" (auto-sorted).
  /// The empty string is the empty partition.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  // part size -> multiplicity
  std::map<int, int> multiplicities() const;
  int max_multiplicity() const;

  Partition conjugate() const;

  /// Comma-joined parts, e.g. "4,2,1"; "" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// All partitions of n in lexicographically decreasing order.
/// Throws ResourceError when n exceeds `cap`.
std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultEnumerationCap);

/// p(n) by Euler's pentagonal-number recurrence.
BigInt count_partitions(int n);

/// p(0), ..., p(n_max).
std::vector<BigInt> partition_numbers(int n_max);

/// Leading Hardy-Ramanujan term exp(pi sqrt(2n/3)) / (4 n sqrt 3), enclosed.
/// Throws DomainError for n = 0.
Interval hr_asymptotic(int n, mpfr_prec_t prec = kDefaultPrecision);

/// Number of partitions of n with every part <= k.
BigInt count_partitions_bounded(int n, int k);

/// z_mu = prod_i i^{m_i} m_i!, the order of the centralizer of a
/// permutation with cycle type mu.
BigInt centralizer_order(const Partition& mu);

/// Base-p digits of a natural number, least significant first, with no
/// trailing zeros (so 0 has no digits).
struct DigitVector {
  std::vector<int> digits;
  int base = 2;

  BigInt value() const;
  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

DigitVector base_p_digits(long long value, int p);

/// Number of partitions of j into powers of p (1, p, p^2, ...), with the
/// empty partition counted for j = 0.
BigInt count_power_partitions(int j, int p);

/// count_power_partitions(0..j_max, p) in one pass, using
/// pt(n) = pt(n-1) + [p | n] pt(n/p).
std::vector<BigInt> power_partition_numbers(int j_max, int p);

bool is_prime(long long n);

/// p-adic valuation split: returns (k, j) with part = k * p^j and p not
/// dividing k.
std::pair<long long, int> split_p_power(long long part, int p);

}  // namespace symchar

template <>
struct std::hash<symchar::Partition> : symchar::PartitionHash {};
