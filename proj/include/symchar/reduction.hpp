#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "symchar/bigint.hpp"
#include "symchar/characters.hpp"
#include "symchar/partition.hpp"

namespace symchar {

/// Replaces p parts equal to m by one part p*m.
/// Throws DomainError if mu has fewer than p parts equal to m.
Partition merge_step(const Partition& mu, int p, int m);

struct MergeStep {
  int part = 0;     // the merged size m
  int count = 0;    // always p
  Partition result;

  friend bool operator==(const MergeStep&, const MergeStep&) = default;
};

struct ReductionTrace {
  Partition start;
  std::vector<MergeStep> steps;
  Partition final;
};

enum class TraceMode { final_only, with_steps };

/// The fixpoint of merge_step: every multiplicity ends up <= p - 1.
///
/// `final` always comes from the digit construction. With
/// TraceMode::with_steps the merges are replayed smallest part first and
/// recorded; the replay ends at the same partition.
ReductionTrace tilde_reduce(const Partition& mu, int p, TraceMode mode = TraceMode::with_steps);

/// Groups parts as k p^j with p not dividing k. If a group sums to k*l, the
/// output has digit_j(l) parts of size k p^j, digit_j being the base-p digits.
Partition tilde_reduce_digits(const Partition& mu, int p);

struct CongruenceReport {
  int n = 0;
  int p = 0;
  std::size_t pairs_checked = 0;
  std::size_t violations = 0;
};

/// Checks chi^lambda_mu == chi^lambda_{tilde mu} (mod p) over all lambda, mu of n.
CongruenceReport verify_congruence(int n, int p, const TableOptions& options = {});
/// Same check on an already built residue table.
CongruenceReport verify_congruence(const ModTable& table);

/// Partitions of n whose parts of the form k p^j, for each k in ks, sum to
/// k*l with l < p^r.
struct RestrictedCountSpec {
  int n = 0;
  int p = 2;
  int r = 1;
  std::set<int> ks;

  /// Throws DomainError on a non-prime p, negative n or r, or a k that is
  /// not a positive integer coprime to p.
  void validate() const;
  long long p_to_r() const;
};

BigInt count_restricted_bruteforce(const RestrictedCountSpec& spec, int cap = kDefaultEnumerationCap);

/// Coefficient of q^n in
///   prod_{(k,p)=1, k not in ks} prod_j (1 - q^{k p^j})^{-1}
///     * prod_{k in ks} sum_{l < p^r} pt(l) q^{k l},
/// with pt the power-partition counts, in exact truncated arithmetic.
BigInt count_restricted_gf(const RestrictedCountSpec& spec);

struct TailReport {
  int n = 0;
  int p = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t below = 0;  // samples whose reduced largest part is below the threshold
  double threshold = 0.0;
  double fraction = 0.0;
  double wilson_lo = 0.0;
  double wilson_hi = 0.0;
};

/// sqrt(6n) log(n) / (2 pi) * factor.
double largest_part_threshold(int n, double factor);

/// Samples uniform partitions mu of n and counts how often the largest
/// part of tilde_reduce(mu, p) falls below
/// largest_part_threshold(n, factor). The default factor is 1 + 1/(5p).
TailReport tail_experiment(int n, int p, std::size_t samples, std::uint64_t seed, int threads = 1,
                           std::optional<double> factor = std::nullopt);

/// 95% Wilson score interval for k successes out of n trials.
std::pair<double, double> wilson_interval(std::size_t k, std::size_t n);

}  // namespace symchar
