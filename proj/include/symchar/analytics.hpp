#pragma once

#include <string>
#include <vector>

#include "symchar/interval.hpp"
#include "symchar/reduction.hpp"

namespace symchar {

// Enclosures whose relative width exceeds this are recomputed at twice the
// precision, up to kMaxRefinements times.
inline constexpr double kRefineWidth = 1e-10;
inline constexpr int kMaxRefinements = 4;

/// F_p(x) = prod_{j >= 0} (1 - e^{-p^j/x})^{-1}.
///
/// Factors are multiplied out until p^j/x > 200; the remaining factors
/// multiply to a value in [1, 1 + 2e^{-200}], which is folded into the
/// upper endpoint. Throws DomainError unless x > 0.
Interval eval_Fp(const Interval& x, int p);
Interval eval_Fp(double x, int p, mpfr_prec_t prec = kDefaultPrecision);

/// The same quantity from the series sum_j pt(j) e^{-j/x}, where pt counts
/// partitions into powers of p. The tail beyond the last summed term is
/// bounded with pt(j) <= p(j) < exp(pi sqrt(2j/3)). Intended as a check on
/// eval_Fp for moderate x (the number of terms grows like x^2).
Interval eval_Fp_series(double x, int p, mpfr_prec_t prec = kDefaultPrecision);

struct Lemma2Window {
  Interval log_F;
  /// log F_p(x) - [(log x)^2 / (2 log p) + (log x) / 2]
  Interval deviation_low;
  /// log F_p(x) - [(log x)^2 / (2 log p) + (log x) / 2 + (log p) / 8]
  Interval deviation_high;
};

/// Throws DomainError for x < 1.
Lemma2Window lemma2_window(double x, int p, mpfr_prec_t prec = kDefaultPrecision);

struct Lemma2Sweep {
  double min_low = 0.0;   // smallest deviation_low seen
  double max_high = 0.0;  // largest deviation_high seen
  double max_step = 0.0;  // largest change of either deviation between adjacent x
  std::size_t points = 0;
};

/// Evaluates the window at x = 10^(i / per_decade), i = 0..decades*per_decade,
/// for each p.
Lemma2Sweep lemma2_sweep(const std::vector<int>& primes, int decades, int per_decade);

// Largest p^r accepted by lemma3_check.
inline constexpr long long kLemma3Cap = 10000;

struct Lemma3Terms {
  BigInt count;        // pt(p^r)
  BigInt numerator;    // p^{r(r-1)/2}
  BigInt denominator;  // (r-1)^{r-1}
  bool holds = false;  // count * denominator >= numerator
};

/// pt(p^r) >= p^{r(r-1)/2} / (r-1)^{r-1}, compared in exact integers.
/// Throws DomainError for r < 2, ResourceError when p^r > kLemma3Cap.
Lemma3Terms lemma3_terms(int p, int r);
bool lemma3_check(int p, int r);

struct SaddleWeight {
  Interval x;  // sqrt(6n) / pi
  Interval q;  // e^{-1/x}
};

/// Throws DomainError for n = 0.
SaddleWeight saddle_weight(long long n, mpfr_prec_t prec = kDefaultPrecision);

/// q^{-n} prod_{m >= 1} (1 - q^m)^{-1}, the product truncated once q^m is
/// below 1e-60 with the remainder bounded through
/// -log(1 - u) <= u / (1 - u).
Interval partition_gf_bound(long long n, const Interval& q);

/// Upper bound on count_restricted_bruteforce(spec) obtained by evaluating
/// the generating function at the saddle weight:
///   q^{-n} prod (1 - q^m)^{-1} * prod_{k in ks} [sum_{l < p^r} pt(l) q^{kl}] / F_p(x / k).
Interval restricted_upper_bound(const RestrictedCountSpec& spec, mpfr_prec_t prec = kDefaultPrecision);

struct PropTwoParams {
  long long n = 0;
  int p = 2;
  int r = 0;      // floor(log n / (2 e p))
  Interval x;     // sqrt(6n) / pi
  Interval k_min; // sqrt(6n) log n (1 + 1/(5p)) / (2 pi p^r)
};

/// Throws DomainError for a non-prime p or n < 2.
PropTwoParams prop_two_params(long long n, int p, mpfr_prec_t prec = kDefaultPrecision);
/// Same thresholds with the digit count r fixed by the caller, so the delta
/// machinery can be exercised at sizes where the formula gives r < 2.
PropTwoParams prop_two_params_fixed_r(long long n, int p, int r, mpfr_prec_t prec = kDefaultPrecision);

struct DeltaReport {
  PropTwoParams params;
  /// sum_{k >= K, (k,p)=1} sum_{l >= p^r} pt(l) e^{-lk/x} / F_p(x/k)
  Interval delta;
  /// pt(p^r) / F_p(2 p^r / log n) * sum_{K <= k <= K + x/p^r, (k,p)=1} e^{-p^r k/x} x/k
  Interval lower_bound;
  /// The k-window sum alone, and its closed-form floor (20 n^{1/(10p)} log n)^{-1}.
  Interval window_sum;
  Interval window_floor;
  /// n^{1/(12p)}, for comparison with delta only.
  Interval growth_reference;
  long long first_k = 0;
  long long last_k = 0;  // last k summed before the certified tail
};

/// Direct summation of delta with certified truncation, together with the
/// chain of lower bounds. Throws DomainError when r < 2.
DeltaReport delta_eval(const PropTwoParams& params, double relative_cutoff = 1e-60);
DeltaReport delta_eval(long long n, int p, double relative_cutoff = 1e-60);

}  // namespace symchar
