#include "symchar/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "symchar/errors.hpp"

namespace symchar {

namespace {

// [1, 1 + 2e^{-200}]: the product of all F_p factors with p^j/x > 200.
Interval fp_tail_factor(mpfr_prec_t prec) {
  const Interval upper = Interval(1, prec) + Interval(2, prec) * exp(Interval(-200, prec));
  return Interval::hull(Interval(1, prec), upper);
}

// [1 - 2e^{-200}, 1]: the reciprocal counterpart.
Interval fp_tail_factor_inverse(mpfr_prec_t prec) {
  const Interval lower = Interval(1, prec) - Interval(2, prec) * exp(Interval(-200, prec));
  return Interval::hull(lower, Interval(1, prec));
}

void require_prime(int p, const char* where) {
  if (!is_prime(p)) throw DomainError(std::string(where) + ": p must be prime");
}

template <class Fn>
Interval refine(Fn&& evaluate, mpfr_prec_t prec) {
  Interval value = evaluate(prec);
  for (int i = 0; i < kMaxRefinements && value.relative_width() > kRefineWidth; ++i) {
    prec *= 2;
    value = evaluate(prec);
  }
  return value;
}

long long int_pow(long long base, int exponent) {
  long long v = 1;
  for (int i = 0; i < exponent; ++i) v *= base;
  return v;
}

// Power-partition counts as intervals, grown on demand.
class PowerPartitionCache {
 public:
  PowerPartitionCache(int p, mpfr_prec_t prec) : p_(p), prec_(prec) { exact_.push_back(1); }

  const Interval& operator[](long long j) {
    while (static_cast<long long>(exact_.size()) <= j) {
      const auto n = static_cast<long long>(exact_.size());
      BigInt next = exact_.back();
      if (n % p_ == 0) next += exact_[static_cast<std::size_t>(n / p_)];
      exact_.push_back(std::move(next));
    }
    while (static_cast<long long>(enclosed_.size()) <= j) {
      enclosed_.push_back(Interval::from_bigint(exact_[enclosed_.size()], prec_));
    }
    return enclosed_[static_cast<std::size_t>(j)];
  }

  const BigInt& exact(long long j) {
    (void)(*this)[j];
    return exact_[static_cast<std::size_t>(j)];
  }

 private:
  int p_;
  mpfr_prec_t prec_;
  std::vector<BigInt> exact_;
  std::vector<Interval> enclosed_;
};

// prod_{j >= 0} (1 - w^{p^j}) = 1 / F_p(x/k) for w = e^{-k/x}.
Interval inverse_fp_from_weight(const Interval& w, int p) {
  const mpfr_prec_t prec = w.precision();
  const Interval cutoff = exp(Interval(-200, prec));
  Interval product(1, prec);
  Interval power = w;
  while (!power.certainly_lt(cutoff)) {
    product *= Interval(1, prec) - power;
    power = pow(power, static_cast<long>(p));
  }
  return product * fp_tail_factor_inverse(prec);
}

}  // namespace

Interval eval_Fp(const Interval& x, int p) {
  if (p < 2) throw DomainError("eval_Fp: p must be >= 2");
  if (!x.is_positive()) throw DomainError("eval_Fp: x must be > 0");
  const mpfr_prec_t prec = x.precision();
  const Interval limit(200, prec);
  Interval product(1, prec);
  Interval power(1, prec);  // p^j
  for (;;) {
    const Interval y = power / x;
    if (limit.certainly_lt(y)) break;
    product /= -expm1(-y);
    power *= Interval(p, prec);
  }
  return product * fp_tail_factor(prec);
}

Interval eval_Fp(double x, int p, mpfr_prec_t prec) {
  if (!(x > 0)) throw DomainError("eval_Fp: x must be > 0");
  return eval_Fp(Interval::from_double(x, prec), p);
}

Interval eval_Fp_series(double x, int p, mpfr_prec_t prec) {
  if (p < 2) throw DomainError("eval_Fp_series: p must be >= 2");
  if (!(x > 0)) throw DomainError("eval_Fp_series: x must be > 0");
  const Interval xi = Interval::from_double(x, prec);
  const Interval c = Interval::pi(prec) * sqrt(Interval(2, prec) / Interval(3, prec));
  const double c_hi = c.hi_double();
  const auto monotone_from = static_cast<long long>(std::ceil(c_hi * x * c_hi * x));
  const Interval cutoff = Interval::from_string("1e-60", prec);
  constexpr long long kMaxTerms = 4'000'000;

  PowerPartitionCache pt(p, prec);
  const Interval z = exp(-(Interval(1, prec) / xi));
  Interval power(1, prec);
  Interval sum(0, prec);
  for (long long j = 0;; ++j) {
    if (j > kMaxTerms) throw ResourceError("eval_Fp_series: x too large for the series form");
    sum += pt[j] * power;
    power *= z;
    const long long next = j + 1;
    if (next < monotone_from) continue;
    // For i >= next the envelope exp(c sqrt(i) - i/x) shrinks by at least
    // e^{-1/(2x)} per step, so the tail is at most envelope(next) / (1 - e^{-1/(2x)}).
    const Interval nn(next, prec);
    const Interval envelope = exp(c * sqrt(nn) - nn / xi);
    const Interval tail = envelope / (-expm1(-(Interval(1, prec) / (Interval(2, prec) * xi))));
    if (tail.certainly_lt(cutoff * sum)) {
      return sum + Interval::hull(Interval(0, prec), tail);
    }
  }
}

Lemma2Window lemma2_window(double x, int p, mpfr_prec_t prec) {
  if (!(x >= 1.0)) throw DomainError("lemma2_window: x must be >= 1");
  require_prime(p, "lemma2_window");
  const Interval xi = Interval::from_double(x, prec);
  const Interval log_x = log(xi);
  const Interval log_p = log(Interval(p, prec));
  const Interval main = log_x * log_x / (Interval(2, prec) * log_p) + log_x / Interval(2, prec);
  Lemma2Window out{log(eval_Fp(xi, p)), {}, {}};
  out.deviation_low = out.log_F - main;
  out.deviation_high = out.deviation_low - log_p / Interval(8, prec);
  return out;
}

Lemma2Sweep lemma2_sweep(const std::vector<int>& primes, int decades, int per_decade) {
  Lemma2Sweep sweep;
  sweep.min_low = std::numeric_limits<double>::infinity();
  sweep.max_high = -std::numeric_limits<double>::infinity();
  for (int p : primes) {
    double prev_low = 0.0;
    double prev_high = 0.0;
    for (int i = 0; i <= decades * per_decade; ++i) {
      const double x = std::pow(10.0, static_cast<double>(i) / per_decade);
      const Lemma2Window w = lemma2_window(x, p);
      sweep.min_low = std::min(sweep.min_low, w.deviation_low.lo_double());
      sweep.max_high = std::max(sweep.max_high, w.deviation_high.hi_double());
      const double low = w.deviation_low.mid_double();
      const double high = w.deviation_high.mid_double();
      if (i > 0) {
        sweep.max_step = std::max({sweep.max_step, std::abs(low - prev_low), std::abs(high - prev_high)});
      }
      prev_low = low;
      prev_high = high;
      ++sweep.points;
    }
  }
  return sweep;
}

Lemma3Terms lemma3_terms(int p, int r) {
  require_prime(p, "lemma3_check");
  if (r < 2) throw DomainError("lemma3_check: r must be >= 2");
  if (std::log(static_cast<double>(p)) * r > std::log(static_cast<double>(kLemma3Cap)) + 1e-9 ||
      int_pow(p, r) > kLemma3Cap) {
    throw ResourceError("lemma3_check: p^r exceeds " + std::to_string(kLemma3Cap));
  }
  Lemma3Terms terms;
  terms.count = count_power_partitions(static_cast<int>(int_pow(p, r)), p);
  terms.numerator = 1;
  for (int i = 0; i < r * (r - 1) / 2; ++i) terms.numerator *= p;
  terms.denominator = 1;
  for (int i = 0; i < r - 1; ++i) terms.denominator *= (r - 1);
  terms.holds = terms.count * terms.denominator >= terms.numerator;
  return terms;
}

bool lemma3_check(int p, int r) { return lemma3_terms(p, r).holds; }

SaddleWeight saddle_weight(long long n, mpfr_prec_t prec) {
  if (n < 1) throw DomainError("saddle_weight: n must be >= 1");
  const Interval x = sqrt(Interval(6, prec) * Interval::from_bigint(BigInt(n), prec)) / Interval::pi(prec);
  return {x, exp(-(Interval(1, prec) / x))};
}

Interval partition_gf_bound(long long n, const Interval& q) {
  const mpfr_prec_t prec = q.precision();
  if (!q.is_positive() || !q.certainly_lt(Interval(1, prec))) {
    throw DomainError("partition_gf_bound: q must lie in (0, 1)");
  }
  const Interval one(1, prec);
  const double q_hi = q.hi_double();
  // q^{M+1} / (1 - q) below 1e-60
  const auto terms = static_cast<long long>(
      std::ceil((std::log(1e-60) + std::log1p(-q_hi)) / std::log(q_hi))) + 1;

  Interval product = pow(q, -static_cast<long>(n));
  Interval power = one;
  for (long long m = 1; m <= terms; ++m) {
    power *= q;
    product /= one - power;
  }
  const Interval next = power * q;  // q^{M+1}
  const Interval remainder = next / ((one - q) * (one - next));
  return product * Interval::hull(one, exp(remainder));
}

Interval restricted_upper_bound(const RestrictedCountSpec& spec, mpfr_prec_t prec) {
  spec.validate();
  if (spec.n < 1) throw DomainError("restricted_upper_bound: n must be >= 1");
  const long long limit = spec.p_to_r();
  if (limit > 1'000'000) throw ResourceError("restricted_upper_bound: p^r too large");

  return refine(
      [&](mpfr_prec_t working) {
        const SaddleWeight sw = saddle_weight(spec.n, working);
        Interval bound = partition_gf_bound(spec.n, sw.q);
        PowerPartitionCache pt(spec.p, working);
        for (int k : spec.ks) {
          const Interval qk = pow(sw.q, static_cast<long>(k));
          Interval partial(0, working);
          Interval power(1, working);
          for (long long l = 0; l < limit; ++l) {
            partial += pt[l] * power;
            power *= qk;
          }
          bound *= partial / eval_Fp(sw.x / Interval(k, working), spec.p);
        }
        return bound;
      },
      prec);
}

namespace {

PropTwoParams make_params(long long n, int p, std::optional<int> r, mpfr_prec_t prec) {
  require_prime(p, "prop_two_params");
  if (n < 2) throw DomainError("prop_two_params: n must be >= 2");
  PropTwoParams params;
  params.n = n;
  params.p = p;
  const Interval nn = Interval::from_bigint(BigInt(n), prec);
  const Interval log_n = log(nn);
  if (r) {
    if (*r < 0) throw DomainError("prop_two_params: r must be >= 0");
    params.r = *r;
  } else {
    const Interval e = exp(Interval(1, prec));
    const Interval ratio = log_n / (Interval(2 * p, prec) * e);
    const double r_lo = std::floor(ratio.lo_double());
    if (r_lo != std::floor(ratio.hi_double())) {
      throw DomainError("prop_two_params: log n / (2ep) is too close to an integer to floor");
    }
    params.r = static_cast<int>(r_lo);
  }
  params.x = sqrt(Interval(6, prec) * nn) / Interval::pi(prec);
  const Interval p_to_r = Interval::from_bigint(BigInt(int_pow(p, params.r)), prec);
  const Interval boost_factor = Interval(1, prec) + Interval(1, prec) / Interval(5 * p, prec);
  params.k_min = sqrt(Interval(6, prec) * nn) * log_n * boost_factor /
                 (Interval(2, prec) * Interval::pi(prec) * p_to_r);
  return params;
}

}  // namespace

PropTwoParams prop_two_params(long long n, int p, mpfr_prec_t prec) {
  return make_params(n, p, std::nullopt, prec);
}

PropTwoParams prop_two_params_fixed_r(long long n, int p, int r, mpfr_prec_t prec) {
  return make_params(n, p, r, prec);
}

DeltaReport delta_eval(const PropTwoParams& params, double relative_cutoff) {
  if (params.r < 2) {
    throw DomainError("delta_eval: r = " + std::to_string(params.r) + " < 2 (needs log n >= 4ep)");
  }
  const int p = params.p;
  const mpfr_prec_t prec = params.x.precision();
  const Interval one(1, prec);
  const Interval zero(0, prec);
  const Interval& x = params.x;
  const long long pr = int_pow(p, params.r);
  const Interval pr_i(pr, prec);
  const Interval inv_x = one / x;
  const Interval cutoff = Interval::from_double(relative_cutoff, prec);
  const Interval inner_cutoff = cutoff * Interval::from_string("1e-5", prec);
  const Interval quarter = one / Interval(4, prec);
  constexpr long long kMaxOuterTerms = 200'000'000;

  DeltaReport report;
  report.params = params;
  report.first_k = static_cast<long long>(std::ceil(params.k_min.mid_double()));
  PowerPartitionCache pt(p, prec);

  const Interval step = exp(-inv_x);
  const Interval rho = exp(-(pr_i * inv_x));
  Interval w = exp(-(Interval::from_bigint(BigInt(report.first_k), prec) * inv_x));
  Interval delta(0, prec);
  for (long long k = report.first_k;; ++k, w *= step) {
    if (k - report.first_k > kMaxOuterTerms) throw ResourceError("delta_eval: outer sum did not converge");
    if (k % p == 0) continue;
    const Interval inv_f = inverse_fp_from_weight(w, p);
    Interval term(0, prec);   // sum_{l >= p^r} pt(l) w^l / F
    Interval inner(0, prec);  // sum_{l >= p^r} pt(l) w^l
    if (w.certainly_lt(quarter)) {
      // pt(l + 1) <= 2 pt(l), so the terms past l shrink by at least 2w.
      const Interval ratio = Interval(2, prec) * w;
      Interval power = pow(w, static_cast<long>(pr));
      Interval sum(0, prec);
      for (long long l = pr;; ++l, power *= w) {
        const Interval current = pt[l] * power;
        sum += current;
        const Interval tail = current * ratio / (one - ratio);
        if (tail.certainly_lt(inner_cutoff * sum)) {
          inner = sum + Interval::hull(zero, tail);
          break;
        }
      }
      term = inner * inv_f;
    } else {
      // 1 - F^{-1} sum_{l < p^r} pt(l) w^l
      Interval head(0, prec);
      Interval power(1, prec);
      for (long long l = 0; l < pr; ++l, power *= w) head += pt[l] * power;
      term = (one - head * inv_f).clamp_nonnegative();
      inner = term / inv_f;
    }
    delta += term;
    if (delta.is_positive() && term.certainly_lt(cutoff * delta)) {
      // Each later inner sum is at most rho times the previous one and F >= 1.
      const Interval tail = inner * rho / (one - rho);
      delta += Interval::hull(zero, tail);
      report.last_k = k;
      break;
    }
  }
  report.delta = delta;

  const Interval log_n = log(Interval::from_bigint(BigInt(params.n), prec));
  const auto window_end = static_cast<long long>(std::floor((params.k_min + x / pr_i).mid_double()));
  Interval window(0, prec);
  for (long long k = report.first_k; k <= window_end; ++k) {
    if (k % p == 0) continue;
    const Interval ki = Interval::from_bigint(BigInt(k), prec);
    window += exp(-(pr_i * ki * inv_x)) * x / ki;
  }
  report.window_sum = window;
  const Interval f_bound = eval_Fp(Interval(2, prec) * pr_i / log_n, p);
  report.lower_bound = Interval::from_bigint(pt.exact(pr), prec) / f_bound * window;

  const Interval nn = Interval::from_bigint(BigInt(params.n), prec);
  report.window_floor =
      one / (Interval(20, prec) * pow(nn, one / Interval(10 * p, prec)) * log_n);
  report.growth_reference = pow(nn, one / Interval(12 * p, prec));
  return report;
}

DeltaReport delta_eval(long long n, int p, double relative_cutoff) {
  mpfr_prec_t prec = kDefaultPrecision;
  DeltaReport report = delta_eval(prop_two_params(n, p, prec), relative_cutoff);
  for (int i = 0; i < kMaxRefinements && report.delta.relative_width() > kRefineWidth; ++i) {
    prec *= 2;
    report = delta_eval(prop_two_params(n, p, prec), relative_cutoff);
  }
  return report;
}

}  // namespace symchar
