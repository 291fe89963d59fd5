#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>

#include "doctest.h"
#include "fixtures/window_constants.hpp"
#include "oracles.hpp"
#include "symchar/analytics.hpp"
#include "symchar/errors.hpp"

using namespace symchar;
using boost::multiprecision::mpfr_float;

namespace {

bool encloses(const Interval& iv, const mpfr_float& value) { return iv.contains_value(value.backend().data()); }

// Plain product, far more factors than needed, at 150 digits.
mpfr_float reference_Fp(const mpfr_float& x, int p) {
  mpfr_float product = 1;
  mpfr_float power = 1;
  while (power / x < 400) {
    product /= 1 - exp(-power / x);
    power *= p;
  }
  return product;
}

std::vector<int> primes_up_to(int limit) {
  std::vector<int> out;
  for (int p = 2; p <= limit; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

// Delta summed in long double, with p~ from its recurrence and F_p by product.
long double reference_delta(long long n, int p, int r) {
  const long double x = std::sqrt(6.0L * n) / std::acos(-1.0L);
  long long pr = 1;
  for (int i = 0; i < r; ++i) pr *= p;
  const long double k_min =
      x * std::log(static_cast<long double>(n)) * (1.0L + 1.0L / (5 * p)) / (2.0L * pr);
  std::vector<long double> pt{1.0L};
  auto ptv = [&](long long l) {
    while (static_cast<long long>(pt.size()) <= l) {
      const auto m = static_cast<long long>(pt.size());
      pt.push_back(pt.back() + (m % p == 0 ? pt[static_cast<std::size_t>(m / p)] : 0.0L));
    }
    return pt[static_cast<std::size_t>(l)];
  };
  long double delta = 0.0L;
  for (auto k = static_cast<long long>(std::ceil(k_min));; ++k) {
    if (k % p == 0) continue;
    long double f = 1.0L;
    for (long double q = 1; q / x * k < 200; q *= p) f /= 1.0L - std::exp(-q * k / x);
    long double inner = 0.0L;
    for (long long l = pr;; ++l) {
      const long double term = ptv(l) * std::exp(-static_cast<long double>(l) * k / x);
      inner += term;
      if (term < 1e-30L * inner) break;
    }
    const long double contribution = inner / f;
    delta += contribution;
    if (contribution < 1e-25L * delta) break;
  }
  return delta;
}

}  // namespace

TEST_CASE("eval_Fp") {
  CHECK_THROWS_AS(eval_Fp(0.0, 2), DomainError);
  CHECK_THROWS_AS(eval_Fp(-1.0, 3), DomainError);

  const Interval small = eval_Fp(0.01, 2);
  CHECK(Interval(1).certainly_lt(small));
  CHECK(small.hi_double() < 1.001);

  mpfr_float::default_precision(150);
  for (double x : {0.01, 0.5, 1.0, 5.0, 50.0, 1234.5, 1e6}) {
    for (int p : {2, 3, 5, 97}) {
      const Interval f = eval_Fp(x, p);
      CHECK(encloses(f, reference_Fp(mpfr_float(x), p)));
      CHECK(f.relative_width() < 1e-40);
      const Interval first = Interval(1) / (Interval(1) - exp(-(Interval(1) / Interval::from_double(x))));
      CHECK_FALSE(f.certainly_lt(first));
      if (x >= 5.0 && p == 2) CHECK(first.certainly_lt(f));
    }
  }
}

TEST_CASE("product and series forms overlap") {
  for (double x : {0.5, 1.0, 5.0, 50.0}) {
    for (int p : {2, 3, 5}) {
      const Interval product = eval_Fp(x, p);
      const Interval series = eval_Fp_series(x, p);
      CHECK(product.overlaps(series));
      CHECK(series.relative_width() < 1e-40);
    }
  }
  CHECK_THROWS_AS(eval_Fp_series(0.0, 2), DomainError);
}

TEST_CASE("lemma2_window") {
  CHECK_THROWS_AS(lemma2_window(0.5, 2), DomainError);
  CHECK_THROWS_AS(lemma2_window(10.0, 4), DomainError);
  const Lemma2Window at_one = lemma2_window(1.0, 3);
  CHECK(at_one.deviation_low.overlaps(log(eval_Fp(1.0, 3))));
  CHECK(at_one.deviation_high.overlaps(log(eval_Fp(1.0, 3)) - log(Interval(3)) / Interval(8)));

  for (int i = 0; i <= 6; ++i) {
    const Lemma2Window w = lemma2_window(std::pow(10.0, i), 2);
    CHECK(w.deviation_low.lo_double() >= -fixture::kWindowC);
    CHECK(w.deviation_high.hi_double() <= fixture::kWindowC);
  }
}

TEST_CASE("lemma2 sweep reproduces the frozen window") {
  const Lemma2Sweep sweep =
      lemma2_sweep(primes_up_to(fixture::kSweepMaxPrime), fixture::kSweepDecades, fixture::kSweepPerDecade);
  CHECK(sweep.points == 25 * primes_up_to(97).size());
  CHECK(sweep.min_low == doctest::Approx(fixture::kSweepMinLow).epsilon(1e-5));
  CHECK(sweep.max_high == doctest::Approx(fixture::kSweepMaxHigh).epsilon(1e-5));
  CHECK(sweep.max_step == doctest::Approx(fixture::kSweepMaxStep).epsilon(1e-5));
  CHECK(sweep.min_low >= -fixture::kWindowC);
  CHECK(sweep.max_high <= fixture::kWindowC);
  CHECK(sweep.max_step < 1.0);
}

TEST_CASE("lemma3") {
  const Lemma3Terms t22 = lemma3_terms(2, 2);
  CHECK(t22.count == 4);
  CHECK(t22.numerator == 2);
  CHECK(t22.denominator == 1);
  CHECK(t22.holds);
  CHECK(lemma3_terms(3, 2).count == oracle::power_partitions(9, 3));
  CHECK(lemma3_terms(3, 2).count >= 3);
  CHECK(lemma3_terms(2, 3).numerator == 8);
  CHECK(lemma3_terms(2, 3).denominator == 4);
  CHECK(lemma3_check(2, 3));
  CHECK_THROWS_AS(lemma3_check(2, 1), DomainError);
  CHECK_THROWS_AS(lemma3_check(2, 0), DomainError);
  CHECK_THROWS_AS(lemma3_check(4, 2), DomainError);
  CHECK_THROWS_AS(lemma3_check(2, 14), ResourceError);
  CHECK_NOTHROW(lemma3_check(2, 13));
  CHECK_THROWS_AS(lemma3_check(101, 2), ResourceError);
  for (int p : primes_up_to(100))
    for (int r = 2; std::pow(p, r) <= 10000; ++r) CHECK(lemma3_check(p, r));
}

TEST_CASE("saddle_weight") {
  CHECK_THROWS_AS(saddle_weight(0), DomainError);
  mpfr_float::default_precision(150);
  const mpfr_float pi = boost::math::constants::pi<mpfr_float>();
  const SaddleWeight six = saddle_weight(6);
  CHECK(encloses(six.x, 6 / pi));
  CHECK(six.x.mid_double() == doctest::Approx(1.9099).epsilon(1e-4));
  CHECK(encloses(saddle_weight(1).q, exp(-pi / sqrt(mpfr_float(6)))));
  for (long long n = 1; n < 100; ++n) {
    const SaddleWeight a = saddle_weight(n);
    const SaddleWeight b = saddle_weight(n + 1);
    CHECK(a.q.certainly_lt(b.q));
    CHECK(a.q.is_positive());
    CHECK(b.q.certainly_lt(Interval(1)));
  }
}

TEST_CASE("partition_gf_bound dominates p(n)") {
  for (long long n = 1; n <= 60; ++n) {
    const Interval bound = partition_gf_bound(n, saddle_weight(n).q);
    CHECK(Interval::from_bigint(count_partitions(static_cast<int>(n))).certainly_le(bound));
  }
  CHECK_THROWS_AS(partition_gf_bound(5, Interval(1)), DomainError);
}

TEST_CASE("restricted_upper_bound") {
  const RestrictedCountSpec example{4, 2, 1, {1, 3}};
  const Interval b = restricted_upper_bound(example);
  CHECK(Interval(1).certainly_le(b));

  for (int n = 1; n <= 20; ++n) {
    const Interval none = restricted_upper_bound({n, 2, 1, {}});
    CHECK(Interval::from_bigint(count_partitions(n)).certainly_le(none));
    // Each factor for k in K is at most 1, and grows with r.
    const Interval r1 = restricted_upper_bound({n, 2, 1, {1, 5}});
    const Interval r2 = restricted_upper_bound({n, 2, 2, {1, 5}});
    const Interval r3 = restricted_upper_bound({n, 2, 3, {1, 5}});
    CHECK(r1.certainly_le(r2));
    CHECK(r2.certainly_le(r3));
    CHECK(r3.certainly_le(none));
  }

  const std::vector<int> pool{1, 3, 5, 7};
  for (int p : {2, 3}) {
    for (int r : {1, 2}) {
      for (int mask = 0; mask < 16; ++mask) {
        std::set<int> ks;
        for (int bit = 0; bit < 4; ++bit)
          if ((mask >> bit) & 1 && pool[static_cast<std::size_t>(bit)] % p != 0) ks.insert(pool[static_cast<std::size_t>(bit)]);
        for (int n = 1; n <= 18; ++n) {
          const RestrictedCountSpec spec{n, p, r, ks};
          const Interval bound = restricted_upper_bound(spec);
          CHECK(bound.relative_width() < 1e-10);
          CHECK(Interval::from_bigint(count_restricted_bruteforce(spec)).certainly_le(bound));
        }
      }
    }
  }
  CHECK_THROWS_AS(restricted_upper_bound({0, 2, 1, {1}}), DomainError);
  CHECK_THROWS_AS(restricted_upper_bound({5, 2, 1, {2}}), DomainError);
}

TEST_CASE("prop_two_params") {
  const PropTwoParams a = prop_two_params(100000000, 2);
  CHECK(a.r == 1);
  CHECK(a.x.mid_double() == doctest::Approx(std::sqrt(6e8) / M_PI));
  const double k = std::sqrt(6e8) * std::log(1e8) * 1.1 / (2 * M_PI * 2);
  CHECK(a.k_min.mid_double() == doctest::Approx(k));
  CHECK(prop_two_params(3000000000LL, 2).r == 2);
  CHECK(prop_two_params(1000, 3).r == 0);
  CHECK_THROWS_AS(prop_two_params(1, 2), DomainError);
  CHECK_THROWS_AS(prop_two_params(1000, 6), DomainError);
  const PropTwoParams forced = prop_two_params_fixed_r(100000, 3, 2);
  CHECK(forced.r == 2);
  CHECK(forced.k_min.mid_double() == doctest::Approx(std::sqrt(6e5) * std::log(1e5) * (1 + 1.0 / 15) / (2 * M_PI * 9)));
  CHECK_THROWS_AS(prop_two_params_fixed_r(100000, 3, -1), DomainError);
}

TEST_CASE("delta_eval") {
  CHECK_THROWS_AS(delta_eval(100000000, 2), DomainError);
  CHECK_THROWS_AS(delta_eval(prop_two_params_fixed_r(100000, 2, 1)), DomainError);

  for (const auto& [n, p] : std::vector<std::pair<long long, int>>{{20000, 2}, {100000, 2}, {300000, 3}, {1000000, 5}}) {
    const DeltaReport report = delta_eval(prop_two_params_fixed_r(n, p, 2));
    CHECK(report.delta.is_positive());
    CHECK(report.delta.relative_width() < 1e-10);
    CHECK(report.lower_bound.certainly_le(report.delta));
    CHECK(report.window_sum.is_positive());
    CHECK(report.last_k >= report.first_k);
    CHECK(report.first_k == static_cast<long long>(std::ceil(report.params.k_min.mid_double())));
    const long double ref = reference_delta(n, p, 2);
    CHECK(std::abs(report.delta.mid_double() - static_cast<double>(ref)) <= 1e-9 * static_cast<double>(ref));
  }
}
