#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "doctest.h"
#include "oracles.hpp"
#include "symchar/errors.hpp"
#include "symchar/partition.hpp"

using namespace symchar;
using boost::multiprecision::mpfr_float;

TEST_CASE("Partition validation and parsing") {
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, 0}), DomainError);
  CHECK(Partition::parse("1,3,3,2,1") == Partition{3, 3, 2, 1, 1});
  CHECK(Partition::parse("").empty());
  CHECK_THROWS_AS(Partition::parse("3,0"), DomainError);
  CHECK_THROWS_AS(Partition::parse("3,-1"), DomainError);
  CHECK_THROWS(Partition::parse("3,x"));

  const Partition lambda{4, 2, 1};
  CHECK(lambda.n() == 7);
  CHECK(lambda.length() == 3);
  CHECK(lambda.largest() == 4);
  CHECK(lambda.to_string() == "4,2,1");
  CHECK(lambda.conjugate() == Partition{3, 2, 1, 1});
  CHECK(Partition{}.n() == 0);
  CHECK(Partition{3, 3, 1}.max_multiplicity() == 2);
}

TEST_CASE("enumerate_partitions") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition{1}});
  const std::vector<Partition> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(enumerate_partitions(4) == four);
  CHECK_THROWS_AS(enumerate_partitions(41), ResourceError);
  CHECK_NOTHROW(enumerate_partitions(12, 12));
  CHECK_THROWS_AS(enumerate_partitions(13, 12), ResourceError);
}

TEST_CASE("enumeration matches the recursive oracle and the count for n <= 25") {
  for (int n = 0; n <= 25; ++n) {
    const auto parts = enumerate_partitions(n);
    const auto expected = oracle::partitions(n);
    REQUIRE(parts.size() == expected.size());
    for (std::size_t i = 0; i < parts.size(); ++i) CHECK(parts[i].vec() == expected[i]);
    CHECK(count_partitions(n) == BigInt(static_cast<long long>(parts.size())));
  }
}

TEST_CASE("count_partitions") {
  CHECK(count_partitions(0) == 1);
  CHECK(count_partitions(5) == 7);
  for (int n = 0; n <= 60; ++n) CHECK(count_partitions(n) == oracle::partition_count(n));
  const auto table = partition_numbers(100);
  CHECK(table.size() == 101);
  CHECK(table[100] == count_partitions(100));
}

TEST_CASE("count_partitions_bounded") {
  CHECK(count_partitions_bounded(4, 2) == 3);
  CHECK(count_partitions_bounded(5, 0) == 0);
  CHECK(count_partitions_bounded(0, 0) == 1);
  CHECK(count_partitions_bounded(0, 7) == 1);
  for (int n = 0; n <= 20; ++n) {
    CHECK(count_partitions_bounded(n, n) == count_partitions(n));
    CHECK(count_partitions_bounded(n, n + 5) == count_partitions(n));
    // The difference of consecutive bounds counts partitions with largest part exactly k.
    const auto all = oracle::partitions(n);
    for (int k = 1; k <= n; ++k) {
      long long exact = 0;
      for (const auto& parts : all)
        if (parts.front() == k) ++exact;
      const BigInt diff = count_partitions_bounded(n, k) - count_partitions_bounded(n, k - 1);
      CHECK(diff >= 0);
      CHECK(diff == exact);
    }
  }
}

TEST_CASE("hr_asymptotic") {
  CHECK_THROWS_AS(hr_asymptotic(0), DomainError);

  mpfr_float::default_precision(60);
  const mpfr_float at_one = exp(2 * boost::math::constants::pi<mpfr_float>() / sqrt(mpfr_float(6))) /
                            (4 * sqrt(mpfr_float(3)));
  const Interval hr1 = hr_asymptotic(1);
  CHECK(hr1.contains_value(at_one.backend().data()));
  CHECK(hr1.relative_width() < 1e-30);

  auto ratio = [](int n) {
    return (Interval::from_bigint(count_partitions(n)) / hr_asymptotic(n)).mid_double();
  };
  const double r100 = ratio(100);
  const double r400 = ratio(400);
  CHECK(r100 > 0.5);
  CHECK(r100 < 2.0);
  CHECK(std::abs(r400 - 1.0) < std::abs(r100 - 1.0));
}

TEST_CASE("centralizer_order") {
  CHECK(centralizer_order(Partition{1, 1, 1}) == 6);
  CHECK(centralizer_order(Partition{3}) == 3);
  CHECK(centralizer_order(Partition{2, 1, 1}) == 4);
  CHECK(centralizer_order(Partition{}) == 1);
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : enumerate_partitions(n))
      CHECK(centralizer_order(mu) == oracle::centralizer_by_commuting(mu.vec()));
}

TEST_CASE("class equation for n <= 14") {
  for (int n = 0; n <= 14; ++n) {
    const BigInt total = factorial(n);
    BigInt sum = 0;
    for (const auto& mu : enumerate_partitions(n)) {
      const BigInt z = centralizer_order(mu);
      CHECK(total % z == 0);
      sum += total / z;
    }
    CHECK(sum == total);
  }
}

TEST_CASE("base_p_digits") {
  CHECK(base_p_digits(4, 2).digits == std::vector<int>{0, 0, 1});
  CHECK(base_p_digits(0, 5).digits.empty());
  CHECK(base_p_digits(7, 3).digits == std::vector<int>{1, 2});
  CHECK_THROWS_AS(base_p_digits(4, 1), DomainError);
  CHECK_THROWS_AS(base_p_digits(4, 0), DomainError);
  CHECK_THROWS_AS(base_p_digits(-1, 2), DomainError);
}

TEST_CASE("digit round trip for l <= 10^6") {
  for (int p : {2, 3, 5, 7}) {
    for (long long value = 0; value <= 1000000; ++value) {
      const DigitVector d = base_p_digits(value, p);
      long long back = 0;
      long long weight = 1;
      bool digits_ok = true;
      for (int digit : d.digits) {
        digits_ok = digits_ok && digit >= 0 && digit < p;
        back += digit * weight;
        weight *= p;
      }
      const bool no_trailing_zero = d.digits.empty() || d.digits.back() != 0;
      if (back != value || !digits_ok || !no_trailing_zero) {
        FAIL("digit round trip failed at " << value << " base " << p);
      }
    }
    CHECK(base_p_digits(123456, p).value() == 123456);
  }
}

TEST_CASE("count_power_partitions") {
  CHECK(count_power_partitions(0, 2) == 1);
  CHECK(count_power_partitions(0, 7) == 1);
  CHECK(count_power_partitions(4, 2) == 4);
  CHECK(count_power_partitions(9, 3) == oracle::power_partitions(9, 3));
  for (int p : {2, 3, 5, 7})
    for (int j = 0; j <= 60; ++j) CHECK(count_power_partitions(j, p) == oracle::power_partitions(j, p));
}

TEST_CASE("power partition counts are non-decreasing up to 10^4") {
  for (int p : {2, 3, 5, 7}) {
    const auto values = power_partition_numbers(10000, p);
    REQUIRE(values.size() == 10001);
    bool monotone = true;
    for (std::size_t j = 0; j + 1 < values.size(); ++j) monotone = monotone && values[j] <= values[j + 1];
    CHECK(monotone);
    CHECK(values[81] == count_power_partitions(81, p));
  }
}

TEST_CASE("primes and p-adic split") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(split_p_power(24, 2) == std::pair<long long, int>{3, 3});
  CHECK(split_p_power(7, 2) == std::pair<long long, int>{7, 0});
  CHECK(split_p_power(81, 3) == std::pair<long long, int>{1, 4});
}
