#include <boost/multiprecision/mpfr.hpp>

#include <random>

#include "doctest.h"
#include "symchar/errors.hpp"
#include "symchar/interval.hpp"

using namespace symchar;
using boost::multiprecision::mpfr_float;

namespace {

// Reference values at a much higher precision than the intervals use.
constexpr unsigned kReferenceDigits = 200;

bool encloses(const Interval& iv, const mpfr_float& value) { return iv.contains_value(value.backend().data()); }

}  // namespace

TEST_CASE("construction") {
  const Interval three(3);
  CHECK(three.lo_double() == 3.0);
  CHECK(three.hi_double() == 3.0);
  CHECK(three.precision() == kDefaultPrecision);
  CHECK(Interval().lo_double() == 0.0);
  CHECK(Interval(5, 300).precision() == 300);

  mpfr_float::default_precision(kReferenceDigits);
  const Interval tenth = Interval::from_string("0.1");
  CHECK(encloses(tenth, mpfr_float("0.1")));
  CHECK(tenth.lo_double() <= 0.1);
  CHECK(tenth.relative_width() < 1e-45);
  CHECK_THROWS_AS(Interval::from_string("zebra"), DomainError);

  const Interval big = Interval::from_bigint(BigInt("123456789012345678901234567890"));
  CHECK(encloses(big, mpfr_float("123456789012345678901234567890")));

  const Interval h = Interval::hull(1.0, 2.0);
  CHECK(h.lo_double() == 1.0);
  CHECK(h.hi_double() == 2.0);
  CHECK_THROWS_AS(Interval::hull(2.0, 1.0), DomainError);
  CHECK(Interval::hull(Interval(1), Interval(4)).contains(Interval::hull(2.0, 3.0)));

  CHECK(encloses(Interval::pi(), boost::math::constants::pi<mpfr_float>()));
}

TEST_CASE("queries") {
  const Interval a = Interval::hull(1.0, 2.0);
  const Interval b = Interval::hull(3.0, 4.0);
  CHECK(a.certainly_lt(b));
  CHECK(a.certainly_le(b));
  CHECK_FALSE(b.certainly_le(a));
  CHECK_FALSE(a.overlaps(b));
  CHECK(a.overlaps(Interval::hull(1.5, 5.0)));
  CHECK(a.is_positive());
  CHECK_FALSE(Interval::hull(-1.0, 1.0).is_positive());
  CHECK(a.width().hi_double() == doctest::Approx(1.0));
  CHECK(a.mid_double() == doctest::Approx(1.5));
  CHECK(Interval::hull(-1.0, 1.0).relative_width() == std::numeric_limits<double>::infinity());
  CHECK(Interval::hull(-1.0, 2.0).clamp_nonnegative().lo_double() == 0.0);
  CHECK(Interval::hull(-1.0, 2.0).clamp_nonnegative().hi_double() == 2.0);
  CHECK(a.lo_string(5).rfind("1.0000", 0) == 0);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(Interval(1) / Interval::hull(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(log(Interval::hull(-1.0, 1.0)), DomainError);
  CHECK_THROWS_AS(sqrt(Interval::hull(-2.0, -1.0)), DomainError);
  CHECK_THROWS_AS(log1p(Interval(-1)), DomainError);
}

TEST_CASE("operations enclose a high-precision reference") {
  mpfr_float::default_precision(kReferenceDigits);
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> any(-50.0, 50.0);
  std::uniform_real_distribution<double> positive(1e-3, 80.0);

  for (int trial = 0; trial < 500; ++trial) {
    const double x = any(rng);
    const double y = any(rng);
    const double u = positive(rng);
    const double v = positive(rng);
    const Interval X = Interval::from_double(x);
    const Interval Y = Interval::from_double(y);
    const Interval U = Interval::from_double(u);
    const Interval V = Interval::from_double(v);
    const mpfr_float mx(x), my(y), mu(u), mv(v);

    CHECK(encloses(X + Y, mx + my));
    CHECK(encloses(X - Y, mx - my));
    CHECK(encloses(X * Y, mx * my));
    CHECK(encloses(X / U, mx / mu));
    CHECK(encloses(-X, -mx));
    CHECK(encloses(exp(Interval::from_double(x / 10)), exp(mpfr_float(x / 10))));
    CHECK(encloses(expm1(Interval::from_double(x / 1e6)), expm1(mpfr_float(x / 1e6))));
    CHECK(encloses(log(U), log(mu)));
    CHECK(encloses(log1p(Interval::from_double(u / 1e8)), log1p(mpfr_float(u / 1e8))));
    CHECK(encloses(sqrt(U), sqrt(mu)));
    CHECK(encloses(pow(U, 7), pow(mu, 7)));
    CHECK(encloses(pow(X, 3), pow(mx, 3)));
    CHECK(encloses(pow(X, -2), pow(mx, -2)));
    CHECK(encloses(pow(U, Interval::from_double(v / 20)), pow(mu, mpfr_float(v / 20))));

    // A compound expression: the enclosure must survive many roundings.
    const Interval expr = exp(-U / V) * sqrt(U + V) - log(U * V + Interval(1));
    const mpfr_float ref = exp(-mu / mv) * sqrt(mu + mv) - log(mu * mv + 1);
    CHECK(encloses(expr, ref));
    CHECK(expr.relative_width() < 1e-40);
  }
}

TEST_CASE("operations on wide intervals enclose every endpoint combination") {
  const Interval a = Interval::hull(-2.0, 3.0);
  const Interval b = Interval::hull(-5.0, 1.0);
  const Interval prod = a * b;
  CHECK(prod.lo_double() == -15.0);
  CHECK(prod.hi_double() == 10.0);
  const Interval sq = pow(a, 2);
  CHECK(sq.lo_double() == 0.0);
  CHECK(sq.hi_double() == 9.0);
  const Interval q = Interval::hull(1.0, 2.0) / Interval::hull(4.0, 8.0);
  CHECK(q.lo_double() == 0.125);
  CHECK(q.hi_double() == 0.5);
}

TEST_CASE("mixed precision takes the larger") {
  const Interval lo(1, 64);
  const Interval hi(1, 256);
  CHECK((lo + hi).precision() == 256);
  CHECK((hi * lo).precision() == 256);
}
