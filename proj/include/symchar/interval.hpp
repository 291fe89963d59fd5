#pragma once

#include <mpfr.h>

#include <string>

#include "symchar/bigint.hpp"

namespace symchar {

// 170 bits carries a little over 51 significant decimal digits.
inline constexpr mpfr_prec_t kDefaultPrecision = 170;

/// Closed real interval [lo, hi] with MPFR endpoints.
///
/// Every operation rounds lo toward -inf and hi toward +inf, so the
/// result encloses the exact image of any points drawn from the operands.
/// Binary operations work at the larger of the two operand precisions.
class Interval {
 public:
  Interval() : Interval(0) {}
  Interval(long value, mpfr_prec_t prec = kDefaultPrecision);  // NOLINT(google-explicit-constructor)
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval from_bigint(const BigInt& value, mpfr_prec_t prec = kDefaultPrecision);
  /// Encloses the decimal number `text` (e.g. "1e-60").
  static Interval from_string(const char* text, mpfr_prec_t prec = kDefaultPrecision);
  static Interval from_double(double value, mpfr_prec_t prec = kDefaultPrecision);
  /// [a, b] from two doubles; requires a <= b.
  static Interval hull(double a, double b, mpfr_prec_t prec = kDefaultPrecision);
  static Interval hull(const Interval& a, const Interval& b);
  static Interval pi(mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }

  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const;

  Interval width() const;
  /// (hi - lo) / min(|lo|, |hi|), or +inf when the interval touches 0.
  double relative_width() const;

  bool contains(const Interval& inner) const;
  bool contains_value(mpfr_srcptr x) const;
  bool overlaps(const Interval& other) const;
  bool is_positive() const { return mpfr_sgn(lo_) > 0; }

  /// Certainly-less / certainly-not-less comparisons.
  bool certainly_le(const Interval& other) const { return mpfr_lessequal_p(hi_, other.lo_); }
  bool certainly_lt(const Interval& other) const { return mpfr_less_p(hi_, other.lo_); }

  /// lo rounded down, hi rounded up, `digits` significant digits each.
  std::string lo_string(int digits = 30) const;
  std::string hi_string(int digits = 30) const;

  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  friend Interval operator-(const Interval& a);

  friend Interval exp(const Interval& a);
  friend Interval expm1(const Interval& a);
  friend Interval log(const Interval& a);
  friend Interval log1p(const Interval& a);
  friend Interval sqrt(const Interval& a);
  friend Interval pow(const Interval& base, long exponent);
  friend Interval pow(const Interval& base, const Interval& exponent);

  /// Lower endpoint clamped at zero; used for sums of non-negative terms
  /// whose enclosure dipped below 0 through cancellation.
  Interval clamp_nonnegative() const;

 private:
  void init(mpfr_prec_t prec);
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace symchar
