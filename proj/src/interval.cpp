#include "symchar/interval.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "symchar/errors.hpp"

namespace symchar {

namespace {

mpfr_prec_t joint_precision(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

std::string format_endpoint(mpfr_srcptr x, int digits, char rounding) {
  char* buf = nullptr;
  const char fmt[] = {'%', '.', '*', 'R', rounding, 'e', '\0'};
  mpfr_asprintf(&buf, fmt, std::max(digits - 1, 0), x);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace

void Interval::init(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long value, mpfr_prec_t prec) {
  init(prec);
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
  init(other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  init(other.precision());
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_bigint(const BigInt& value, mpfr_prec_t prec) {
  Interval out(0, prec);
  mpfr_set_z(out.lo_, value.backend().data(), MPFR_RNDD);
  mpfr_set_z(out.hi_, value.backend().data(), MPFR_RNDU);
  return out;
}

Interval Interval::from_string(const char* text, mpfr_prec_t prec) {
  Interval out(0, prec);
  char* end = nullptr;
  mpfr_strtofr(out.lo_, text, &end, 10, MPFR_RNDD);
  if (end == text || *end != '\0' || mpfr_nan_p(out.lo_)) {
    throw DomainError(std::string("not a number: ") + text);
  }
  mpfr_strtofr(out.hi_, text, nullptr, 10, MPFR_RNDU);
  return out;
}

Interval Interval::from_double(double value, mpfr_prec_t prec) { return hull(value, value, prec); }

Interval Interval::hull(double a, double b, mpfr_prec_t prec) {
  if (!(a <= b)) throw DomainError("Interval::hull: require a <= b");
  Interval out(0, prec);
  mpfr_set_d(out.lo_, a, MPFR_RNDD);
  mpfr_set_d(out.hi_, b, MPFR_RNDU);
  return out;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval out(0, joint_precision(a, b));
  mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval out(0, prec);
  mpfr_const_pi(out.lo_, MPFR_RNDD);
  mpfr_const_pi(out.hi_, MPFR_RNDU);
  return out;
}

double Interval::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, precision() + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  const double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

Interval Interval::width() const {
  Interval out(0, precision());
  mpfr_sub(out.lo_, hi_, lo_, MPFR_RNDD);
  mpfr_sub(out.hi_, hi_, lo_, MPFR_RNDU);
  return out;
}

double Interval::relative_width() const {
  if (mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0) {
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
  mpfr_t w, m;
  mpfr_init2(w, precision());
  mpfr_init2(m, precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  if (mpfr_cmpabs(lo_, hi_) < 0) {
    mpfr_abs(m, lo_, MPFR_RNDD);
  } else {
    mpfr_abs(m, hi_, MPFR_RNDD);
  }
  mpfr_div(w, w, m, MPFR_RNDU);
  const double r = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  mpfr_clear(m);
  return r;
}

bool Interval::contains(const Interval& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_lessequal_p(inner.hi_, hi_);
}

bool Interval::contains_value(mpfr_srcptr x) const {
  return mpfr_lessequal_p(lo_, x) && mpfr_lessequal_p(x, hi_);
}

bool Interval::overlaps(const Interval& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

std::string Interval::lo_string(int digits) const { return format_endpoint(lo_, digits, 'D'); }
std::string Interval::hi_string(int digits) const { return format_endpoint(hi_, digits, 'U'); }

Interval& Interval::operator+=(const Interval& rhs) {
  const mpfr_prec_t prec = joint_precision(*this, rhs);
  mpfr_prec_round(lo_, prec, MPFR_RNDD);
  mpfr_prec_round(hi_, prec, MPFR_RNDU);
  mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
  const mpfr_prec_t prec = joint_precision(*this, rhs);
  mpfr_prec_round(lo_, prec, MPFR_RNDD);
  mpfr_prec_round(hi_, prec, MPFR_RNDU);
  mpfr_sub(lo_, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, rhs.lo_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator*=(const Interval& rhs) {
  const mpfr_prec_t prec = joint_precision(*this, rhs);
  Interval out(0, prec);
  if (is_positive() && rhs.is_positive()) {
    mpfr_mul(out.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_mul(out.hi_, hi_, rhs.hi_, MPFR_RNDU);
  } else {
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_set_inf(out.lo_, 1);
    mpfr_set_inf(out.hi_, -1);
    for (mpfr_srcptr a : {static_cast<mpfr_srcptr>(lo_), static_cast<mpfr_srcptr>(hi_)}) {
      for (mpfr_srcptr b : {rhs.lo_, rhs.hi_}) {
        mpfr_mul(t, a, b, MPFR_RNDD);
        mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a, b, MPFR_RNDU);
        mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
      }
    }
    mpfr_clear(t);
  }
  return *this = std::move(out);
}

Interval& Interval::operator/=(const Interval& rhs) {
  if (mpfr_sgn(rhs.lo_) <= 0 && mpfr_sgn(rhs.hi_) >= 0) {
    throw DomainError("interval division by an interval containing zero");
  }
  const mpfr_prec_t prec = joint_precision(*this, rhs);
  Interval out(0, prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_set_inf(out.lo_, 1);
  mpfr_set_inf(out.hi_, -1);
  for (mpfr_srcptr a : {static_cast<mpfr_srcptr>(lo_), static_cast<mpfr_srcptr>(hi_)}) {
    for (mpfr_srcptr b : {rhs.lo_, rhs.hi_}) {
      mpfr_div(t, a, b, MPFR_RNDD);
      mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
      mpfr_div(t, a, b, MPFR_RNDU);
      mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
    }
  }
  mpfr_clear(t);
  return *this = std::move(out);
}

Interval operator-(const Interval& a) {
  Interval out(0, a.precision());
  mpfr_neg(out.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, a.lo_, MPFR_RNDU);
  return out;
}

Interval exp(const Interval& a) {
  Interval out(0, a.precision());
  mpfr_exp(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

Interval expm1(const Interval& a) {
  Interval out(0, a.precision());
  mpfr_expm1(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_expm1(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

Interval log(const Interval& a) {
  if (mpfr_sgn(a.lo_) <= 0) throw DomainError("log of a non-positive interval");
  Interval out(0, a.precision());
  mpfr_log(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

Interval log1p(const Interval& a) {
  if (mpfr_cmp_si(a.lo_, -1) <= 0) throw DomainError("log1p of an interval reaching -1");
  Interval out(0, a.precision());
  mpfr_log1p(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_log1p(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo_) < 0) throw DomainError("sqrt of a negative interval");
  Interval out(0, a.precision());
  mpfr_sqrt(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

Interval pow(const Interval& base, long exponent) {
  if (exponent == 0) return Interval(1, base.precision());
  if (exponent < 0) return Interval(1, base.precision()) / pow(base, -exponent);
  Interval out(0, base.precision());
  if (mpfr_sgn(base.lo_) >= 0 || exponent % 2 == 1) {
    mpfr_pow_si(out.lo_, base.lo_, exponent, MPFR_RNDD);
    mpfr_pow_si(out.hi_, base.hi_, exponent, MPFR_RNDU);
  } else if (mpfr_sgn(base.hi_) <= 0) {
    mpfr_pow_si(out.lo_, base.hi_, exponent, MPFR_RNDD);
    mpfr_pow_si(out.hi_, base.lo_, exponent, MPFR_RNDU);
  } else {
    // Even power of an interval straddling zero.
    mpfr_t other;
    mpfr_init2(other, base.precision());
    mpfr_pow_si(out.hi_, base.lo_, exponent, MPFR_RNDU);
    mpfr_pow_si(other, base.hi_, exponent, MPFR_RNDU);
    mpfr_max(out.hi_, out.hi_, other, MPFR_RNDU);
    mpfr_clear(other);
  }
  return out;
}

Interval pow(const Interval& base, const Interval& exponent) {
  return exp(exponent * log(base));
}

Interval Interval::clamp_nonnegative() const {
  Interval out(*this);
  if (mpfr_sgn(out.lo_) < 0) mpfr_set_zero(out.lo_, 1);
  if (mpfr_sgn(out.hi_) < 0) throw DomainError("clamp_nonnegative: interval is entirely negative");
  return out;
}

}  // namespace symchar
