#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace symchar {

using BigInt = boost::multiprecision::mpz_int;

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace symchar
