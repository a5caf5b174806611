#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lconvex {

using BigInt = boost::multiprecision::cpp_int;

// C(a, b), zero when b < 0 or a < b.
inline BigInt binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  BigInt out = 1;
  for (long long i = 1; i <= b; ++i) {
    out *= a - b + i;
    out /= i;
  }
  return out;
}

}  // namespace lconvex
