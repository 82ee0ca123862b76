#pragma once

#include <random>
#include <vector>

#include "realsurf/poly.hpp"

namespace realsurf::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed1234ULL);
  return engine;
}

inline long uniform_int(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

// Random rational with |numerator| <= span * den and denominator in [1, max_den].
inline Rational random_rational(long span, long max_den) {
  long den = uniform_int(1, max_den);
  long num = uniform_int(-span * den, span * den);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::vector<Rational> distinct_rationals(std::size_t count, long span, long max_den) {
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational q = random_rational(span, max_den);
    bool fresh = true;
    for (const auto& x : out) fresh = fresh && x != q;
    if (fresh) out.push_back(q);
  }
  return out;
}

}  // namespace realsurf::testing
