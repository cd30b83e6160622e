#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace lgc {

// Exact probabilities and distances. Denominators stay at the scale of
// vertex counts times sample counts, well inside 64 bits.
// Boost 1.74 recurses forever on `rational == int` under C++20 rewritten
// comparisons; always compare against Rational(...) or numerator().
using Rational = boost::rational<std::int64_t>;

inline double ToDouble(const Rational& x) {
  return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

inline std::string ToString(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

}  // namespace lgc
