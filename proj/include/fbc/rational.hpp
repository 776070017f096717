#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace fbc {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or just "p" when q == 1.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p/q" or an integer. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace fbc
