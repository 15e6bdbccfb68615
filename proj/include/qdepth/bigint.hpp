#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "qdepth/errors.hpp"

namespace qdepth {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

// Parses an optionally signed decimal integer of any length.
inline BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw SchemaError("empty integer literal");
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw SchemaError("invalid integer literal '" + std::string(text) + "'");
  }
  BigInt value{std::string(digits)};
  return text.front() == '-' ? BigInt(-value) : value;
}

// Parses "p/q" or "p" into a reduced rational; q must be nonzero.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw SchemaError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

inline BigInt floor_of(const Rational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt q = numerator(x) / denominator(x);  // truncates toward zero
  if (x < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

// Narrowing with an explicit failure instead of silent wraparound.
inline std::int64_t to_int64(const BigInt& x, std::string_view what) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw DomainError(std::string(what) + " does not fit in 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

/// Exact binomial coefficient C(m, t).
///
/// Returns 0 whenever t < 0, t > m or m < 0. Uses the multiplicative
/// formula over the smaller of t and m - t, so every intermediate value is
/// itself a binomial coefficient and divides exactly.
inline BigInt binomial(std::int64_t m, std::int64_t t) {
  if (t < 0 || m < 0 || t > m) return 0;
  t = std::min(t, m - t);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= t; ++i) {
    result *= m - t + i;
    result /= i;
  }
  return result;
}

}  // namespace qdepth
