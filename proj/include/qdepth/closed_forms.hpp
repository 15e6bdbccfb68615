#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "qdepth/bigint.hpp"
#include "qdepth/errors.hpp"

// Closed-form predictions for qdepth of a*r^j, a*j + b, a*j^2 + b and the
// general a*j^n + b upper bound, all evaluated in exact rational arithmetic.

namespace qdepth {

struct PiecewisePrediction {
  std::int64_t value = 0;
  std::string branch;  // interval of alpha = a/b that fired
  bool exact = false;  // the value is known to equal qdepth, not just bound it

  bool operator==(const PiecewisePrediction&) const = default;
};

namespace detail {

inline BigInt pow2(std::int64_t e) { return BigInt(1) << static_cast<unsigned>(e); }

inline void require_positive(const BigInt& a, const BigInt& b) {
  if (a <= 0 || b <= 0) throw DomainError("a and b must be positive integers");
}

inline void require_degree(std::int64_t n) {
  if (n < 1 || n > 62) throw DomainError("degree n must lie in [1, 62]");
}

inline PiecewisePrediction below_ratio_floor(const Rational& alpha, std::string branch) {
  return {to_int64(floor_of(alpha), "floor(alpha)") + 1, std::move(branch), true};
}

}  // namespace detail

inline BigInt geometric_qdepth(const BigInt& scale, const BigInt& ratio) {
  detail::require_positive(scale, ratio);
  return ratio;
}

inline PiecewisePrediction arithmetic_qdepth(const BigInt& a, const BigInt& b) {
  detail::require_positive(a, b);
  if (a < b) return {1, "alpha in (0,1)", true};
  if (a < 2 * b) return {2, "alpha in [1,2)", true};
  if (a < 3 * b) return {3, "alpha in [2,3)", true};
  if (a <= 4 * b) return {4, "alpha in [3,4]", true};
  return {3, "alpha in (4,inf)", true};
}

inline PiecewisePrediction quadratic_qdepth(const BigInt& a, const BigInt& b) {
  detail::require_positive(a, b);
  const Rational alpha(a, b);
  if (alpha < 7) return detail::below_ratio_floor(alpha, "alpha in (0,7)");
  if (alpha <= Rational(22, 3)) return {8, "alpha in [7,22/3]", true};
  if (alpha <= 8) return {7, "alpha in (22/3,8]", true};
  if (alpha <= 11) return {6, "alpha in (8,11]", true};
  return {5, "alpha in (11,inf)", true};
}

/// The rational threshold lambda_{2^n + 1 - m}: the alpha at which the
/// smaller root of x -> beta_2^x(h) for h = a*j^n + b equals 2^n + m.
inline Rational lambda_threshold(std::int64_t n, std::int64_t m) {
  detail::require_degree(n);
  const BigInt p = detail::pow2(n);
  if (m < 2 || BigInt(m) > p) throw DomainError("lambda threshold needs 2 <= m <= 2^n");
  const BigInt num = BigInt(m) * m + BigInt(m) * (2 * p - 3) + p * p - 3 * p + 4;
  return Rational(num, BigInt(2 * m - 2));
}

/// Compares x against alpha_1 = 2^n + sqrt(4^n - 2^n + 2) - 1/2, the largest
/// alpha for which beta_2^x(h) has no real root. Exact: with
/// y = x + 1/2 - 2^n, x <= alpha_1 iff y <= 0 or y^2 <= 4^n - 2^n + 2.
inline std::strong_ordering compare_with_alpha1(std::int64_t n, const Rational& x) {
  detail::require_degree(n);
  const BigInt p = detail::pow2(n);
  const Rational y = x + Rational(1, 2) - Rational(p);
  if (y <= 0) return std::strong_ordering::less;
  const Rational radicand(p * p - p + 2);
  const Rational y2 = y * y;
  if (y2 < radicand) return std::strong_ordering::less;
  if (y2 > radicand) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// beta_2^d(h) for h = a*j^n + b, as the quadratic
/// f(d) = (b/2) d^2 - (a + 3b/2) d + (2^n + 1) a + 2b.
inline BigInt beta2_closed_form(std::int64_t n, const BigInt& a, const BigInt& b, std::int64_t d) {
  detail::require_degree(n);
  const Rational dd(d);
  const Rational f = Rational(b, 2) * dd * dd - (Rational(a) + Rational(3 * b, 2)) * dd +
                     Rational((detail::pow2(n) + 1) * a + 2 * b);
  if (boost::multiprecision::denominator(f) != 1) throw std::logic_error("beta_2 closed form is not integral");
  return boost::multiprecision::numerator(f);
}

// Discriminant a^2 - (2^(n+1) - 1) a b - (7/4) b^2 of f.
inline Rational beta2_discriminant(std::int64_t n, const BigInt& a, const BigInt& b) {
  detail::require_degree(n);
  return Rational(a * a - (2 * detail::pow2(n) - 1) * a * b) - Rational(7 * b * b, 4);
}

/// Upper bound eq(h) on qdepth(a*j^n + b), as a function of alpha = a/b:
///   floor(alpha) + 1             for alpha < 2^(n+1) - 1,
///   2^n + m                      for the largest m in [2, 2^n] with
///                                alpha <= lambda_{2^n + 1 - m},
///   2^n + 1                      for alpha > lambda_{2^n - 1}.
/// The value is exact for n <= 2 and whenever c(h) = floor(alpha) + 1 <= 4.
inline PiecewisePrediction eq_bound(std::int64_t n, const Rational& alpha) {
  detail::require_degree(n);
  if (alpha <= 0) throw DomainError("alpha must be positive");
  const BigInt p = detail::pow2(n);
  const bool small_c = floor_of(alpha) + 1 <= 4;
  const bool exact = n <= 2 || small_c;
  const BigInt start = 2 * p - 1;
  if (alpha < Rational(start)) {
    auto pred = detail::below_ratio_floor(alpha, "alpha in (0," + start.str() + ")");
    pred.exact = exact;
    return pred;
  }
  // lambda(m) decreases in m, so {m : alpha <= lambda(m)} is a prefix [2, m*].
  const std::int64_t top = p.convert_to<std::int64_t>();
  if (alpha > lambda_threshold(n, 2)) {
    return {top + 1, "alpha in (" + to_string(lambda_threshold(n, 2)) + ",inf)", exact};
  }
  std::int64_t lo = 2;
  std::int64_t hi = top;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (alpha <= lambda_threshold(n, mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const std::int64_t m = lo;
  const std::string left = m == top ? "[" + start.str() : "(" + to_string(lambda_threshold(n, m + 1));
  return {top + m, "alpha in " + left + "," + to_string(lambda_threshold(n, m)) + "]", exact};
}

/// 2^(n+1): the bound on qdepth of P(j) for P of degree n with non-negative
/// coefficients and P(0) > 0.
inline BigInt polynomial_upper_bound(std::int64_t degree) {
  if (degree < 1) throw DomainError("degree must be at least 1");
  detail::require_degree(degree);
  return detail::pow2(degree + 1);
}

}  // namespace qdepth
