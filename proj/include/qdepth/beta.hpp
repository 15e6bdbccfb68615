#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdepth/bigint.hpp"
#include "qdepth/sequence.hpp"

namespace qdepth {

/// The values beta_k^d(h) for one d and every k in [k0, d].
struct BetaTable {
  std::int64_t d = 0;
  std::int64_t k0 = 0;
  std::vector<BigInt> entries;  // entries[i] = beta_{k0 + i}^d
  std::optional<std::int64_t> first_negative;

  const BigInt& at(std::int64_t k) const {
    if (k < k0 || k > d) throw DomainError("beta table has no entry for k=" + std::to_string(k));
    return entries[static_cast<std::size_t>(k - k0)];
  }

  bool nonnegative() const { return !first_negative.has_value(); }

  bool operator==(const BetaTable&) const = default;
};

namespace detail {

inline void mark_first_negative(BetaTable& table) {
  table.first_negative.reset();
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    if (table.entries[i] < 0) {
      table.first_negative = table.k0 + static_cast<std::int64_t>(i);
      return;
    }
  }
}

}  // namespace detail

/// beta_k^d(h) = sum_{j <= k} (-1)^(k-j) C(d-j, k-j) h(j).
///
/// Terms with j < k0 vanish, so the sum runs over [k0, k]. The binomial
/// factor is advanced incrementally from j = k downward:
/// C(d-k+t, t) = C(d-k+t-1, t-1) * (d-k+t) / t.
inline BigInt beta(const Sequence& h, std::int64_t k, std::int64_t d) {
  if (k > d) throw DomainError("beta requires k <= d (k=" + std::to_string(k) + ", d=" + std::to_string(d) + ")");
  const std::int64_t k0 = h.offset();
  BigInt sum = 0;
  BigInt coeff = 1;
  for (std::int64_t j = k, t = 0; j >= k0; --j, ++t) {
    if (t > 0) {
      coeff *= d - k + t;
      coeff /= t;
    }
    if (t % 2 == 0) {
      sum += coeff * h(j);
    } else {
      sum -= coeff * h(j);
    }
  }
  return sum;
}

inline BetaTable beta_table(const Sequence& h, std::int64_t d) {
  const std::int64_t k0 = h.offset();
  if (d < k0) throw DomainError("beta table needs d >= k0 (d=" + std::to_string(d) + ", k0=" + std::to_string(k0) + ")");
  BetaTable table{d, k0, {}, std::nullopt};
  table.entries.reserve(static_cast<std::size_t>(d - k0 + 1));
  for (std::int64_t k = k0; k <= d; ++k) table.entries.push_back(beta(h, k, d));
  detail::mark_first_negative(table);
  return table;
}

/// Table at d = prev.d + 1 from the table at prev.d:
/// beta_k^d = beta_k^(d-1) - beta_(k-1)^(d-1) for k0 < k < d,
/// beta_k0^d = h(k0) and beta_d^d = h(d) - beta_(d-1)^(d-1).
inline BetaTable next_beta_table(const Sequence& h, const BetaTable& prev) {
  if (prev.k0 != h.offset()) throw DomainError("beta table does not belong to this sequence");
  const std::int64_t d = prev.d + 1;
  BetaTable table{d, prev.k0, {}, std::nullopt};
  table.entries.reserve(prev.entries.size() + 1);
  table.entries.push_back(h(prev.k0));
  for (std::size_t i = 1; i < prev.entries.size(); ++i) {
    table.entries.push_back(prev.entries[i] - prev.entries[i - 1]);
  }
  table.entries.push_back(h(d) - prev.entries.back());
  detail::mark_first_negative(table);
  return table;
}

// Builds the table at d by iterating next_beta_table up from d = k0.
inline BetaTable beta_table_by_recurrence(const Sequence& h, std::int64_t d) {
  const std::int64_t k0 = h.offset();
  if (d < k0) throw DomainError("beta table needs d >= k0 (d=" + std::to_string(d) + ", k0=" + std::to_string(k0) + ")");
  BetaTable table{k0, k0, {h(k0)}, std::nullopt};
  while (table.d < d) table = next_beta_table(h, table);
  return table;
}

}  // namespace qdepth
