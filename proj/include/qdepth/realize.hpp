#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdepth/beta.hpp"
#include "qdepth/engine.hpp"
#include "qdepth/poset.hpp"
#include "qdepth/sequence.hpp"

namespace qdepth {

enum class Layout {
  Fresh,    // every interval on its own block of d ground elements
  Compact,  // overlapping windows starting at l(i, j), checked by the validator
};

/// A poset P' whose level counts match h[m] on [1, window_end], with an
/// interval partition of sdepth d = qdepth(h[m]). b[j - 1] is the number of
/// intervals with |bottom| = j and |top| = d.
struct RealizationResult {
  std::int64_t m = 0;
  std::int64_t d = 0;
  std::int64_t window_end = 0;
  std::vector<BigInt> b;
  Poset poset;
  IntervalPartition partition;

  int ground_size() const { return poset.n(); }
};

// Poset sets are capped so that realizations stay enumerable.
inline constexpr std::uint64_t kMaxRealizedSets = std::uint64_t{1} << 20;

/// Level counts of a union of disjoint intervals where b[j - 1] intervals
/// have |bottom| = j and |top| = d: count_k = sum_j b_j C(d - j, k - j).
/// The result is indexed by k in [0, d].
inline std::vector<BigInt> block_level_counts(std::int64_t d, std::span<const BigInt> b) {
  std::vector<BigInt> counts(static_cast<std::size_t>(d + 1), 0);
  for (std::int64_t k = 0; k <= d; ++k) {
    for (std::int64_t j = 1; j <= static_cast<std::int64_t>(b.size()) && j <= k; ++j) {
      counts[static_cast<std::size_t>(k)] += b[static_cast<std::size_t>(j - 1)] * binomial(d - j, k - j);
    }
  }
  return counts;
}

// True iff the intervals described by (d, b) reproduce target on [1, d].
inline bool counting_identity_check(std::int64_t d, std::span<const BigInt> b, const Sequence& target) {
  const auto counts = block_level_counts(d, b);
  for (std::int64_t k = 1; k <= d; ++k) {
    if (counts[static_cast<std::size_t>(k)] != target(k)) return false;
  }
  return true;
}

namespace detail {

inline SetMask run_of(std::int64_t first, std::int64_t length) {
  if (length == 0) return 0;
  if (first < 1 || first + length - 1 > kMaxGroundSize) {
    throw DomainError("realization needs more than " + std::to_string(kMaxGroundSize) + " ground elements");
  }
  const SetMask ones = length == 64 ? ~SetMask{0} : (SetMask{1} << length) - 1;
  return ones << (first - 1);
}

inline std::vector<Interval> fresh_layout(std::int64_t d, const std::vector<std::uint64_t>& b) {
  std::vector<Interval> out;
  std::int64_t next = 1;
  for (std::int64_t j = 1; j <= d; ++j) {
    for (std::uint64_t copy = 0; copy < b[static_cast<std::size_t>(j - 1)]; ++copy) {
      out.push_back({run_of(next, j), run_of(next, d)});
      next += d;
    }
  }
  return out;
}

// Group i (0-based) holds the intervals with |bottom| = i + 1; the j-th of
// them starts at l(i, j) = sum_{t <= i} b_t (d - t) + (j - 1)(d - i - 1) + 1.
inline std::vector<Interval> compact_layout(std::int64_t d, const std::vector<std::uint64_t>& b) {
  std::vector<Interval> out;
  std::int64_t prefix = 0;
  for (std::int64_t i = 0; i < d; ++i) {
    if (i > 0) prefix += static_cast<std::int64_t>(b[static_cast<std::size_t>(i - 1)]) * (d - i);
    for (std::int64_t j = 1; j <= static_cast<std::int64_t>(b[static_cast<std::size_t>(i)]); ++j) {
      const std::int64_t start = prefix + (j - 1) * (d - i - 1) + 1;
      out.push_back({run_of(start, i + 1), run_of(start, d)});
    }
  }
  return out;
}

// The first `count` k-subsets of [n] in colex order.
inline std::vector<SetMask> first_subsets(int k, std::uint64_t count) {
  std::vector<SetMask> out;
  SetMask s = (SetMask{1} << k) - 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(s);
    const SetMask low = s & (~s + 1);
    const SetMask ripple = s + low;
    s = (((ripple ^ s) >> 2) / low) | ripple;
  }
  return out;
}

inline std::uint64_t small_count(const BigInt& x, const char* what) {
  if (x < 0 || x > kMaxRealizedSets) throw DomainError(std::string(what) + " is too large to realize");
  return x.convert_to<std::uint64_t>();
}

}  // namespace detail

/// Realizes h (shifted so that it starts at level 1) as a subposet of 2^[N]
/// together with an interval partition whose sdepth equals qdepth.
///
/// With m = k0(h) - 1 and d = qdepth(h[m]), the partition consists of
/// b_j = beta_j^d(h[m]) intervals with |bottom| = j and |top| = d for each
/// 1 <= j <= d. For finite h the levels above d are added as singleton
/// intervals [A, A]; all of those have |A| > d. The result is checked before
/// it is returned: the partition is valid, the level counts match h[m] on the
/// window, and sdepth(partition) = qdepth(P') = d.
inline RealizationResult realize(const Sequence& h, Layout layout = Layout::Fresh) {
  const std::int64_t m = h.offset() - 1;
  const Sequence g = shift(h, m);
  const QDepthResult q = compute_qdepth(g);
  const std::int64_t d = q.qdepth;
  std::vector<BigInt> b;

  std::vector<std::uint64_t> counts;
  for (std::int64_t j = 1; j <= d; ++j) {
    const BigInt& bj = q.accepted_table.at(j);
    if (bj < 0) throw std::logic_error("negative beta in an accepted table");
    b.push_back(bj);
    counts.push_back(detail::small_count(bj, "interval count"));
  }

  std::vector<Interval> intervals =
      layout == Layout::Fresh ? detail::fresh_layout(d, counts) : detail::compact_layout(d, counts);
  SetMask used = 0;
  for (const auto& iv : intervals) used |= iv.top;
  int n = std::max(1, static_cast<int>(std::bit_width(used)));

  // Levels above d: distinct sets of the required size, all larger than
  // any set inside an interval.
  const std::int64_t window_end = g.is_finite() ? g.last_index() : d;
  std::vector<std::pair<int, std::uint64_t>> upper;
  for (std::int64_t k = d + 1; k <= window_end; ++k) {
    if (k > kMaxGroundSize) throw DomainError("level " + std::to_string(k) + " exceeds the ground set limit");
    const std::uint64_t need = detail::small_count(g(k), "level count");
    if (need == 0) continue;
    while (n < k || binomial(n, k) < need) {
      if (++n > kMaxGroundSize) throw DomainError("realization needs more than 63 ground elements");
    }
    upper.emplace_back(static_cast<int>(k), need);
  }

  std::vector<SetMask> sets;
  std::uint64_t total = 0;
  for (const auto& iv : intervals) total += iv.size();
  for (const auto& [k, need] : upper) total += need;
  if (total > kMaxRealizedSets) throw DomainError("realization would hold more than 2^20 sets");
  for (const auto& iv : intervals) {
    for_each_member(iv, [&sets](SetMask a) {
      sets.push_back(a);
      return true;
    });
  }
  for (const auto& [k, need] : upper) {
    for (SetMask a : detail::first_subsets(k, need)) {
      sets.push_back(a);
      intervals.push_back({a, a});
    }
  }

  std::sort(sets.begin(), sets.end());
  if (std::adjacent_find(sets.begin(), sets.end()) != sets.end()) {
    throw DomainError("layout places the same set in two intervals");
  }
  RealizationResult out{m, d, window_end, std::move(b), Poset(n, std::move(sets)), {std::move(intervals)}};

  const PartitionReport report = validate_partition(out.poset, out.partition);
  if (!report.valid) throw DomainError("layout rejected by partition validator: " + report.diagnostic);
  if (*report.sdepth != d) throw std::logic_error("realized partition has the wrong sdepth");
  const Sequence realized = level_sequence(out.poset);
  for (std::int64_t k = 1; k <= out.window_end; ++k) {
    if (realized(k) != g(k)) throw std::logic_error("realized level " + std::to_string(k) + " does not match h[m]");
  }
  if (poset_qdepth(out.poset).qdepth != d) throw std::logic_error("realized poset has the wrong qdepth");
  return out;
}

}  // namespace qdepth
