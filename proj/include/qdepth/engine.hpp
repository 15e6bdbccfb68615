#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdepth/beta.hpp"
#include "qdepth/bigint.hpp"
#include "qdepth/sequence.hpp"

namespace qdepth {

// A depth d' that fails, with the smallest k where beta_k^d' < 0.
struct Rejection {
  std::int64_t d = 0;
  std::int64_t k = 0;
  BigInt beta;

  bool operator==(const Rejection&) const = default;
};

/// qdepth(h) together with its certificate: the non-negative table at the
/// accepted depth and a negative entry for every larger depth up to the
/// search bound min{kf, k0 + c(h)}. Rejections are ordered by ascending d.
struct QDepthResult {
  std::int64_t qdepth = 0;
  BetaTable accepted_table;
  std::vector<Rejection> rejections;
  std::int64_t upper_bound = 0;
};

struct DepthCheck {
  bool accepted = false;
  std::optional<std::int64_t> witness;  // smallest failing k
  BigInt witness_beta;
};

// Largest window [k0, bound] the descending search will walk.
inline constexpr std::int64_t kMaxSearchWindow = 1 << 16;

/// min{kf, k0 + c(h)}.
inline std::int64_t depth_upper_bound(const SequenceStats& s) {
  const BigInt by_ratio = BigInt(s.k0) + s.c;
  if (s.kf && BigInt(*s.kf) <= by_ratio) return *s.kf;
  return to_int64(by_ratio, "qdepth search bound k0 + c(h)");
}

inline std::int64_t depth_upper_bound(const Sequence& h) { return depth_upper_bound(stats(h)); }

/// True iff beta_k^d(h) >= 0 for every k0 <= k <= d. Scans k upward and
/// stops at the first negative entry, which is reported as the witness.
inline DepthCheck qdepth_at_least(const Sequence& h, std::int64_t d) {
  const std::int64_t k0 = h.offset();
  if (d < k0) throw DomainError("depth test needs d >= k0 (d=" + std::to_string(d) + ", k0=" + std::to_string(k0) + ")");
  DepthCheck check;
  for (std::int64_t k = k0; k <= d; ++k) {
    BigInt b = beta(h, k, d);
    if (b < 0) {
      check.witness = k;
      check.witness_beta = std::move(b);
      return check;
    }
  }
  check.accepted = true;
  return check;
}

/// Descends from min{kf, k0 + c(h)} and accepts the first depth whose whole
/// table is non-negative. Every depth that was passed over is recorded as a
/// rejection with its witness.
inline QDepthResult compute_qdepth(const Sequence& h, std::int64_t max_window = kMaxSearchWindow) {
  const SequenceStats s = stats(h);
  QDepthResult result;
  result.upper_bound = depth_upper_bound(s);
  if (result.upper_bound - s.k0 > max_window) {
    throw DomainError("qdepth search window [" + std::to_string(s.k0) + ", " + std::to_string(result.upper_bound) +
                      "] exceeds the limit of " + std::to_string(max_window));
  }
  for (std::int64_t d = result.upper_bound; d >= s.k0; --d) {
    DepthCheck check = qdepth_at_least(h, d);
    if (check.accepted) {
      result.qdepth = d;
      result.accepted_table = beta_table(h, d);
      std::reverse(result.rejections.begin(), result.rejections.end());
      return result;
    }
    result.rejections.push_back({d, *check.witness, std::move(check.witness_beta)});
  }
  // The table at d = k0 is the single entry h0 > 0.
  throw std::logic_error("qdepth search fell below k0");
}

inline std::int64_t qdepth_value(const Sequence& h) { return compute_qdepth(h).qdepth; }

/// h(k) >= C(d - k0, k - k0) * h0 on [k0, d]; holds whenever qdepth(h) >= d.
inline bool necessary_condition_holds(const Sequence& h, std::int64_t d) {
  const std::int64_t k0 = h.offset();
  if (d < k0) throw DomainError("necessary condition needs d >= k0");
  const BigInt h0 = h(k0);
  for (std::int64_t k = k0; k <= d; ++k) {
    if (h(k) < binomial(d - k0, k - k0) * h0) return false;
  }
  return true;
}

/// h(k) >= (d - k + 1) * h(k - 1) on [k0 + 1, d]; implies qdepth(h) >= d.
inline bool sufficient_condition_holds(const Sequence& h, std::int64_t d) {
  const std::int64_t k0 = h.offset();
  if (d < k0) throw DomainError("sufficient condition needs d >= k0");
  BigInt prev = h(k0);
  for (std::int64_t k = k0 + 1; k <= d; ++k) {
    BigInt cur = h(k);
    if (cur < BigInt(d - k + 1) * prev) return false;
    prev = std::move(cur);
  }
  return true;
}

}  // namespace qdepth
