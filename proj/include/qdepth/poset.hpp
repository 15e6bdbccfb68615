#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdepth/engine.hpp"
#include "qdepth/errors.hpp"
#include "qdepth/sequence.hpp"

namespace qdepth {

// Subset of [n] with element i stored at bit i - 1.
using SetMask = std::uint64_t;

inline constexpr int kMaxGroundSize = 63;

inline int cardinality(SetMask s) { return std::popcount(s); }

inline SetMask mask_of(const std::vector<int>& elements, int n) {
  SetMask s = 0;
  for (int e : elements) {
    if (e < 1 || e > n) throw SchemaError("element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
    const SetMask bit = SetMask{1} << (e - 1);
    if (s & bit) throw SchemaError("element " + std::to_string(e) + " repeated in a set");
    s |= bit;
  }
  return s;
}

inline std::vector<int> elements_of(SetMask s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

inline std::string format_set(SetMask s) {
  std::string out = "{";
  for (int e : elements_of(s)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(e);
  }
  return out + "}";
}

// Orders sets by cardinality, then by mask.
struct SizeThenMask {
  bool operator()(SetMask a, SetMask b) const {
    const int ca = cardinality(a);
    const int cb = cardinality(b);
    return ca != cb ? ca < cb : a < b;
  }
};

/// A nonempty family of distinct subsets of [n], 1 <= n <= 63. Sets are
/// stored in (cardinality, mask) order.
class Poset {
 public:
  Poset(int n, std::vector<SetMask> sets) : n_(n), sets_(std::move(sets)) {
    if (n_ < 1 || n_ > kMaxGroundSize) throw SchemaError("ground set size must lie in [1, 63]");
    if (sets_.empty()) throw SchemaError("poset must contain at least one set");
    const SetMask universe = (SetMask{1} << n_) - 1;
    for (SetMask s : sets_) {
      if (s & ~universe) throw SchemaError("set " + format_set(s) + " does not fit in [" + std::to_string(n_) + "]");
    }
    std::sort(sets_.begin(), sets_.end(), SizeThenMask{});
    auto dup = std::adjacent_find(sets_.begin(), sets_.end());
    if (dup != sets_.end()) throw SchemaError("set " + format_set(*dup) + " listed twice");
  }

  int n() const { return n_; }
  const std::vector<SetMask>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }

  bool contains(SetMask s) const { return std::binary_search(sets_.begin(), sets_.end(), s, SizeThenMask{}); }

  // Position of s in sets(), if present.
  std::optional<std::size_t> index_of(SetMask s) const {
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s, SizeThenMask{});
    if (it == sets_.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - sets_.begin());
  }

  bool operator==(const Poset&) const = default;

 private:
  int n_;
  std::vector<SetMask> sets_;
};

inline std::map<int, std::uint64_t> level_counts(const Poset& p) {
  std::map<int, std::uint64_t> counts;
  for (SetMask s : p.sets()) ++counts[cardinality(s)];
  return counts;
}

// h_P as a finite sequence: h_P(j) = number of member sets of size j.
inline Sequence level_sequence(const Poset& p) {
  const auto counts = level_counts(p);
  const int lo = counts.begin()->first;
  const int hi = counts.rbegin()->first;
  std::vector<BigInt> values(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [level, count] : counts) values[static_cast<std::size_t>(level - lo)] = count;
  return Sequence::finite(lo, std::move(values));
}

inline QDepthResult poset_qdepth(const Poset& p) { return compute_qdepth(level_sequence(p)); }

/// The interval [bottom, top] = {A : bottom ⊆ A ⊆ top}.
struct Interval {
  SetMask bottom = 0;
  SetMask top = 0;

  std::uint64_t size() const { return std::uint64_t{1} << cardinality(top & ~bottom); }
  bool contains(SetMask a) const { return (bottom & ~a) == 0 && (a & ~top) == 0; }
  bool operator==(const Interval&) const = default;
};

// Two intervals meet iff bottom ∪ bottom' ⊆ top ∩ top'.
inline bool intersects(const Interval& x, const Interval& y) {
  return ((x.bottom | y.bottom) & ~(x.top & y.top)) == 0;
}

// Calls visit(A) for every A in [bottom, top] until visit returns false.
template <typename Visitor>
bool for_each_member(const Interval& iv, Visitor&& visit) {
  const SetMask free = iv.top & ~iv.bottom;
  SetMask sub = 0;
  while (true) {
    if (!visit(iv.bottom | sub)) return false;
    if (sub == free) return true;
    sub = (sub - free) & free;
  }
}

struct IntervalPartition {
  std::vector<Interval> intervals;

  bool operator==(const IntervalPartition&) const = default;
};

inline int partition_sdepth(const IntervalPartition& partition) {
  if (partition.intervals.empty()) throw DomainError("empty partition has no sdepth");
  int best = kMaxGroundSize + 1;
  for (const auto& iv : partition.intervals) best = std::min(best, cardinality(iv.top));
  return best;
}

struct PartitionReport {
  bool valid = false;
  std::optional<int> sdepth;
  std::string diagnostic;  // first violated clause, empty when valid
};

/// Checks that the intervals are well formed, lie inside the target,
/// are pairwise disjoint and cover every set of the target exactly once.
inline PartitionReport validate_partition(const Poset& target, const IntervalPartition& partition) {
  PartitionReport report;
  auto fail = [&report](std::string why) {
    report.diagnostic = std::move(why);
    return report;
  };
  const auto& ivs = partition.intervals;
  if (ivs.empty()) return fail("partition has no intervals");

  for (std::size_t i = 0; i < ivs.size(); ++i) {
    const auto& iv = ivs[i];
    const std::string name = "interval " + std::to_string(i) + " [" + format_set(iv.bottom) + "," + format_set(iv.top) + "]";
    if (iv.bottom & ~iv.top) return fail(name + ": bottom is not contained in top");
    std::optional<SetMask> missing;
    for_each_member(iv, [&](SetMask a) {
      if (target.contains(a)) return true;
      missing = a;
      return false;
    });
    if (missing) return fail(name + ": member " + format_set(*missing) + " is not in the poset");
  }

  for (std::size_t i = 0; i < ivs.size(); ++i) {
    for (std::size_t j = i + 1; j < ivs.size(); ++j) {
      if (intersects(ivs[i], ivs[j])) {
        return fail("intervals " + std::to_string(i) + " and " + std::to_string(j) + " overlap at " +
                    format_set(ivs[i].bottom | ivs[j].bottom));
      }
    }
  }

  std::uint64_t covered = 0;
  for (const auto& iv : ivs) covered += iv.size();
  if (covered != target.size()) {
    return fail("intervals hold " + std::to_string(covered) + " sets but the poset has " + std::to_string(target.size()));
  }
  for (SetMask a : target.sets()) {
    const bool hit = std::any_of(ivs.begin(), ivs.end(), [a](const Interval& iv) { return iv.contains(a); });
    if (!hit) return fail("set " + format_set(a) + " is not covered");
  }

  report.valid = true;
  report.sdepth = partition_sdepth(partition);
  return report;
}

// The partition of p into singleton intervals [A, A].
inline IntervalPartition trivial_partition(const Poset& p) {
  IntervalPartition out;
  for (SetMask s : p.sets()) out.intervals.push_back({s, s});
  return out;
}

}  // namespace qdepth
