#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "qdepth/errors.hpp"
#include "qdepth/poset.hpp"

namespace qdepth {

inline constexpr std::size_t kDefaultBruteforceCap = 24;

struct SdepthResult {
  int sdepth = 0;
  IntervalPartition witness;
};

namespace detail {

// Exhaustive search over interval partitions. Sets are indexed in
// (cardinality, mask) order, so the lowest unassigned index is a minimal
// remaining set and must be the bottom of its interval. The search value
// of a remaining-set mask is memoized; inside a node, candidate tops are
// tried largest first and cut off once |top| cannot beat the node's best.
class SdepthSearch {
 public:
  explicit SdepthSearch(const Poset& p) : poset_(p), candidates_(p.size()) {
    const auto& sets = p.sets();
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i; j < sets.size(); ++j) {
        if ((sets[i] & ~sets[j]) != 0) continue;
        std::uint64_t members = 0;
        const bool inside = for_each_member({sets[i], sets[j]}, [&](SetMask a) {
          auto idx = p.index_of(a);
          if (!idx) return false;
          members |= std::uint64_t{1} << *idx;
          return true;
        });
        if (inside) candidates_[i].push_back({cardinality(sets[j]), members, j});
      }
      std::sort(candidates_[i].begin(), candidates_[i].end(),
                [](const Candidate& x, const Candidate& y) { return x.top_size > y.top_size; });
    }
  }

  SdepthResult run() {
    const std::uint64_t all = poset_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << poset_.size()) - 1;
    SdepthResult result;
    result.sdepth = solve(all);
    std::uint64_t rem = all;
    while (rem) {
      const auto& c = candidates_[static_cast<std::size_t>(std::countr_zero(rem))][memo_.at(rem).choice];
      const auto& sets = poset_.sets();
      result.witness.intervals.push_back({sets[static_cast<std::size_t>(std::countr_zero(rem))], sets[c.top]});
      rem &= ~c.members;
    }
    return result;
  }

 private:
  struct Candidate {
    int top_size;
    std::uint64_t members;
    std::size_t top;
  };
  struct Entry {
    int value;
    std::size_t choice;
  };

  static constexpr int kUnbounded = kMaxGroundSize + 1;

  int solve(std::uint64_t rem) {
    if (rem == 0) return kUnbounded;
    if (auto it = memo_.find(rem); it != memo_.end()) return it->second.value;
    const auto& cands = candidates_[static_cast<std::size_t>(std::countr_zero(rem))];
    int best = -1;
    std::size_t choice = 0;
    for (std::size_t c = 0; c < cands.size(); ++c) {
      if (cands[c].top_size <= best) break;
      if (cands[c].members & ~rem) continue;
      const int value = std::min(cands[c].top_size, solve(rem & ~cands[c].members));
      if (value > best) {
        best = value;
        choice = c;
      }
    }
    memo_.emplace(rem, Entry{best, choice});
    return best;
  }

  const Poset& poset_;
  std::vector<std::vector<Candidate>> candidates_;
  std::unordered_map<std::uint64_t, Entry> memo_;
};

}  // namespace detail

/// Exact sdepth(P) = max over interval partitions of min |top|, with a
/// witness partition attaining it. Refuses posets with more than `cap`
/// sets (cap itself may not exceed 64).
inline SdepthResult sdepth_bruteforce(const Poset& p, std::size_t cap = kDefaultBruteforceCap) {
  if (cap > 64) throw DomainError("brute-force cap cannot exceed 64 sets");
  if (p.size() > cap) {
    throw DomainError("poset has " + std::to_string(p.size()) + " sets; brute-force sdepth is capped at " +
                      std::to_string(cap));
  }
  return detail::SdepthSearch(p).run();
}

}  // namespace qdepth
