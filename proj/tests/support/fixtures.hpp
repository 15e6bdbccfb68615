#pragma once

#include <vector>

#include "qdepth/poset.hpp"
#include "qdepth/sequence.hpp"

namespace qdepth::fixture {

// h(-2..2) = 2, 4, 7, 3, 1.
inline Sequence small_window() { return Sequence::finite(-2, {2, 4, 7, 3, 1}); }

// The 17 subsets of [7] whose level counts are 2, 4, 7, 3, 1 on levels 1..5.
inline Poset seventeen_sets() {
  const std::vector<std::vector<int>> sets = {
      {1},          {2},          {1, 2},       {1, 3},          {2, 3},       {1, 4},
      {1, 2, 3},    {1, 2, 4},    {1, 2, 5},    {1, 3, 4},       {1, 3, 5},    {1, 4, 5},
      {2, 4, 5},    {1, 2, 3, 4}, {1, 2, 3, 5}, {1, 3, 4, 5},    {1, 2, 3, 4, 5}};
  std::vector<SetMask> masks;
  for (const auto& s : sets) masks.push_back(mask_of(s, 7));
  return Poset(7, masks);
}

// d!/(d-j)! on [0, d].
inline Sequence falling_factorials(int d) {
  std::vector<BigInt> values{1};
  for (int j = 1; j <= d; ++j) values.push_back(values.back() * (d - j + 1));
  return Sequence::finite(0, values);
}

// a j^n + b on j >= 0.
inline Sequence monomial_plus_constant(const BigInt& a, const BigInt& b, int n) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n + 1), 0);
  coeffs.front() = b;
  coeffs.back() = a;
  return Sequence::polynomial(coeffs);
}

}  // namespace qdepth::fixture
