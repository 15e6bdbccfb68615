#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdepth/bigint.hpp"
#include "qdepth/errors.hpp"

namespace qdepth {

enum class SequenceKind { Finite, Polynomial, Geometric };

/// A function h: Z -> Z>=0 that vanishes far to the left and is not
/// identically zero.
///
/// All three kinds are anchored at offset():
///   Finite:     h(offset + i) = values[i], zero elsewhere;
///   Polynomial: h(j) = sum_i coeffs[i] * (j - offset)^i for j >= offset;
///   Geometric:  h(j) = scale * ratio^(j - offset) for j >= offset.
/// The tail kinds are zero left of offset, so shifting never rewrites
/// coefficients. Finite values are kept trimmed: the first and last stored
/// values are positive, which makes offset() equal to k0 for every kind.
class Sequence {
 public:
  static Sequence finite(std::int64_t offset, std::vector<BigInt> values) {
    for (const auto& v : values) {
      if (v < 0) throw SchemaError("sequence values must be non-negative");
    }
    std::size_t first = 0;
    while (first < values.size() && values[first] == 0) ++first;
    if (first == values.size()) throw SchemaError("sequence is identically zero");
    std::size_t last = values.size() - 1;
    while (values[last] == 0) --last;
    Sequence h(SequenceKind::Finite, offset + static_cast<std::int64_t>(first));
    h.values_.assign(std::make_move_iterator(values.begin() + static_cast<std::ptrdiff_t>(first)),
                     std::make_move_iterator(values.begin() + static_cast<std::ptrdiff_t>(last) + 1));
    return h;
  }

  static Sequence polynomial(std::vector<BigInt> coeffs, std::int64_t offset = 0) {
    if (coeffs.empty()) throw SchemaError("polynomial needs at least one coefficient");
    for (const auto& c : coeffs) {
      if (c < 0) throw SchemaError("polynomial coefficients must be non-negative");
    }
    if (coeffs.front() == 0) throw SchemaError("polynomial needs a positive constant term");
    if (coeffs.back() == 0) throw SchemaError("polynomial leading coefficient must be positive");
    Sequence h(SequenceKind::Polynomial, offset);
    h.values_ = std::move(coeffs);
    return h;
  }

  static Sequence geometric(BigInt scale, BigInt ratio, std::int64_t offset = 0) {
    if (scale <= 0 || ratio <= 0) throw SchemaError("geometric scale and ratio must be positive");
    Sequence h(SequenceKind::Geometric, offset);
    h.scale_ = std::move(scale);
    h.ratio_ = std::move(ratio);
    return h;
  }

  SequenceKind kind() const { return kind_; }
  std::int64_t offset() const { return offset_; }
  bool is_finite() const { return kind_ == SequenceKind::Finite; }

  // Finite values, or polynomial coefficients a_0..a_n.
  const std::vector<BigInt>& values() const { return values_; }
  const std::vector<BigInt>& coeffs() const { return values_; }
  const BigInt& scale() const { return scale_; }
  const BigInt& ratio() const { return ratio_; }

  std::int64_t degree() const {
    return kind_ == SequenceKind::Polynomial ? static_cast<std::int64_t>(values_.size()) - 1 : -1;
  }

  // Last index of the stored window (Finite only).
  std::int64_t last_index() const { return offset_ + static_cast<std::int64_t>(values_.size()) - 1; }

  BigInt operator()(std::int64_t j) const {
    if (j < offset_) return 0;
    const std::int64_t t = j - offset_;
    switch (kind_) {
      case SequenceKind::Finite:
        return t < static_cast<std::int64_t>(values_.size()) ? values_[static_cast<std::size_t>(t)] : BigInt(0);
      case SequenceKind::Polynomial: {
        BigInt acc = 0;
        for (auto it = values_.rbegin(); it != values_.rend(); ++it) acc = acc * t + *it;
        return acc;
      }
      case SequenceKind::Geometric:
        return scale_ * boost::multiprecision::pow(ratio_, static_cast<unsigned>(t));
    }
    return 0;
  }

  bool operator==(const Sequence&) const = default;

 private:
  Sequence(SequenceKind kind, std::int64_t offset) : kind_(kind), offset_(offset) {}

  SequenceKind kind_;
  std::int64_t offset_;
  std::vector<BigInt> values_;
  BigInt scale_ = 0;
  BigInt ratio_ = 0;
};

inline BigInt evaluate(const Sequence& h, std::int64_t j) { return h(j); }

/// Structural constants of a sequence. kf is empty when h never returns to
/// zero after k0.
struct SequenceStats {
  std::int64_t k0 = 0;
  std::int64_t k1 = 0;
  std::optional<std::int64_t> kf;
  BigInt h0;
  BigInt h1;
  BigInt c;  // floor(h1 / h0)
};

inline SequenceStats stats(const Sequence& h) {
  SequenceStats s;
  s.k0 = h.offset();
  s.k1 = s.k0 + 1;
  s.h0 = h(s.k0);
  s.h1 = h(s.k1);
  s.c = s.h1 / s.h0;
  if (h.is_finite()) {
    const auto& v = h.values();
    std::size_t i = 0;
    while (i + 1 < v.size() && v[i + 1] != 0) ++i;
    s.kf = h.offset() + static_cast<std::int64_t>(i);
  }
  return s;
}

/// h[m](j) = h(m + j).
inline Sequence shift(const Sequence& h, std::int64_t m) {
  switch (h.kind()) {
    case SequenceKind::Finite:
      return Sequence::finite(h.offset() - m, h.values());
    case SequenceKind::Polynomial:
      return Sequence::polynomial(h.coeffs(), h.offset() - m);
    case SequenceKind::Geometric:
      return Sequence::geometric(h.scale(), h.ratio(), h.offset() - m);
  }
  return h;
}

// Materializes h on [k0, last] as a Finite sequence.
inline Sequence window(const Sequence& h, std::int64_t last) {
  if (last < h.offset()) throw DomainError("window end " + std::to_string(last) + " lies before k0");
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(last - h.offset() + 1));
  for (std::int64_t j = h.offset(); j <= last; ++j) values.push_back(h(j));
  return Sequence::finite(h.offset(), std::move(values));
}

inline Sequence add(const Sequence& g, const Sequence& h) {
  if (!g.is_finite() || !h.is_finite()) {
    throw DomainError("add is defined on finite sequences; window tail sequences first");
  }
  const std::int64_t lo = std::min(g.offset(), h.offset());
  const std::int64_t hi = std::max(g.last_index(), h.last_index());
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t j = lo; j <= hi; ++j) values.push_back(g(j) + h(j));
  return Sequence::finite(lo, std::move(values));
}

inline Sequence scale_seq(const Sequence& h, const BigInt& c) {
  if (c <= 0) throw DomainError("scale factor must be a positive integer");
  switch (h.kind()) {
    case SequenceKind::Finite: {
      auto v = h.values();
      for (auto& x : v) x *= c;
      return Sequence::finite(h.offset(), std::move(v));
    }
    case SequenceKind::Polynomial: {
      auto v = h.coeffs();
      for (auto& x : v) x *= c;
      return Sequence::polynomial(std::move(v), h.offset());
    }
    case SequenceKind::Geometric:
      return Sequence::geometric(h.scale() * c, h.ratio(), h.offset());
  }
  return h;
}

}  // namespace qdepth
