#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "qdepth/beta.hpp"
#include "qdepth/closed_forms.hpp"
#include "qdepth/engine.hpp"
#include "qdepth/errors.hpp"
#include "qdepth/poset.hpp"
#include "qdepth/realize.hpp"
#include "qdepth/sequence.hpp"

// JSON forms of sequences, results, posets and partitions. Big integers are
// written as decimal strings and read from either strings or JSON integers.

namespace qdepth::json_io {

using nlohmann::json;

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

inline BigInt bigint_from(const json& j, const std::string& what) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw SchemaError(what + " must be an integer or a decimal string");
}

inline std::int64_t int_from(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw SchemaError(what + " must be an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw SchemaError(what + " is out of range");
  }
  return j.get<std::int64_t>();
}

inline const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

inline std::vector<BigInt> bigint_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + " must be an array");
  std::vector<BigInt> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(bigint_from(x, what + " entry"));
  return out;
}

inline Sequence sequence_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("sequence must be a JSON object");
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw SchemaError("'kind' must be a string");
  const std::string k = kind.get<std::string>();
  const std::int64_t offset = j.contains("offset") ? int_from(j["offset"], "offset") : 0;
  if (k == "finite") return Sequence::finite(offset, bigint_list(field(j, "values"), "values"));
  if (k == "polynomial") return Sequence::polynomial(bigint_list(field(j, "coeffs"), "coeffs"), offset);
  if (k == "geometric") {
    return Sequence::geometric(bigint_from(field(j, "scale"), "scale"), bigint_from(field(j, "ratio"), "ratio"), offset);
  }
  throw SchemaError("unknown sequence kind '" + k + "'");
}

inline json to_json(const Sequence& h) {
  json j;
  auto strings = [](const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
  };
  switch (h.kind()) {
    case SequenceKind::Finite:
      j["kind"] = "finite";
      j["values"] = strings(h.values());
      break;
    case SequenceKind::Polynomial:
      j["kind"] = "polynomial";
      j["coeffs"] = strings(h.coeffs());
      break;
    case SequenceKind::Geometric:
      j["kind"] = "geometric";
      j["scale"] = h.scale().str();
      j["ratio"] = h.ratio().str();
      break;
  }
  j["offset"] = h.offset();
  return j;
}

inline json to_json(const BetaTable& t) {
  json entries = json::object();
  for (std::int64_t k = t.k0; k <= t.d; ++k) entries[std::to_string(k)] = t.at(k).str();
  json j = {{"d", t.d}, {"k0", t.k0}, {"entries", entries}};
  j["first_negative"] = t.first_negative ? json(*t.first_negative) : json(nullptr);
  return j;
}

inline json to_json(const QDepthResult& r) {
  json rejections = json::array();
  for (const auto& rej : r.rejections) rejections.push_back({{"d", rej.d}, {"k", rej.k}, {"beta", rej.beta.str()}});
  json table = json::object();
  for (std::int64_t k = r.accepted_table.k0; k <= r.accepted_table.d; ++k) {
    table[std::to_string(k)] = r.accepted_table.at(k).str();
  }
  return {{"qdepth", r.qdepth}, {"upper_bound", r.upper_bound}, {"rejections", rejections}, {"table", table}};
}

inline json to_json(const PiecewisePrediction& p) {
  return {{"prediction", p.value}, {"branch", p.branch}, {"exact", p.exact}};
}

inline json set_to_json(SetMask s) { return elements_of(s); }

inline SetMask set_from_json(const json& j, int n) {
  if (!j.is_array()) throw SchemaError("a set must be an array of elements");
  std::vector<int> elements;
  for (const auto& e : j) elements.push_back(static_cast<int>(int_from(e, "set element")));
  return mask_of(elements, n);
}

inline Poset poset_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("poset must be a JSON object");
  const std::int64_t n = int_from(field(j, "n"), "n");
  if (n < 1 || n > kMaxGroundSize) throw SchemaError("ground set size must lie in [1, 63]");
  const json& sets = field(j, "sets");
  if (!sets.is_array()) throw SchemaError("'sets' must be an array");
  std::vector<SetMask> masks;
  for (const auto& s : sets) masks.push_back(set_from_json(s, static_cast<int>(n)));
  return Poset(static_cast<int>(n), std::move(masks));
}

inline json to_json(const Poset& p) {
  json sets = json::array();
  for (SetMask s : p.sets()) sets.push_back(set_to_json(s));
  return {{"n", p.n()}, {"sets", sets}};
}

// n bounds the element labels accepted in C and D.
inline IntervalPartition partition_from_json(const json& j, int n = kMaxGroundSize) {
  if (!j.is_object()) throw SchemaError("partition must be a JSON object");
  const json& ivs = field(j, "intervals");
  if (!ivs.is_array()) throw SchemaError("'intervals' must be an array");
  IntervalPartition out;
  for (const auto& iv : ivs) {
    if (!iv.is_object()) throw SchemaError("each interval must be an object with C and D");
    out.intervals.push_back({set_from_json(field(iv, "C"), n), set_from_json(field(iv, "D"), n)});
  }
  return out;
}

inline json to_json(const IntervalPartition& p) {
  json ivs = json::array();
  for (const auto& iv : p.intervals) ivs.push_back({{"C", set_to_json(iv.bottom)}, {"D", set_to_json(iv.top)}});
  return {{"intervals", ivs}};
}

inline json to_json(const RealizationResult& r) {
  json b = json::array();
  for (const auto& x : r.b) b.push_back(x.str());
  return {{"m", r.m},
          {"d", r.d},
          {"N", r.ground_size()},
          {"window_end", r.window_end},
          {"b", b},
          {"poset", to_json(r.poset)},
          {"partition", to_json(r.partition)}};
}

}  // namespace qdepth::json_io
