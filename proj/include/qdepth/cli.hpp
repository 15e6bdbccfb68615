#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qdepth/beta.hpp"
#include "qdepth/closed_forms.hpp"
#include "qdepth/engine.hpp"
#include "qdepth/errors.hpp"
#include "qdepth/json_io.hpp"
#include "qdepth/poset.hpp"
#include "qdepth/realize.hpp"
#include "qdepth/sdepth.hpp"
#include "qdepth/sequence.hpp"

namespace qdepth::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kSchema = 2,
  kDomain = 3,
};

namespace detail {

using json_io::json;

struct IO {
  std::ostream& out;
  std::istream& in;
};

// Inline JSON when the argument starts with '{', stdin for "-", else a path.
inline std::string read_input(const std::string& arg, std::istream& in) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ostringstream buf;
  if (arg == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(arg);
  if (!file) throw SchemaError("cannot read input '" + arg + "'");
  buf << file.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const json& j) {
  std::ofstream file(path);
  if (!file) throw DomainError("cannot write '" + path + "'");
  file << j.dump(2) << "\n";
}

inline Sequence load_sequence(const std::string& arg, std::int64_t shift_by, std::istream& in) {
  Sequence h = json_io::sequence_from_json(json_io::parse(read_input(arg, in)));
  return shift_by == 0 ? h : shift(h, shift_by);
}

inline std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw SchemaError("range '" + text + "' must look like lo:hi");
  const std::int64_t lo = to_int64(parse_bigint(text.substr(0, colon)), "range start");
  const std::int64_t hi = to_int64(parse_bigint(text.substr(colon + 1)), "range end");
  if (lo < 1 || hi < lo) throw SchemaError("range '" + text + "' must satisfy 1 <= lo <= hi");
  return {lo, hi};
}

inline std::size_t bruteforce_cap() {
  const char* env = std::getenv("QDEPTH_BRUTEFORCE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultBruteforceCap;
  const BigInt cap = parse_bigint(env);
  if (cap < 1 || cap > 64) throw SchemaError("QDEPTH_BRUTEFORCE_CAP must lie in [1, 64]");
  return cap.convert_to<std::size_t>();
}

inline void print_beta_rows(std::ostream& out, const BetaTable& t) {
  out << "k\tbeta\n";
  for (std::int64_t k = t.k0; k <= t.d; ++k) {
    out << k << "\t" << t.at(k).str();
    if (t.first_negative && *t.first_negative == k) out << "\t<- first negative";
    out << "\n";
  }
}

struct ClosedFormRow {
  std::string alpha;
  PiecewisePrediction predicted;
  std::int64_t computed = 0;
};

inline ClosedFormRow closed_form_row(const std::string& family, const BigInt& a, const BigInt& b, std::int64_t n) {
  ClosedFormRow row;
  row.alpha = to_string(Rational(a, b));
  if (family == "geometric") {
    const BigInt r = geometric_qdepth(a, b);
    row.alpha = r.str();
    row.predicted = {to_int64(r, "ratio"), "geometric ratio", true};
    row.computed = compute_qdepth(Sequence::geometric(a, b)).qdepth;
  } else if (family == "arithmetic") {
    row.predicted = arithmetic_qdepth(a, b);
    row.computed = compute_qdepth(Sequence::polynomial({b, a})).qdepth;
  } else if (family == "quadratic") {
    row.predicted = quadratic_qdepth(a, b);
    row.computed = compute_qdepth(Sequence::polynomial({b, 0, a})).qdepth;
  } else if (family == "power") {
    if (n < 1) throw SchemaError("family 'power' needs --n >= 1");
    row.predicted = eq_bound(n, Rational(a, b));
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n + 1), 0);
    coeffs.front() = b;
    coeffs.back() = a;
    row.computed = compute_qdepth(Sequence::polynomial(std::move(coeffs))).qdepth;
  } else {
    throw SchemaError("unknown family '" + family + "'");
  }
  return row;
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace detail

/// Runs the command line `args` (without the program name). Results go to
/// `out`; failures go to `err` as a single "error[<kind>]: <message>" line.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  using detail::json;
  CLI::App app{"Arithmetic Hilbert depth of integer sequences", "qdepth"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::string seq_arg;
  std::int64_t shift_by = 0;
  auto add_seq = [&](CLI::App* sub) {
    sub->add_option("--seq", seq_arg, "Sequence JSON, a path, or - for stdin")->required();
    sub->add_option("--shift", shift_by, "Evaluate h[m] instead of h");
  };

  auto* qd = app.add_subcommand("qdepth", "Compute qdepth(h) with its certificate");
  add_seq(qd);

  auto* bt = app.add_subcommand("beta-table", "Print beta_k^d(h) for k0 <= k <= d");
  add_seq(bt);
  std::int64_t table_d = 0;
  bt->add_option("--d", table_d, "Depth d")->required();

  std::string family;
  std::string a_text;
  std::string b_text;
  std::int64_t degree = 0;
  auto* cf = app.add_subcommand("closed-form", "Closed-form prediction next to the computed qdepth");
  cf->add_option("--family", family, "geometric (a r^j), arithmetic (a j + b), quadratic (a j^2 + b) or power (a j^n + b)")
      ->required()
      ->check(CLI::IsMember({"geometric", "arithmetic", "quadratic", "power"}));
  cf->add_option("--a", a_text, "a (the scale for geometric)")->required();
  cf->add_option("--b", b_text, "b (the ratio for geometric)")->required();
  cf->add_option("--n", degree, "Degree for the power family");

  std::string alpha_text;
  auto* eb = app.add_subcommand("eq-bound", "Upper bound eq(h) for a j^n + b from alpha = a/b");
  eb->add_option("--n", degree, "Degree n")->required();
  eb->add_option("--alpha", alpha_text, "alpha as p/q or an integer")->required();

  std::string layout = "fresh";
  std::string poset_out;
  std::string partition_out;
  auto* rz = app.add_subcommand("realize", "Realize h as a poset with a certifying interval partition");
  add_seq(rz);
  rz->add_option("--layout", layout, "Ground element layout")->check(CLI::IsMember({"fresh", "compact"}));
  rz->add_option("--poset-out", poset_out, "Write the poset JSON here");
  rz->add_option("--partition-out", partition_out, "Write the partition JSON here");

  std::string poset_arg;
  std::string partition_arg;
  auto* vp = app.add_subcommand("verify-partition", "Validate an interval partition of a poset");
  vp->add_option("--poset", poset_arg, "Poset JSON, a path, or -")->required();
  vp->add_option("--partition", partition_arg, "Partition JSON, a path, or -")->required();

  auto* sd = app.add_subcommand("sdepth", "Exact sdepth by exhaustive search");
  sd->add_option("--poset", poset_arg, "Poset JSON, a path, or -")->required();

  std::string a_range;
  std::string b_range;
  auto* sw = app.add_subcommand("sweep", "CSV of predicted vs computed qdepth over an (a, b) grid");
  sw->add_option("--family", family, "geometric, arithmetic, quadratic or power")
      ->required()
      ->check(CLI::IsMember({"geometric", "arithmetic", "quadratic", "power"}));
  sw->add_option("--a-range", a_range, "lo:hi")->required();
  sw->add_option("--b-range", b_range, "lo:hi")->required();
  sw->add_option("--n", degree, "Degree for the power family");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error[schema]: " << e.what() << "\n";
    return kSchema;
  }

  const bool table = format == "table";
  try {
    if (qd->parsed()) {
      const QDepthResult r = compute_qdepth(detail::load_sequence(seq_arg, shift_by, in));
      if (!table) {
        detail::emit(out, json_io::to_json(r));
      } else {
        out << "qdepth\t" << r.qdepth << "\nupper_bound\t" << r.upper_bound << "\n";
        for (const auto& rej : r.rejections) {
          out << "rejected d=" << rej.d << "\tk=" << rej.k << "\tbeta=" << rej.beta.str() << "\n";
        }
        detail::print_beta_rows(out, r.accepted_table);
      }
    } else if (bt->parsed()) {
      const BetaTable t = beta_table(detail::load_sequence(seq_arg, shift_by, in), table_d);
      if (table) {
        detail::print_beta_rows(out, t);
      } else {
        detail::emit(out, json_io::to_json(t));
      }
    } else if (cf->parsed()) {
      const BigInt a = parse_bigint(a_text);
      const BigInt b = parse_bigint(b_text);
      const auto row = detail::closed_form_row(family, a, b, degree);
      const bool agree = row.predicted.value == row.computed;
      if (table) {
        out << "family\ta\tb\talpha\tpredicted\tcomputed\tagree\n"
            << family << "\t" << a.str() << "\t" << b.str() << "\t" << row.alpha << "\t" << row.predicted.value << "\t"
            << row.computed << "\t" << (agree ? "yes" : "no") << "\n";
      } else {
        json j = json_io::to_json(row.predicted);
        j["family"] = family;
        j["a"] = a.str();
        j["b"] = b.str();
        j["alpha"] = row.alpha;
        j["computed"] = row.computed;
        j["agree"] = agree;
        detail::emit(out, j);
      }
    } else if (eb->parsed()) {
      const Rational alpha = parse_rational(alpha_text);
      const PiecewisePrediction p = eq_bound(degree, alpha);
      if (table) {
        out << "eq_bound\t" << p.value << "\nbranch\t" << p.branch << "\nexact\t" << (p.exact ? "yes" : "no") << "\n";
      } else {
        json j = json_io::to_json(p);
        j["n"] = degree;
        j["alpha"] = to_string(alpha);
        detail::emit(out, j);
      }
    } else if (rz->parsed()) {
      const Sequence h = detail::load_sequence(seq_arg, shift_by, in);
      const RealizationResult r = realize(h, layout == "compact" ? Layout::Compact : Layout::Fresh);
      if (!poset_out.empty()) detail::write_file(poset_out, json_io::to_json(r.poset));
      if (!partition_out.empty()) detail::write_file(partition_out, json_io::to_json(r.partition));
      if (table) {
        out << "m\t" << r.m << "\nd\t" << r.d << "\nN\t" << r.ground_size() << "\nsets\t" << r.poset.size()
            << "\nintervals\t" << r.partition.intervals.size() << "\n";
      } else {
        detail::emit(out, json_io::to_json(r));
      }
    } else if (vp->parsed()) {
      const Poset p = json_io::poset_from_json(json_io::parse(detail::read_input(poset_arg, in)));
      const IntervalPartition part =
          json_io::partition_from_json(json_io::parse(detail::read_input(partition_arg, in)), p.n());
      const PartitionReport rep = validate_partition(p, part);
      if (table) {
        out << "valid\t" << (rep.valid ? "yes" : "no") << "\n";
        if (rep.valid) out << "sdepth\t" << *rep.sdepth << "\n";
      } else {
        json j = {{"valid", rep.valid}, {"diagnostic", rep.diagnostic}};
        j["sdepth"] = rep.sdepth ? json(*rep.sdepth) : json(nullptr);
        detail::emit(out, j);
      }
      if (!rep.valid) {
        err << "error[domain]: invalid partition: " << rep.diagnostic << "\n";
        return kDomain;
      }
    } else if (sd->parsed()) {
      const Poset p = json_io::poset_from_json(json_io::parse(detail::read_input(poset_arg, in)));
      const SdepthResult r = sdepth_bruteforce(p, detail::bruteforce_cap());
      const std::int64_t q = poset_qdepth(p).qdepth;
      if (table) {
        out << "sdepth\t" << r.sdepth << "\nqdepth\t" << q << "\n";
      } else {
        detail::emit(out, {{"sdepth", r.sdepth}, {"qdepth", q}, {"witness", json_io::to_json(r.witness)}});
      }
    } else if (sw->parsed()) {
      const auto [a_lo, a_hi] = detail::parse_range(a_range);
      const auto [b_lo, b_hi] = detail::parse_range(b_range);
      out << "a,b,alpha,predicted,computed,agree\n";
      for (std::int64_t a = a_lo; a <= a_hi; ++a) {
        for (std::int64_t b = b_lo; b <= b_hi; ++b) {
          const auto row = detail::closed_form_row(family, a, b, degree);
          out << a << "," << b << "," << row.alpha << "," << row.predicted.value << "," << row.computed << ","
              << (row.predicted.value == row.computed ? "true" : "false") << "\n";
        }
      }
    }
  } catch (const SchemaError& e) {
    err << "error[schema]: " << e.what() << "\n";
    return kSchema;
  } catch (const DomainError& e) {
    err << "error[domain]: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace qdepth::cli
