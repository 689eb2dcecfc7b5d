#pragma once

// Command-line front end. run() never lets an exception escape: domain
// errors exit 1 and usage errors exit 2, each with one JSON object on the
// error stream.

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lspace/acceptance.hpp"
#include "lspace/io.hpp"
#include "lspace/knotexpr.hpp"
#include "lspace/obstruct.hpp"
#include "lspace/semigroup.hpp"
#include "lspace/upsilon.hpp"

namespace lspace::cli {

enum class Format { Json, Csv, Text };

struct Options {
  std::string knot_text;
  bool poly = false;
  Format format = Format::Text;
  bool decimal = false;
  std::int64_t subdivisions = 0;
  std::optional<std::int64_t> k;
  std::int64_t kmin = 3;
  std::int64_t kmax = 10;
  std::vector<std::int64_t> p_list;
  std::string filter;
};

namespace detail {

using io::Json;

inline std::string num(const Rational& r, const Options& o) { return io::render(r, o.decimal); }

inline KnotCombination read_combination(const Options& o) {
  if (o.poly) return KnotCombination(KnotExpr::explicit_alexander(parse_polynomial(o.knot_text)));
  return parse(o.knot_text);
}

inline KnotExpr read_knot(const Options& o) {
  if (o.poly) return KnotExpr::explicit_alexander(parse_polynomial(o.knot_text));
  return parse_knot(o.knot_text);
}

inline void semigroup_cmd(const Options& o, std::ostream& out) {
  const KnotExpr k = read_knot(o);
  const FormalSemigroup s = semigroup_of(k);
  std::optional<std::vector<std::int64_t>> gens;
  if (cable_tower(k)) gens = iterated_torus_generators(k);
  const auto closure = is_semigroup(s);
  switch (o.format) {
    case Format::Json: {
      Json j;
      j["knot"] = k.to_string();
      j["alexander"] = io::to_json(alexander(k));
      const Json body = io::to_json(s, gens);
      for (const auto& [key, value] : body.items()) j[key] = value;
      j["closed"] = closure.closed;
      j["witness"] = io::to_json(closure)["witness"];
      out << j.dump() << "\n";
      break;
    }
    case Format::Csv:
      out << "n,in_S\n";
      for (std::int64_t n = 0; n <= 2 * s.genus(); ++n) out << n << "," << (s.contains(n) ? 1 : 0) << "\n";
      break;
    case Format::Text: {
      out << "knot: " << k.to_string() << "\n";
      out << "alexander: " << alexander(k).to_string() << "\n";
      out << "genus: " << s.genus() << "\n";
      out << "S: {";
      for (std::size_t i = 0; i < s.small_elements().size(); ++i) out << (i ? "," : "") << s.small_elements()[i];
      out << "} u Z>=" << 2 * s.genus() << "\n";
      if (gens) out << "generators: " << acceptance::join(*gens) << "\n";
      out << "closed: " << (closure.closed ? "yes" : "no");
      if (closure.witness) out << " (" << closure.witness->first << " + " << closure.witness->second << " not in S)";
      out << "\n";
      break;
    }
  }
}

inline void upsilon_cmd(const Options& o, std::ostream& out) {
  const auto f = upsilon_of_combination(read_combination(o));
  switch (o.format) {
    case Format::Json: out << io::to_json(f).dump() << "\n"; break;
    case Format::Csv: out << io::points_csv(f, o.subdivisions, o.decimal); break;
    case Format::Text: {
      const auto vals = f.values();
      for (std::size_t i = 0; i < f.segment_count(); ++i) {
        const Rational intercept = vals[i] - f.slopes()[i] * f.breakpoints()[i];
        out << "[" << num(f.breakpoints()[i], o) << ", " << num(f.breakpoints()[i + 1], o) << "]: " << num(f.slopes()[i], o)
            << "*t + " << num(intercept, o) << "\n";
      }
      break;
    }
  }
}

inline void jumps_cmd(const Options& o, std::ostream& out) {
  const auto f = upsilon_of_combination(read_combination(o));
  const auto spectrum = jump_spectrum(f);
  switch (o.format) {
    case Format::Json: {
      Json j;
      j["jumps"] = io::to_json(spectrum);
      Json tests = Json::array();
      for (auto p : o.p_list) {
        auto cmp = jump_equality(f, p);
        Json row;
        row["p"] = p;
        row["equal"] = cmp.equal;
        row["jump_at_2_over_p"] = to_string(cmp.at_two_over_p);
        row["jump_at_4_over_p"] = to_string(cmp.at_four_over_p);
        tests.push_back(std::move(row));
      }
      j["equality_tests"] = std::move(tests);
      out << j.dump() << "\n";
      break;
    }
    case Format::Csv:
      out << "t,jump\n";
      for (const auto& [t, jump] : spectrum.jumps) out << num(t, o) << "," << num(jump, o) << "\n";
      break;
    case Format::Text:
      for (const auto& [t, jump] : spectrum.jumps) out << num(t, o) << ": " << num(jump, o) << "\n";
      for (auto p : o.p_list) {
        auto cmp = jump_equality(f, p);
        out << "p=" << p << ": " << (cmp.equal ? "equal" : "unequal") << " (" << num(cmp.at_two_over_p, o) << " vs "
            << num(cmp.at_four_over_p, o) << ")\n";
      }
      break;
  }
}

inline std::string coefficient_map(const std::map<std::int64_t, Rational>& coeffs, const Options& o) {
  std::string s = "{";
  bool first = true;
  for (const auto& [n, c] : coeffs) {
    s += (first ? "\"" : ", \"") + std::to_string(n) + "\": " + num(c, o);
    first = false;
  }
  return s + "}";
}

inline void decompose_cmd(const Options& o, std::ostream& out) {
  const auto d = decompose_into_consecutive_torus(upsilon_of_combination(read_combination(o)));
  switch (o.format) {
    case Format::Json: out << io::to_json(d).dump() << "\n"; break;
    case Format::Csv:
      out << "n,coefficient\n";
      for (const auto& [n, c] : d.coefficients) out << n << "," << num(c, o) << "\n";
      break;
    case Format::Text:
      if (d.success) {
        out << coefficient_map(d.coefficients, o) << "\n";
      } else {
        out << "failed: " << to_string(d.failure_reason) << " at t = " << num(d.failure_location, o) << " after "
            << coefficient_map(d.coefficients, o) << "\n";
      }
      break;
  }
}

inline void obstruct_cmd(const Options& o, std::ostream& out) {
  const auto report = algebraicity_report(read_knot(o));
  if (o.format == Format::Json) {
    out << io::to_json(report).dump() << "\n";
    return;
  }
  if (o.format == Format::Csv) {
    out << "obstruction,fires,anchor\n";
    auto fires = [&](const std::string& name) {
      for (const auto& r : report.reasons)
        if (r.obstruction == name) return 1;
      return 0;
    };
    out << "semigroup_closure," << fires("semigroup_closure") << ",\"" << anchors::kSemigroupClosure << "\"\n";
    out << "jump_equality," << fires("jump_equality") << ",\"" << anchors::kJumpEquality << "\"\n";
    out << "decomposition," << fires("decomposition") << ",\"" << anchors::kDecomposition << "\"\n";
    out << "index_criterion," << fires("index_criterion") << ",\"" << anchors::kIndexCriterion << "\"\n";
    return;
  }
  out << "knot: " << report.knot.to_string() << "\n";
  out << "verdict: " << to_string(report.verdict) << "\n";
  for (const auto& r : report.reasons) out << "  " << r.obstruction << ": " << r.detail << " [" << r.anchor << "]\n";
}

inline void lambda_cmd(const Options& o, std::ostream& out) {
  const auto f = upsilon_of_combination(read_combination(o));
  std::int64_t lo = o.k ? *o.k : o.kmin;
  std::int64_t hi = o.k ? *o.k : o.kmax;
  if (lo < 2 || hi < lo) throw Error(ErrorCode::DomainError, "lambda requires 2 <= k (and kmin <= kmax)");
  switch (o.format) {
    case Format::Json: {
      Json rows = Json::array();
      for (auto k = lo; k <= hi; ++k) {
        const auto v = lambda(k, f);
        Json row;
        row["k"] = k;
        row["lambda"] = to_string(v);
        row["integer"] = is_integer(v);
        rows.push_back(std::move(row));
      }
      out << (o.k ? rows[0].dump() : rows.dump()) << "\n";
      break;
    }
    case Format::Csv:
      out << "k,lambda\n";
      for (auto k = lo; k <= hi; ++k) out << k << "," << num(lambda(k, f), o) << "\n";
      break;
    case Format::Text:
      if (o.k) {
        out << num(lambda(*o.k, f), o) << "\n";
      } else {
        for (auto k = lo; k <= hi; ++k) out << "lambda_" << k << " = " << num(lambda(k, f), o) << "\n";
      }
      break;
  }
}

inline void matrix_cmd(const Options& o, std::ostream& out) {
  const auto m = independence_matrix(o.kmin, o.kmax);
  switch (o.format) {
    case Format::Json: out << io::to_json(m).dump() << "\n"; break;
    case Format::Csv: out << io::matrix_csv(m, o.decimal); break;
    case Format::Text:
      for (auto k = m.kmin; k <= m.kmax; ++k) {
        out << "J_" << k << ":";
        for (auto i = m.kmin; i <= m.kmax; ++i) out << " " << num(m.at(k, i), o);
        out << "\n";
      }
      break;
  }
}

inline void error_object(std::ostream& err, std::string_view code, const std::string& message,
                         std::optional<std::size_t> offset = std::nullopt) {
  Json j;
  j["error"] = std::string(code);
  j["message"] = message;
  if (offset) j["offset"] = *offset;
  err << j.dump() << "\n";
}

}  // namespace detail

/// Exit codes: 0 success, 1 domain error, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Formal semigroups, Upsilon and algebraicity obstructions for L-space knots", "lspace"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
  auto add_common = [&](CLI::App* sub, bool needs_knot) {
    if (needs_knot) {
      sub->add_option("knot", o.knot_text, "Knot or combination, e.g. \"2*T(3,4) - J(3)\"")->required();
      sub->add_flag("--poly", o.poly, "Read the knot argument as an Alexander polynomial such as \"1 - t + t^2\"");
    }
    sub->add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_flag("--decimal", o.decimal, "Render rationals as decimals (text and csv only)");
  };

  auto* semigroup = app.add_subcommand("semigroup", "Formal semigroup of an L-space knot");
  add_common(semigroup, true);
  auto* upsilon = app.add_subcommand("upsilon", "Upsilon as an exact piecewise-linear function");
  add_common(upsilon, true);
  upsilon->add_option("--subdivisions", o.subdivisions, "Extra uniform plot points for csv output")
      ->check(CLI::NonNegativeNumber);
  auto* jumps = app.add_subcommand("jumps", "Derivative jumps of Upsilon");
  add_common(jumps, true);
  jumps->add_option("--p", o.p_list, "Odd p >= 3 to test jump equality at 2/p and 4/p")->delimiter(',');
  auto* decompose = app.add_subcommand("decompose", "Decompose Upsilon over Upsilon of T(n,n+1)");
  add_common(decompose, true);
  auto* obstruct = app.add_subcommand("obstruct", "Run every algebraicity obstruction");
  add_common(obstruct, true);
  auto* lambda_sub = app.add_subcommand("lambda", "lambda_k homomorphisms");
  add_common(lambda_sub, true);
  auto* k_opt = lambda_sub->add_option("--k", o.k, "Single k");
  lambda_sub->add_option("--kmin", o.kmin, "Smallest k")->excludes(k_opt);
  lambda_sub->add_option("--kmax", o.kmax, "Largest k")->excludes(k_opt);
  auto* matrix = app.add_subcommand("matrix", "lambda_i(J_k) independence matrix");
  add_common(matrix, false);
  matrix->add_option("--kmin", o.kmin, "Smallest k (>= 3)");
  matrix->add_option("--kmax", o.kmax, "Largest k");
  auto* verify = app.add_subcommand("verify-paper", "Run the reproduction checks");
  verify->add_option("--filter", o.filter, "Only run checks with this id or tag");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    detail::error_object(err, "UsageError", e.what());
    return 2;
  }

  try {
    if (*semigroup) detail::semigroup_cmd(o, out);
    else if (*upsilon) detail::upsilon_cmd(o, out);
    else if (*jumps) detail::jumps_cmd(o, out);
    else if (*decompose) detail::decompose_cmd(o, out);
    else if (*obstruct) detail::obstruct_cmd(o, out);
    else if (*lambda_sub) detail::lambda_cmd(o, out);
    else if (*matrix) detail::matrix_cmd(o, out);
    else if (*verify) return acceptance::run_checks(o.filter, out);
  } catch (const SyntaxError& e) {
    detail::error_object(err, to_string(e.code()), e.what(), e.offset());
    return 1;
  } catch (const Error& e) {
    detail::error_object(err, to_string(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    detail::error_object(err, "InternalError", e.what());
    return 1;
  }
  return 0;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace lspace::cli
