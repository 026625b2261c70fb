#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainops/census.hpp"
#include "chainops/nary.hpp"
#include "chainops/pathform.hpp"
#include "chainops/predicates.hpp"
#include "chainops/render.hpp"
#include "chainops/serialization.hpp"
#include "chainops/verification.hpp"

namespace chainops::cli {

// Exit codes: 0 success, 1 verification failure (a checked property was
// violated), 2 usage error, 3 input/format error.
enum ExitCode : int { exit_ok = 0, exit_verification = 1, exit_usage = 2, exit_input = 3 };

namespace cli_detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

inline BinaryOpTable load_table(const std::string& path) {
  std::string text = read_input(path);
  if (looks_like_json(text)) {
    auto j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::syntax_error, "invalid JSON in '" + path + "'");
    return table_from_json(j);
  }
  return parse_table(text);
}

inline NAryOpTable load_nary_table(const std::string& path) {
  std::string text = read_input(path);
  if (looks_like_json(text)) {
    auto j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::syntax_error, "invalid JSON in '" + path + "'");
    return nary_table_from_json(j);
  }
  return parse_nary_table(text);
}

inline const char* yn(bool b) { return b ? "yes" : "no"; }

inline void print_report_text(const PropertyReport& r, std::ostream& out) {
  out << "k:                  " << r.k << "\n"
      << "idempotent:         " << yn(r.idempotent) << "\n"
      << "quasitrivial:       " << yn(r.quasitrivial) << "\n"
      << "nondecreasing:      " << yn(r.nondecreasing) << "\n"
      << "monotone:           " << yn(r.monotone) << "\n"
      << "symmetric:          " << yn(r.symmetric) << "\n"
      << "associative:        " << yn(r.associative) << "\n"
      << "bisymmetric:        " << yn(r.bisymmetric) << "\n";
  out << "neutral:            ";
  if (r.neutral)
    out << *r.neutral << "\n";
  else
    out << "(none)\n";
  if (r.upper_half_neutral) out << "upper half-neutral: " << *r.upper_half_neutral << "\n";
  if (r.lower_half_neutral) out << "lower half-neutral: " << *r.lower_half_neutral << "\n";
  if (r.witnesses.empty()) {
    out << "witnesses:          (none)\n";
  } else {
    out << "witnesses:\n";
    for (const auto& w : r.witnesses) out << "  - " << describe(w) << "\n";
  }
}

inline Json nary_witness_to_json(const NAryWitness& w) {
  Json j;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NAryNotIdempotent>) {
          j = Json{{"kind", "not_idempotent"}, {"x", v.x}};
        } else if constexpr (std::is_same_v<T, NAryNotQuasitrivial>) {
          j = Json{{"kind", "not_quasitrivial"}, {"args", v.args}};
        } else if constexpr (std::is_same_v<T, NAryNotNondecreasing>) {
          j = Json{{"kind", "not_nondecreasing"}, {"args", v.args}, {"var", v.var}};
        } else if constexpr (std::is_same_v<T, NAryNotMonotone>) {
          j = Json{{"kind", "not_monotone"},
                   {"var", v.var},
                   {"inc_args", v.inc_args},
                   {"dec_args", v.dec_args}};
        } else if constexpr (std::is_same_v<T, NAryNotAssociative>) {
          j = Json{{"kind", "not_associative"}, {"i", v.i}, {"args", v.args}};
        } else if constexpr (std::is_same_v<T, NAryNotBisymmetric>) {
          j = Json{{"kind", "not_bisymmetric"}, {"matrix", v.matrix}};
        }
      },
      w);
  return j;
}

struct NAryReportLine {
  const char* name;
  NAryCheck check;
};

inline int exit_for(const Error& e) {
  switch (e.code()) {
    case errc::mismatch:
    case errc::bijection_failure:
    case errc::internal_contradiction: return exit_verification;
    default: return exit_input;
  }
}

}  // namespace cli_detail

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"associative quasitrivial nondecreasing operations on finite chains"};
  app.require_subcommand(1);

  // props
  std::string props_table;
  bool props_json = false;
  auto* props = app.add_subcommand("props", "analyze a binary operation table");
  props->add_option("--table", props_table, "table file in text or JSON form, or - for stdin")
      ->required();
  props->add_flag("--json", props_json, "emit the report as JSON");

  // decompose
  std::string dec_table;
  bool dec_json = false;
  auto* dec = app.add_subcommand("decompose", "decompose a table into its downward-right path");
  dec->add_option("--table", dec_table, "table file or -")->required();
  dec->add_flag("--json", dec_json, "emit the decomposition as JSON");

  // synthesize
  std::string synth_spec;
  bool synth_json = false;
  auto* synth = app.add_subcommand("synthesize", "reconstruct a table from a path spec");
  synth->add_option("spec", synth_spec, "path spec, e.g. \"k=6; R D Gx R\"")->required();
  synth->add_flag("--json", synth_json, "emit the table as JSON");

  // enumerate
  int enum_k = 0;
  std::string enum_filter;
  long long enum_limit = -1;
  std::string enum_format = "text";
  auto* enumerate = app.add_subcommand("enumerate", "stream quasitrivial nondecreasing tables");
  enumerate->add_option("--k", enum_k, "chain size (1..6)")->required();
  enumerate->add_option("--filter", enum_filter,
                        "comma list over assoc,bisym,sym,neutral");
  enumerate->add_option("--limit", enum_limit, "emit at most N tables from the head");
  enumerate->add_option("--format", enum_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // count
  int count_kmax = 0;
  std::string count_format = "text";
  bool count_brute = false;
  auto* count = app.add_subcommand("count", "exact counts A_k, B_k, C_k, D_k");
  count->add_option("--kmax", count_kmax, "largest chain size")->required();
  count->add_option("--format", count_format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  count->add_flag("--brute", count_brute, "recount from the census (k <= 6)");

  // verify
  int verify_kmax = 4;
  auto* verify = app.add_subcommand("verify", "run the theorem suite");
  verify->add_option("--kmax", verify_kmax, "exhaustive bound (default 4)")
      ->check(CLI::Range(1, 6));

  // render
  std::string render_table, render_format = "text", render_path;
  int render_cell = 32;
  auto* render = app.add_subcommand("render", "contour plot of a table");
  render->add_option("--table", render_table, "table file or -")->required();
  render->add_option("--format", render_format, "text (ASCII) or svg")
      ->check(CLI::IsMember({"text", "svg"}));
  render->add_option("--path", render_path, "path spec to overlay");
  render->add_option("--cell-size", render_cell, "SVG cell size in px")->check(CLI::Range(4, 256));

  // nary
  auto* nary = app.add_subcommand("nary", "n-ary operations");
  nary->require_subcommand(1);
  std::string nd_table;
  int nd_arity = 3;
  bool nd_json = false;
  auto* nderive = nary->add_subcommand("derive", "fold a binary table to arity n");
  nderive->add_option("--table", nd_table, "binary table file or -")->required();
  nderive->add_option("--arity", nd_arity, "target arity (default 3)")->check(CLI::Range(2, 20));
  nderive->add_flag("--json", nd_json, "emit JSON");
  std::string nr_table;
  bool nr_json = false;
  auto* nreduce = nary->add_subcommand("reduce", "reduce an n-ary table to binary");
  nreduce->add_option("--table", nr_table, "n-ary table file or -")->required();
  nreduce->add_flag("--json", nr_json, "emit JSON");
  std::string np_table;
  bool np_json = false;
  auto* nprops = nary->add_subcommand("props", "predicates of an n-ary table");
  nprops->add_option("--table", np_table, "n-ary table file or -")->required();
  nprops->add_flag("--json", np_json, "emit JSON");
  int npar_arity = 3;
  bool npar_json = false;
  auto* nparity = nary->add_subcommand("parity", "odd-arity irreducible fixture on L_2");
  nparity->add_option("--arity", npar_arity, "odd arity >= 3")->check(CLI::Range(3, 19));
  nparity->add_flag("--json", npar_json, "emit JSON");

  std::vector<const char*> cargs;
  cargs.reserve(argv.size());
  for (const auto& a : argv) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (props->parsed()) {
      auto table = cli_detail::load_table(props_table);
      auto report = analyze(table);
      if (props_json)
        out << report_to_json(report).dump(2) << "\n";
      else
        cli_detail::print_report_text(report, out);
      return exit_ok;
    }

    if (dec->parsed()) {
      auto table = cli_detail::load_table(dec_table);
      auto d = decompose(table);
      if (dec_json)
        out << decomposition_to_json(d).dump(2) << "\n";
      else
        out << format_path_spec(d) << "\n";
      return exit_ok;
    }

    if (synth->parsed()) {
      auto d = parse_path_spec(synth_spec);
      auto table = reconstruct(d);
      if (synth_json)
        out << table_to_json(table).dump(2) << "\n";
      else
        out << format_table(table);
      return exit_ok;
    }

    if (enumerate->parsed()) {
      EnumFilter filter;
      if (!enum_filter.empty()) {
        std::istringstream fs(enum_filter);
        std::string tok;
        while (std::getline(fs, tok, ',')) {
          if (tok == "assoc")
            filter.require_associative = true;
          else if (tok == "bisym")
            filter.require_bisymmetric = true;
          else if (tok == "sym")
            filter.require_symmetric = true;
          else if (tok == "neutral")
            filter.require_neutral = true;
          else
            fail(errc::syntax_error, "unknown filter '" + tok + "'");
        }
      }
      auto tables = enumerate_filtered(enum_k, filter);
      std::size_t limit = enum_limit < 0 ? tables.size()
                                         : std::min<std::size_t>(tables.size(),
                                                                 static_cast<std::size_t>(enum_limit));
      if (enum_format == "json") {
        Json arr = Json::array();
        for (std::size_t i = 0; i < limit; ++i) arr.push_back(table_to_json(tables[i]));
        out << arr.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < limit; ++i) {
          if (i) out << "\n";
          out << format_table(tables[i]);
        }
      }
      return exit_ok;
    }

    if (count->parsed()) {
      CountTable t = count_brute ? make_count_table_brute(count_kmax)
                                 : make_count_table(count_kmax);
      if (count_format == "json") {
        out << count_table_to_json(t).dump(2) << "\n";
      } else if (count_format == "csv") {
        out << "k,A,B,C,D,provenance\n";
        for (int k = 1; k <= t.k_max; ++k) {
          std::size_t i = static_cast<std::size_t>(k - 1);
          out << k << ',' << t.A[i] << ',' << t.B[i] << ',' << t.C[i] << ',' << t.D[i] << ','
              << provenance_name(t.provenance[i]) << "\n";
        }
      } else {
        auto row = [&](const char* name, const std::vector<BigInt>& xs) {
          out << name << ':';
          for (const auto& v : xs) out << ' ' << v;
          out << "\n";
        };
        out << "k:";
        for (int k = 1; k <= t.k_max; ++k) out << ' ' << k;
        out << "\n";
        row("A", t.A);
        row("B", t.B);
        row("C", t.C);
        row("D", t.D);
        out << "provenance: " << provenance_name(t.provenance.front()) << "\n";
      }
      return exit_ok;
    }

    if (verify->parsed()) {
      auto checks = run_verification(verify_kmax);
      std::size_t failures = 0;
      for (const auto& c : checks) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.tag << ": " << c.detail << "\n";
        if (!c.pass) ++failures;
      }
      out << (failures == 0 ? "all " : "FAILED ") << checks.size() << " theorem checks"
          << (failures ? " (" + std::to_string(failures) + " failing)" : " passed") << "\n";
      return failures == 0 ? exit_ok : exit_verification;
    }

    if (render->parsed()) {
      auto table = cli_detail::load_table(render_table);
      std::optional<PathDecomposition> overlay;
      if (!render_path.empty()) overlay = parse_path_spec(render_path);
      const PathDecomposition* d = overlay ? &*overlay : nullptr;
      if (render_format == "svg") {
        RenderOptions opts;
        opts.cell_size = render_cell;
        out << render_svg(table, d, opts);
      } else {
        out << render_ascii(table, d);
      }
      return exit_ok;
    }

    if (nderive->parsed()) {
      auto g = cli_detail::load_table(nd_table);
      auto f = derive(g, nd_arity);
      if (nd_json)
        out << nary_table_to_json(f).dump(2) << "\n";
      else
        out << format_nary_table(f);
      return exit_ok;
    }

    if (nreduce->parsed()) {
      auto f = cli_detail::load_nary_table(nr_table);
      auto r = reduce(f);
      if (nr_json) {
        Json j;
        j["reducible"] = r.is_reduced();
        j["g"] = r.is_reduced() ? table_to_json(*r.reduced) : Json(nullptr);
        if (r.witness) {
          j["witness"] = Json{{"args_a", r.witness->args_a},
                              {"args_b", r.witness->args_b},
                              {"value_a", r.witness->value_a},
                              {"value_b", r.witness->value_b}};
        } else {
          j["witness"] = nullptr;
        }
        out << j.dump(2) << "\n";
      } else if (r.is_reduced()) {
        out << "reducible\n" << format_table(*r.reduced);
      } else {
        out << "not reducible: F" << detail::tuple_str(r.witness->args_a) << " = "
            << r.witness->value_a << " but the binary route gives F"
            << detail::tuple_str(r.witness->args_b) << " = " << r.witness->value_b << "\n";
      }
      return exit_ok;
    }

    if (nprops->parsed()) {
      auto f = cli_detail::load_nary_table(np_table);
      std::vector<cli_detail::NAryReportLine> lines = {
          {"idempotent", nary_is_idempotent(f)},
          {"quasitrivial", nary_is_quasitrivial(f)},
          {"nondecreasing", nary_is_nondecreasing(f)},
          {"monotone", nary_is_monotone(f)},
          {"associative", nary_is_associative(f)},
      };
      bool bisym_in_bounds = detail::pow_within(static_cast<std::size_t>(f.chain_size()),
                                                f.arity() * f.arity(), 1, std::size_t{1} << 24);
      if (bisym_in_bounds) lines.push_back({"bisymmetric", nary_is_bisymmetric(f)});
      auto neutral = nary_neutral_element(f);
      if (np_json) {
        Json j;
        j["n"] = f.arity();
        j["k"] = f.chain_size();
        for (const auto& l : lines) j[l.name] = l.check.holds;
        if (!bisym_in_bounds) j["bisymmetric"] = nullptr;
        j["neutral"] = neutral ? Json(*neutral) : Json(nullptr);
        Json ws = Json::array();
        for (const auto& l : lines)
          if (l.check.witness) ws.push_back(cli_detail::nary_witness_to_json(*l.check.witness));
        j["witnesses"] = std::move(ws);
        out << j.dump(2) << "\n";
      } else {
        out << "n: " << f.arity() << "\nk: " << f.chain_size() << "\n";
        for (const auto& l : lines) out << l.name << ": " << cli_detail::yn(l.check.holds) << "\n";
        if (!bisym_in_bounds) out << "bisymmetric: (skipped, above sweep bound)\n";
        out << "neutral: ";
        if (neutral)
          out << *neutral << "\n";
        else
          out << "(none)\n";
        for (const auto& l : lines)
          if (l.check.witness) out << "  - " << describe(*l.check.witness) << "\n";
      }
      return exit_ok;
    }

    if (nparity->parsed()) {
      auto f = parity_counterexample(npar_arity);
      if (npar_json)
        out << nary_table_to_json(f).dump(2) << "\n";
      else
        out << format_nary_table(f);
      return exit_ok;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return cli_detail::exit_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_usage;
}

}  // namespace chainops::cli
