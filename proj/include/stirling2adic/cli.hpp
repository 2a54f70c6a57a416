#pragma once
// Command-line front end: compute, measure, verify, explore.
// Exit codes: 0 pass, 1 verified violation (or non-pass verification),
// 2 usage or configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stirling2adic/defaults.hpp"
#include "stirling2adic/report_io.hpp"
#include "stirling2adic/series.hpp"
#include "stirling2adic/stirling_exact.hpp"

namespace s2a {

struct RunConfig {
  unsigned precision_cap = 4096;
  u64 exact_cap = 20000;
  unsigned workers = 1;
  std::string format = "text";  // json | csv | text
  std::string out_path;
  bool deep = false;

  std::string summary() const {
    std::ostringstream s;
    s << "cap=" << precision_cap << " exact-cap=" << exact_cap
      << " workers=" << workers << " format=" << format << " deep=" << (deep ? 1 : 0);
    return s.str();
  }
};

namespace cli_detail {

inline int config_error(std::ostream& err, const std::string& msg) {
  err << "error: " << msg << "\n";
  return 2;
}

inline void emit(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                 const std::string& payload) {
  if (cfg.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) {
    err << "error: cannot open output path " << cfg.out_path << "\n";
    throw CLI::RuntimeError(2);
  }
  f << payload;
}

inline std::optional<unsigned> workers_from_env(std::ostream& err, bool& bad) {
  const char* env = std::getenv("STIRLING2ADIC_WORKERS");
  if (!env || !*env) return std::nullopt;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || v < 1) {
    err << "error: STIRLING2ADIC_WORKERS must be a positive integer\n";
    bad = true;
    return std::nullopt;
  }
  return static_cast<unsigned>(v);
}

}  // namespace cli_detail

/// Runs the tool on an argument vector (no program name). Streams are
/// injectable so the CLI surface is testable in-process.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  RunConfig cfg;
  bool bad_env = false;
  if (auto w = cli_detail::workers_from_env(err, bad_env)) cfg.workers = *w;
  if (bad_env) return 2;

  CLI::App app{"Stirling numbers of the second kind: exact values, residues "
               "mod 2^M, certified 2-adic valuations of differences, and "
               "mechanical verification of their congruence laws"};
  app.name("stirling2adic");
  app.require_subcommand(1);
  app.add_option("--cap", cfg.precision_cap, "precision cap (modulus exponent)")
      ->check(CLI::Range(4u, 1u << 20));
  app.add_option("--exact-cap", cfg.exact_cap, "largest n served by exact mode")
      ->check(CLI::Range(u64{16}, u64{10'000'000}));
  auto* workers_opt =
      app.add_option("--workers", cfg.workers, "worker thread count")
          ->check(CLI::Range(1u, 512u));
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out_path, "write the report to this path");
  app.add_flag("--deep", cfg.deep, "extended desk-scale grids");

  // stirling <n> <k>
  u64 arg_n = 0, arg_k = 0;
  bool use_exact = false, use_gf = false, all_backends = false;
  std::optional<unsigned> mod_m;
  auto* cmd_stirling = app.add_subcommand("stirling", "compute S(n,k)");
  cmd_stirling->fallthrough();
  cmd_stirling->add_option("n", arg_n, "row index")->required();
  cmd_stirling->add_option("k", arg_k, "block count")->required();
  cmd_stirling->add_flag("--exact", use_exact, "exact arbitrary-precision backend");
  cmd_stirling->add_option("--mod", mod_m, "residue mod 2^M backend")
      ->check(CLI::Range(1u, 64u));
  cmd_stirling->add_flag("--via-gf", use_gf,
                         "generating-function backend (needs --mod)");
  cmd_stirling->add_flag("--all-backends", all_backends,
                         "run every applicable backend and assert agreement");

  // stirling-diff <a> <b> <n> <k>
  u64 arg_a = 0, arg_b = 0;
  auto* cmd_diff = app.add_subcommand("stirling-diff",
                                      "exact signed S(a*2^n,k) - S(b*2^n,k)");
  cmd_diff->fallthrough();
  cmd_diff->add_option("a", arg_a)->required();
  cmd_diff->add_option("b", arg_b)->required();
  cmd_diff->add_option("n", arg_n)->required();
  cmd_diff->add_option("k", arg_k)->required();

  // nu2-diff <a> <b> <n> <k>
  auto* cmd_nu2 = app.add_subcommand(
      "nu2-diff", "certified nu2 of S(a*2^n,k) - S(b*2^n,k); requires a >= b");
  cmd_nu2->fallthrough();
  cmd_nu2->add_option("a", arg_a)->required();
  cmd_nu2->add_option("b", arg_b)->required();
  cmd_nu2->add_option("n", arg_n)->required();
  cmd_nu2->add_option("k", arg_k)->required();

  // verify <target>
  std::string target;
  std::vector<std::string> grid_overrides;
  auto* cmd_verify = app.add_subcommand("verify", "verify a lemma or theorem claim");
  cmd_verify->fallthrough();
  cmd_verify->add_option("target", target, "claim id or 'all'")->required();
  cmd_verify->add_option("--grid", grid_overrides,
                         "grid override, name=lo..hi or name=a,b,c");

  // explore <k>
  auto* cmd_explore =
      app.add_subcommand("explore", "gather f(k) evidence for the conjecture");
  cmd_explore->fallthrough();
  cmd_explore->add_option("k", arg_k)->required();
  cmd_explore->add_option("--grid", grid_overrides,
                          "grid override, name=lo..hi or name=a,b,c");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (workers_opt->count() == 0 && cfg.workers < 1) cfg.workers = 1;

  ReportHeader header{cfg.summary()};
  ExactCaps caps{cfg.exact_cap, 4096};

  try {
    if (cmd_stirling->parsed()) {
      const bool has_mod = mod_m.has_value();
      if (use_gf && !has_mod)
        return cli_detail::config_error(err, "--via-gf requires --mod M");
      if (use_gf && arg_k < 1)
        return cli_detail::config_error(err, "--via-gf requires k >= 1");
      if (!all_backends) {
        if (use_exact == has_mod)  // neither, or both
          return cli_detail::config_error(
              err, "select exactly one backend: --exact or --mod M (add --via-gf "
                   "to route --mod through the generating function)");
      }
      struct Line {
        std::string backend;
        std::string value;
      };
      std::vector<Line> lines;
      std::optional<BigNat> exact_value;
      if (use_exact || all_backends) {
        exact_value = stirling_rec(arg_n, arg_k, caps);
        lines.push_back({"exact", exact_value->to_decimal()});
      }
      if (has_mod || all_backends) {
        unsigned m = mod_m.value_or(64);
        if (!use_gf || all_backends) {
          BigNat r = stirling_mod(arg_n, arg_k, m);
          lines.push_back({"mod", r.to_decimal()});
        }
        if (use_gf || (all_backends && arg_k >= 1 && arg_k <= arg_n)) {
          u64 j = arg_n >= arg_k ? arg_n - arg_k : 0;
          u64 r = arg_k > arg_n
                      ? 0
                      : stirling_via_gf(arg_k, static_cast<u32>(j), m)[j];
          lines.push_back({"via-gf", std::to_string(r)});
        }
        if (all_backends) {
          // agreement: every backend must coincide mod 2^m
          BigNat ref = exact_value->low_bits(m);
          for (const auto& line : lines) {
            if (line.backend == "exact") continue;
            if (BigNat::from_decimal(line.value) != ref) {
              err << "error: backend disagreement at " << line.backend << ": "
                  << line.value << " vs exact residue " << ref.to_decimal() << "\n";
              return 1;
            }
          }
        }
      }
      if (cfg.format == "json") {
        ordered_json j;
        j["header"] = header_json(header);
        ordered_json body;
        body["n"] = json_integer(arg_n);
        body["k"] = json_integer(arg_k);
        ordered_json vals = ordered_json::array();
        for (const auto& line : lines) {
          ordered_json one;
          one["backend"] = line.backend;
          one["value"] = json_integer(BigNat::from_decimal(line.value));
          vals.push_back(std::move(one));
        }
        body["values"] = std::move(vals);
        j["body"] = std::move(body);
        cli_detail::emit(cfg, out, err, j.dump(2) + "\n");
      } else if (cfg.format == "csv") {
        std::ostringstream s;
        s << "backend,value\n";
        for (const auto& line : lines) s << line.backend << "," << line.value << "\n";
        cli_detail::emit(cfg, out, err, s.str());
      } else {
        std::ostringstream s;
        if (lines.size() == 1)
          s << lines[0].value << "\n";
        else
          for (const auto& line : lines) s << line.backend << " " << line.value << "\n";
        cli_detail::emit(cfg, out, err, s.str());
      }
      return 0;
    }

    if (cmd_diff->parsed()) {
      if (arg_a < 1 || arg_b < 1 || arg_k < 1)
        return cli_detail::config_error(err, "stirling-diff requires a, b, k >= 1");
      BigInt d = stirling_diff_exact(arg_a, arg_b, arg_n, arg_k, caps);
      if (cfg.format == "json") {
        ordered_json j;
        j["header"] = header_json(header);
        j["body"] = {{"a", arg_a}, {"b", arg_b}, {"n", arg_n}, {"k", arg_k},
                     {"value", json_integer(d)}};
        cli_detail::emit(cfg, out, err, j.dump(2) + "\n");
      } else {
        cli_detail::emit(cfg, out, err, d.to_decimal() + "\n");
      }
      return 0;
    }

    if (cmd_nu2->parsed()) {
      if (arg_a < arg_b)
        return cli_detail::config_error(err, "nu2-diff requires a >= b");
      if (arg_a < 1 || arg_b < 1 || arg_k < 1)
        return cli_detail::config_error(err, "nu2-diff requires a, b, k >= 1");
      AdaptiveSchedule sched;
      sched.cap = cfg.precision_cap;
      AdaptiveValuation v = nu2_diff_adaptive(arg_a, arg_b, arg_n, arg_k, sched);
      if (cfg.format == "json") {
        ordered_json j;
        j["header"] = header_json(header);
        j["body"] = {{"a", arg_a}, {"b", arg_b}, {"n", arg_n}, {"k", arg_k},
                     {"result", to_json(v)}, {"precision", v.precision}};
        cli_detail::emit(cfg, out, err, j.dump(2) + "\n");
      } else {
        cli_detail::emit(cfg, out, err,
                         v.to_string() + " precision=" + std::to_string(v.precision) +
                             "\n");
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      std::vector<std::string> claims;
      if (target == "all") {
        claims = all_claims();
      } else {
        bool known = false;
        for (const auto& c : all_claims()) known = known || c == target;
        if (!known)
          return cli_detail::config_error(
              err, "unknown verify target '" + target + "' (try 'all')");
        claims.push_back(target);
      }
      std::vector<VerificationReport> reports;
      bool any_nonpass = false;
      for (const auto& claim : claims) {
        GridSpec grid = default_grid(claim, cfg.deep);
        grid.precision_cap = cfg.precision_cap;
        grid.exact_threshold = std::min<u64>(grid.exact_threshold, cfg.exact_cap);
        for (const auto& o : grid_overrides) grid.apply_override(o);
        VerificationReport rep = run_verifier(claim, grid, cfg.workers);
        any_nonpass = any_nonpass || rep.status() != Status::pass;
        reports.push_back(std::move(rep));
      }
      std::string payload;
      if (cfg.format == "json")
        payload = reports.size() == 1 ? report_json(reports[0], header)
                                      : reports_json(reports, header);
      else if (cfg.format == "csv")
        payload = report_csv(reports);
      else {
        std::ostringstream s;
        for (const auto& r : reports) s << report_text(r);
        payload = s.str();
      }
      cli_detail::emit(cfg, out, err, payload);
      return any_nonpass ? 1 : 0;
    }

    if (cmd_explore->parsed()) {
      if (arg_k < 3)
        return cli_detail::config_error(err, "explore requires k >= 3");
      GridSpec grid;
      grid.deep = cfg.deep;
      grid.precision_cap = cfg.precision_cap;
      if (cfg.deep) {
        grid.set_range("a", 2, 9);
        grid.set_range("b", 1, 8);
        const i64 lo = static_cast<i64>(std::max<u64>(2, ceil_log2(arg_k)));
        grid.set_range("n", lo, lo + 8);
      }
      for (const auto& o : grid_overrides) grid.apply_override(o);
      FitResult fit = explore_fk(arg_k, grid, cfg.workers);
      std::string payload;
      if (cfg.format == "json")
        payload = fit_json(fit, header);
      else if (cfg.format == "csv")
        payload = fit_csv(fit);
      else
        payload = fit_text(fit);
      cli_detail::emit(cfg, out, err, payload);
      return 0;
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::RuntimeError& e) {
    return e.get_exit_code();
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace s2a
