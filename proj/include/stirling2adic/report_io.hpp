#pragma once
// Deterministic report serialization. Same inputs and config yield
// byte-identical output: no timestamps, sorted grids, canonical instance
// order, and integers above 2^53 - 1 rendered as decimal strings.

#include <sstream>
#include <string>

#include <json.hpp>

#include "stirling2adic/adaptive.hpp"
#include "stirling2adic/grid.hpp"
#include "stirling2adic/theorem_verifiers.hpp"
#include "stirling2adic/version.hpp"

namespace s2a {

using ordered_json = nlohmann::ordered_json;

inline constexpr u64 kJsonIntLimit = (u64{1} << 53) - 1;  // lossless in doubles

inline ordered_json json_integer(u64 v) {
  if (v > kJsonIntLimit) return ordered_json(std::to_string(v));
  return ordered_json(v);
}

inline ordered_json json_integer(const BigNat& v) {
  if (v.fits_u64()) return json_integer(v.to_u64());
  return ordered_json(v.to_decimal());
}

inline ordered_json json_integer(const BigInt& v) {
  if (v.sign() >= 0) return json_integer(v.magnitude());
  if (v.magnitude().fits_u64() && v.magnitude().to_u64() <= kJsonIntLimit)
    return ordered_json(-static_cast<i64>(v.magnitude().to_u64()));
  return ordered_json(v.to_decimal());
}

inline ordered_json to_json(const AdaptiveValuation& v) {
  ordered_json j;
  switch (v.kind) {
    case AdaptiveValuation::Kind::exact:
      j["kind"] = "exact";
      j["value"] = v.value;
      break;
    case AdaptiveValuation::Kind::at_least:
      j["kind"] = "at-least";
      j["value"] = v.value;
      break;
    default:
      j["kind"] = "infinite";
      break;
  }
  return j;
}

inline ordered_json to_json(const GridSpec& grid) {
  ordered_json j;
  ordered_json ranges = ordered_json::object();
  for (const auto& [name, vs] : grid.values) ranges[name] = vs;  // map is sorted
  j["ranges"] = std::move(ranges);
  j["exact-threshold"] = grid.exact_threshold;
  j["precision-cap"] = grid.precision_cap;
  j["deep"] = grid.deep;
  return j;
}

inline ordered_json params_json(const Params& params) {
  ordered_json j = ordered_json::object();
  for (const auto& [name, v] : params) j[name] = v;
  return j;
}

inline std::string params_compact(const Params& params) {
  std::string out;
  for (const auto& [name, v] : params) {
    if (!out.empty()) out += ";";
    out += name + "=" + std::to_string(v);
  }
  return out;
}

struct ReportHeader {
  std::string config_summary;  // rendered RunConfig, stable text
};

inline ordered_json header_json(const ReportHeader& header) {
  ordered_json j;
  j["tool-version"] = kToolVersion;
  j["config"] = header.config_summary;
  return j;
}

inline ordered_json body_json(const VerificationReport& rep) {
  ordered_json b;
  b["claim"] = rep.claim;
  b["grid"] = to_json(rep.grid);
  b["checked"] = rep.checked;
  b["filtered"] = rep.filtered;
  b["capped"] = rep.capped;
  ordered_json counters = ordered_json::object();
  for (const auto& [name, v] : rep.counters) counters[name] = v;
  b["counters"] = std::move(counters);
  ordered_json failures = ordered_json::array();
  for (const auto& f : rep.failures) {
    ordered_json one;
    one["params"] = params_json(f.params);
    one["expected"] = f.expected;
    one["observed"] = f.observed;
    failures.push_back(std::move(one));
  }
  b["failures"] = std::move(failures);
  ordered_json flags = ordered_json::array();
  for (const auto& f : rep.flags) {
    ordered_json one;
    one["kind"] = f.kind;
    one["params"] = params_json(f.params);
    one["detail"] = f.detail;
    flags.push_back(std::move(one));
  }
  b["flags"] = std::move(flags);
  b["status"] = to_string(rep.status());
  return b;
}

inline std::string report_json(const VerificationReport& rep, const ReportHeader& header) {
  ordered_json j;
  j["header"] = header_json(header);
  j["body"] = body_json(rep);
  return j.dump(2) + "\n";
}

inline std::string reports_json(const std::vector<VerificationReport>& reps,
                                const ReportHeader& header) {
  ordered_json j;
  j["header"] = header_json(header);
  ordered_json bodies = ordered_json::array();
  for (const auto& r : reps) bodies.push_back(body_json(r));
  j["body"] = std::move(bodies);
  return j.dump(2) + "\n";
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

inline std::string report_csv(const std::vector<VerificationReport>& reps) {
  std::ostringstream out;
  out << "record,claim,params,expected,observed,detail\n";
  for (const auto& rep : reps) {
    out << "summary," << rep.claim << ",checked=" << rep.checked
        << ";filtered=" << rep.filtered << ";capped=" << rep.capped << ",,,"
        << to_string(rep.status()) << "\n";
    for (const auto& [name, v] : rep.counters)
      out << "counter," << rep.claim << "," << csv_escape(name) << ",," << v << ",\n";
    for (const auto& f : rep.failures)
      out << "failure," << rep.claim << "," << csv_escape(params_compact(f.params))
          << "," << csv_escape(f.expected) << "," << csv_escape(f.observed) << ",\n";
    for (const auto& f : rep.flags)
      out << "flag," << rep.claim << "," << csv_escape(params_compact(f.params))
          << ",,," << csv_escape(f.kind + ": " + f.detail) << "\n";
  }
  return out.str();
}

inline std::string report_text(const VerificationReport& rep) {
  std::ostringstream out;
  out << rep.claim << ": " << to_string(rep.status()) << " (checked " << rep.checked
      << ", filtered " << rep.filtered << ", capped " << rep.capped << ", failures "
      << rep.failures.size() << ", flags " << rep.flags.size() << ")\n";
  for (const auto& [name, v] : rep.counters)
    out << "  " << name << " = " << v << "\n";
  for (const auto& f : rep.failures)
    out << "  FAIL " << params_compact(f.params) << ": expected " << f.expected
        << ", observed " << f.observed << "\n";
  for (const auto& f : rep.flags)
    out << "  flag[" << f.kind << "] " << params_compact(f.params) << ": " << f.detail
        << "\n";
  return out.str();
}

inline ordered_json body_json(const FitResult& fit) {
  ordered_json b;
  b["claim"] = "conjecture1.1";
  b["k"] = fit.k;
  ordered_json samples = ordered_json::array();
  for (const auto& smp : fit.samples) {
    ordered_json one;
    one["a"] = smp.a;
    one["b"] = smp.b;
    one["n"] = smp.n;
    one["nu2"] = to_json(smp.measured);
    if (smp.f)
      one["f"] = *smp.f;
    else
      one["censored"] = true;
    samples.push_back(std::move(one));
  }
  b["samples"] = std::move(samples);
  if (fit.constant)
    b["constant"] = *fit.constant;
  else
    b["constant"] = nullptr;
  if (fit.stable_from)
    b["stable-from"] = *fit.stable_from;
  else
    b["stable-from"] = nullptr;
  b["censored"] = fit.censored;
  return b;
}

inline std::string fit_json(const FitResult& fit, const ReportHeader& header) {
  ordered_json j;
  j["header"] = header_json(header);
  j["body"] = body_json(fit);
  return j.dump(2) + "\n";
}

inline std::string fit_csv(const FitResult& fit) {
  std::ostringstream out;
  out << "k,a,b,n,nu2,f,censored\n";
  for (const auto& smp : fit.samples) {
    out << fit.k << "," << smp.a << "," << smp.b << "," << smp.n << ","
        << smp.measured.to_string() << ",";
    if (smp.f)
      out << *smp.f << ",0\n";
    else
      out << ",1\n";
  }
  return out.str();
}

inline std::string fit_text(const FitResult& fit) {
  std::ostringstream out;
  out << "explore k=" << fit.k << ": ";
  if (fit.constant)
    out << "constant f = " << *fit.constant << " (stable from n = " << *fit.stable_from
        << ")";
  else
    out << "no constant f over this grid";
  out << ", samples " << fit.samples.size() << ", censored " << fit.censored << "\n";
  for (const auto& smp : fit.samples) {
    out << "  a=" << smp.a << " b=" << smp.b << " n=" << smp.n << " nu2="
        << smp.measured.to_string();
    if (smp.f) out << " f=" << *smp.f;
    out << "\n";
  }
  return out.str();
}

}  // namespace s2a
