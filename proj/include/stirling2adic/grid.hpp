#pragma once
// Parameter grids and structured verification reports.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stirling2adic/bignat.hpp"

namespace s2a {

/// Named integer ranges driving a verifier, plus per-instance resource caps.
/// Instances are always precondition-filtered by the verifier itself.
struct GridSpec {
  std::map<std::string, std::vector<i64>> values;
  u64 exact_threshold = 5000;   // largest first argument served exactly
  unsigned precision_cap = 4096;
  bool deep = false;

  bool has(const std::string& name) const { return values.count(name) != 0; }

  const std::vector<i64>& get(const std::string& name,
                              const std::vector<i64>& fallback) const {
    auto it = values.find(name);
    return it == values.end() ? fallback : it->second;
  }

  GridSpec& set(const std::string& name, std::vector<i64> vs) {
    values[name] = std::move(vs);
    return *this;
  }

  GridSpec& set_range(const std::string& name, i64 lo, i64 hi) {
    std::vector<i64> vs;
    for (i64 v = lo; v <= hi; ++v) vs.push_back(v);
    return set(name, std::move(vs));
  }

  /// Parses "name=1..8" or "name=1,3,5" into an override.
  void apply_override(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("grid override must look like name=lo..hi or name=a,b,c");
    std::string name = text.substr(0, eq);
    std::string rhs = text.substr(eq + 1);
    if (rhs.empty()) throw std::invalid_argument("grid override: empty range");
    auto dots = rhs.find("..");
    std::vector<i64> vs;
    if (dots != std::string::npos) {
      i64 lo = std::stoll(rhs.substr(0, dots));
      i64 hi = std::stoll(rhs.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("grid override: hi < lo");
      for (i64 v = lo; v <= hi; ++v) vs.push_back(v);
    } else {
      std::size_t pos = 0;
      while (pos < rhs.size()) {
        auto comma = rhs.find(',', pos);
        if (comma == std::string::npos) comma = rhs.size();
        vs.push_back(std::stoll(rhs.substr(pos, comma - pos)));
        pos = comma + 1;
      }
    }
    set(name, std::move(vs));
  }
};

using Params = std::vector<std::pair<std::string, i64>>;

struct Failure {
  Params params;
  std::string expected;
  std::string observed;
};

struct Flag {
  std::string kind;
  Params params;
  std::string detail;
};

enum class Status { pass, fail, partial };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "partial";
  }
}

struct VerificationReport {
  std::string claim;
  GridSpec grid;
  u64 checked = 0;
  u64 filtered = 0;  // instances rejected by precondition filtering
  u64 capped = 0;    // instances abandoned at a resource cap
  std::vector<Failure> failures;
  std::vector<Flag> flags;
  std::vector<std::pair<std::string, u64>> counters;

  Status status() const {
    if (!failures.empty()) return Status::fail;
    if (capped > 0) return Status::partial;
    return Status::pass;
  }

  void bump(const std::string& counter, u64 by = 1) {
    for (auto& [name, v] : counters)
      if (name == counter) {
        v += by;
        return;
      }
    counters.emplace_back(counter, by);
  }

  u64 counter(const std::string& name) const {
    for (const auto& [n, v] : counters)
      if (n == name) return v;
    return 0;
  }
};

}  // namespace s2a
