#pragma once
// Default verification grids (CI scale) with the extended --deep profile,
// and the claim-id dispatch used by the CLI and the test suites.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stirling2adic/lemma_verifiers.hpp"
#include "stirling2adic/theorem_verifiers.hpp"

namespace s2a {

inline const std::vector<std::string>& all_claims() {
  static const std::vector<std::string> claims = {
      "lemma2.2", "lemma2.3", "lemma2.4",  "lemma2.5",  "lemma2.6",
      "lemma2.7", "lemma2.8", "lemma2.9",  "lemma2.10", "lemma2.11",
      "lemma2.12", "thm1.1",  "thm1.2i",   "thm1.2ii",  "thm1.3"};
  return claims;
}

inline GridSpec default_grid(const std::string& claim, bool deep = false) {
  GridSpec g;
  g.deep = deep;
  auto odd_up_to = [](i64 hi) {
    std::vector<i64> v;
    for (i64 c = 1; c <= hi; c += 2) v.push_back(c);
    return v;
  };
  if (claim == "lemma2.2") {
    g.set("p", {2, 3, 5, 7});
    g.set_range("n", 1, deep ? 80 : 40);
  } else if (claim == "lemma2.3") {
    g.set_range("N", 2, deep ? 6 : 5);
    g.set("r", {1, 3, 5});
    g.set("t", {1, 3, 5});
    g.set_range("m", 1, deep ? 6 : 5);
  } else if (claim == "lemma2.4" || claim == "lemma2.5") {
    g.set_range("a", 1, deep ? 5 : 3);
    g.set_range("m", 3, deep ? 5 : 4);
    g.set("span", {deep ? 96 : 48});
  } else if (claim == "lemma2.6") {
    g.set_range("c", 1, deep ? 8 : 6);
    g.set_range("n", 1, deep ? 9 : 8);
  } else if (claim == "lemma2.7") {
    g.set_range("c", 1, deep ? 7 : 5);
    g.set_range("n", 2, deep ? 9 : 8);
  } else if (claim == "lemma2.8") {
    g.set_range("m", 3, deep ? 9 : 8);
  } else if (claim == "lemma2.9") {
    g.set_range("c", 1, deep ? 7 : 5);
    g.set_range("n", 3, deep ? 9 : 8);
  } else if (claim == "lemma2.10") {
    g.set_range("n", 2, deep ? 60 : 50);
  } else if (claim == "lemma2.11") {
    g.set("c", odd_up_to(7));
    g.set_range("s", 1, deep ? 9 : 8);
    g.set("t", {2, 3});
  } else if (claim == "lemma2.12") {
    g.set("c", odd_up_to(deep ? 7 : 5));
    g.set_range("r", 3, deep ? 9 : 8);
    g.set_range("s", 3, deep ? 9 : 8);
  } else if (claim == "thm1.1") {
    g.set("k", deep ? std::vector<i64>{4, 5, 6, 9, 10, 12, 17, 20, 24, 33}
                    : std::vector<i64>{4, 5, 6, 9, 10, 12});
    g.set_range("n", 2, deep ? 9 : 8);
    g.set_range("a", 2, 9);
    g.set_range("b", 1, 8);
  } else if (claim == "thm1.2i") {
    g.set_range("a", 2, deep ? 64 : 40);
    g.set_range("b", 1, deep ? 63 : 39);
    g.set_range("n", 2, deep ? 11 : 10);
  } else if (claim == "thm1.2ii") {
    g.set_range("a", 2, deep ? 64 : 40);
    g.set_range("b", 1, deep ? 63 : 39);
    g.set_range("n", 3, deep ? 11 : 10);
  } else if (claim == "thm1.3") {
    g.set("c", {1, 3, 5, 7});
    g.set_range("n", 2, deep ? 11 : 10);
  } else {
    throw std::invalid_argument("unknown claim: " + claim);
  }
  return g;
}

inline VerificationReport run_verifier(const std::string& claim, const GridSpec& grid,
                                       unsigned workers = 1) {
  if (claim == "lemma2.2") return verify_binomial_lift(grid, workers);
  if (claim == "lemma2.3") return verify_lte(grid, workers);
  if (claim == "lemma2.4") return verify_chan_manna_even_k(grid, workers);
  if (claim == "lemma2.5") return verify_chan_manna_odd_k(grid, workers);
  if (claim == "lemma2.6") return verify_L26(grid, workers);
  if (claim == "lemma2.7") return verify_L27(grid, workers);
  if (claim == "lemma2.8") return verify_L28(grid, workers);
  if (claim == "lemma2.9") return verify_L29(grid, workers);
  if (claim == "lemma2.10") return verify_conv_identity(grid, workers);
  if (claim == "lemma2.11") return verify_L211(grid, workers);
  if (claim == "lemma2.12") return verify_L212(grid, workers);
  if (claim == "thm1.1" || claim == "thm1.2i" || claim == "thm1.2ii" ||
      claim == "thm1.3")
    return verify_theorem(claim, grid, workers);
  throw std::invalid_argument("unknown claim: " + claim);
}

}  // namespace s2a
