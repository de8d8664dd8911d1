#pragma once

// Command implementations behind the gradedctl tool. Each returns the exit
// code and both report forms so the tool itself only parses arguments.

#include <cstdint>
#include <optional>
#include <string>

#include "graded/io.hpp"
#include "graded/options.hpp"
#include "graded/oracle.hpp"

namespace graded::cli {

enum ExitCode : int { kHolds = 0, kFails = 1, kError = 2, kInconclusive = 3 };

struct Outcome {
  int exit_code = kError;
  Json report;
  std::string text;
};

struct BuildRequest {
  std::string kind;
  // "gf<p>", "GF(p)" or "q".
  std::string field = "gf2";
  std::string group = "z2";
  std::optional<std::uint32_t> p;
  std::optional<int> n;
  // crossed-product: u^n = c in the cyclic algebra over GF(p^n).
  std::optional<long long> c;
  // skew-group: base "m2", "diag2" or "field"; action "identity", "swap",
  // "inner" or "frobenius".
  std::string base = "m2";
  std::string action = "inner";
  std::uint64_t seed = 0;
};

// group-algebra, skew-group, crossed-product, galois-skew, m3.
Json build(const BuildRequest& req);

// valid, strong, nondegenerate, graded-simple, simple, controlled,
// crossed-product, centralizer, picard-injective, necessary,
// crossed-controlled, subrings.
Outcome check(const AnyAlgebra& a, const std::string& property, const SearchOptions& opts);

// sub-bimodules, subrings, ideals, controlled.
Outcome oracle(const AnyAlgebra& a, const std::string& what, const OracleOptions& opts);

// Runs fn, converting library errors into an error outcome.
template <class Fn>
Outcome guarded(Fn&& fn);

}  // namespace graded::cli

#include "graded/error.hpp"

namespace graded::cli {

template <class Fn>
Outcome guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    Outcome out;
    out.exit_code = kError;
    const char* kind = e.kind() == ErrorKind::Budget ? "budget" : e.kind() == ErrorKind::InvalidInput ? "invalid-input" : "internal";
    out.report = Json{{"error", kind}, {"message", e.what()}};
    out.text = std::string("error (") + kind + "): " + e.what() + "\n";
    return out;
  }
}

}  // namespace graded::cli
