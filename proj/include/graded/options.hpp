#pragma once

#include <cstdint>
#include <string>

#include "graded/parallel.hpp"

namespace graded {

// Three-valued outcome of a decision procedure. Unknown is only produced when
// a randomized or budgeted search could not settle the question.
enum class Tri { Yes, No, Unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::Yes;
}

inline Tri tri_not(Tri a) {
  return a == Tri::Yes ? Tri::No : a == Tri::No ? Tri::Yes : Tri::Unknown;
}

inline Tri tri_from(bool b) { return b ? Tri::Yes : Tri::No; }

struct SearchOptions {
  std::uint64_t seed = 0;
  // Random sub-stream; callers derive one per component or pair so results do
  // not depend on evaluation order.
  std::uint64_t stream = 0;
  // Largest number of vectors an exhaustive scan may visit (|F|^dim).
  std::uint64_t exhaustive_budget = std::uint64_t{1} << 16;
  int meataxe_tries = 64;
  int random_trials = 40;
  ExecMode mode = ExecMode::Parallel;

  SearchOptions with_stream(std::uint64_t s) const {
    SearchOptions o = *this;
    o.stream = s;
    return o;
  }
};

}  // namespace graded
