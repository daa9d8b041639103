#pragma once

#include <cstdint>

#include "krnn/instance.hpp"
#include "krnn/tour.hpp"

namespace krnn {

enum class ExactMethod { kHeldKarp, kPermEnum };

struct ExactResult {
  Tour tour;
  ExactMethod method = ExactMethod::kHeldKarp;
  // Held-Karp: (subset, last vertex) states filled. Enumeration: tours scored.
  std::uint64_t states_or_perms_explored = 0;
};

inline constexpr int kDefaultHeldKarpCap = 20;
inline constexpr int kDefaultPermEnumCap = 10;

// Subset dynamic programming over (visited set, last vertex) with vertex 0
// as the fixed anchor. O(n^2 2^n) time, O(n 2^n) memory. Works for
// asymmetric costs. Throws TooLarge when n > cap.
ExactResult SolveHeldKarp(const Instance& instance, int cap = kDefaultHeldKarpCap);

// Scores all (n-1)! tours that begin at vertex 0. Ties keep the
// lexicographically first tour. Throws TooLarge when n > cap.
ExactResult SolvePermEnum(const Instance& instance, int cap = kDefaultPermEnumCap);

}  // namespace krnn
