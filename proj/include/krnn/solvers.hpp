#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>
#include <vector>

#include "krnn/instance.hpp"
#include "krnn/partial_tour.hpp"
#include "krnn/tour.hpp"

namespace krnn {

enum class Variant { kKRnn, kBiKRnn, kBranchingNn, kNn };

std::string_view VariantName(Variant variant);

inline constexpr std::uint64_t kDefaultStartBudget = 1'000'000'000;
inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct RunOptions {
  int threads = 1;
  // Runs needing more than this many starting permutations are refused.
  std::uint64_t start_budget = kDefaultStartBudget;
};

struct RunResult {
  Tour tour;
  Variant variant = Variant::kKRnn;
  int k = 0;
  std::vector<Vertex> winning_start;
  std::uint64_t starts_evaluated = 0;
  std::chrono::nanoseconds wall_time{0};
};

// Nearest-neighbor completion: repeatedly appends the cheapest unvisited
// successor of the tail. Ties go to the lowest vertex index.
Tour NnExtend(const Instance& instance, const PartialTour& partial);

// Bidirectional completion. Each step picks the unvisited vertex q
// minimizing either c(tail, q) or c(q, head); ties prefer the tail side,
// then the lowest index. q is prepended when c(q, head) < c(tail, q) and
// appended otherwise.
Tour BiExtend(const Instance& instance, const PartialTour& partial);

// Single nearest-neighbor tour from `start`. Throws VertexOutOfRange.
Tour RunNnFrom(const Instance& instance, Vertex start);

// k-Repetitive-Nearest-Neighbor: runs NnExtend from every ordered k-tuple of
// distinct vertices and keeps the shortest tour. Equal lengths resolve to the
// lexicographically smallest start, so the result does not depend on
// options.threads.
//
// Throws KOutOfRange unless 1 <= k <= n, BudgetExceeded when n!/(n-k)!
// exceeds options.start_budget.
RunResult RunKRnn(const Instance& instance, int k, const RunOptions& options = {});

// As RunKRnn with BiExtend as the completion rule.
RunResult RunBiKRnn(const Instance& instance, int k, const RunOptions& options = {});

// Nearest neighbor from `start` that follows every tied nearest neighbor
// instead of picking one, returning the shortest completed tour (the first
// found in ascending-vertex depth-first order on equal length).
//
// Every partial tour generated, the one-vertex root included, counts toward
// node_budget; exceeding it throws BudgetExceeded. A tie-free instance
// uses exactly n nodes. Requires node_budget >= n.
Tour RunBranchingNn(const Instance& instance, Vertex start,
                    std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace krnn
