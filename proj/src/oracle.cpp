#include "krnn/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "krnn/error.hpp"

namespace krnn {
namespace {

constexpr CostValue kUnreached = std::numeric_limits<CostValue>::max();

}  // namespace

ExactResult SolveHeldKarp(const Instance& instance, int cap) {
  const int n = instance.dimension();
  const int limit = std::min(cap, 30);
  if (n > limit) throw TooLarge(n, limit);

  // Vertices 1..n-1 map to bits 0..m-1. best[mask * m + j] is the cheapest
  // path that leaves vertex 0, visits exactly `mask`, and ends at bit j.
  const int m = n - 1;
  const std::size_t subsets = std::size_t{1} << m;
  std::vector<CostValue> best(subsets * m, kUnreached);
  for (int j = 0; j < m; ++j) best[(std::size_t{1} << j) * m + j] = instance.at(0, j + 1);

  std::uint64_t states = 0;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    for (int j = 0; j < m; ++j) {
      const CostValue here = best[mask * m + j];
      if (here == kUnreached) continue;
      ++states;
      const auto row = instance.out_row(j + 1);
      for (int next = 0; next < m; ++next) {
        if (mask & (std::size_t{1} << next)) continue;
        const std::size_t grown = mask | (std::size_t{1} << next);
        CostValue& slot = best[grown * m + next];
        slot = std::min(slot, here + row[next + 1]);
      }
    }
  }

  const std::size_t full = subsets - 1;
  CostValue optimum = kUnreached;
  int last = 0;
  for (int j = 0; j < m; ++j) {
    const CostValue total = best[full * m + j] + instance.at(j + 1, 0);
    if (total < optimum) {
      optimum = total;
      last = j;
    }
  }

  // Walk back through the table to recover one optimal order.
  std::vector<Vertex> reversed;
  std::size_t mask = full;
  int current = last;
  while (true) {
    reversed.push_back(current + 1);
    const std::size_t rest = mask & ~(std::size_t{1} << current);
    if (rest == 0) break;
    const CostValue target = best[mask * m + current];
    int previous = -1;
    for (int j = 0; j < m; ++j) {
      if ((rest & (std::size_t{1} << j)) &&
          best[rest * m + j] != kUnreached &&
          best[rest * m + j] + instance.at(j + 1, current + 1) == target) {
        previous = j;
        break;
      }
    }
    mask = rest;
    current = previous;
  }
  reversed.push_back(0);

  ExactResult result;
  result.method = ExactMethod::kHeldKarp;
  result.tour.order.assign(reversed.rbegin(), reversed.rend());
  result.tour.length = optimum;
  result.states_or_perms_explored = states;
  return result;
}

ExactResult SolvePermEnum(const Instance& instance, int cap) {
  const int n = instance.dimension();
  const int limit = std::min(cap, 13);
  if (n > limit) throw TooLarge(n, limit);

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  ExactResult result;
  result.method = ExactMethod::kPermEnum;
  result.tour.length = kUnreached;
  do {
    const CostValue length = CyclicLength(instance, order);
    ++result.states_or_perms_explored;
    if (length < result.tour.length) {
      result.tour.length = length;
      result.tour.order = order;
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return result;
}

}  // namespace krnn
