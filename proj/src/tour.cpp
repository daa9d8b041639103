#include "krnn/tour.hpp"

#include <string>

#include "krnn/error.hpp"

namespace krnn {

CostValue CyclicLength(const Instance& instance, std::span<const Vertex> order) {
  CostValue total = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    total += instance.at(order[i], order[i + 1]);
  }
  if (order.size() > 1) total += instance.at(order.back(), order.front());
  return total;
}

CostValue ValidateTour(const Instance& instance, const Tour& tour) {
  const int n = instance.dimension();
  if (tour.order.empty()) throw NotAPermutation("tour is empty");
  if (static_cast<int>(tour.order.size()) != n) {
    throw NotAPermutation("tour has " + std::to_string(tour.order.size()) +
                          " vertices, instance has " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (const Vertex v : tour.order) {
    if (v < 0 || v >= n) {
      throw NotAPermutation("vertex " + std::to_string(v) + " out of range");
    }
    if (seen[v]) throw NotAPermutation("vertex " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
  const CostValue recomputed = CyclicLength(instance, tour.order);
  if (recomputed != tour.length) throw LengthMismatch(tour.length, recomputed);
  return recomputed;
}

}  // namespace krnn
