#pragma once

#include <span>
#include <vector>

#include "krnn/instance.hpp"

namespace krnn {

// A Hamiltonian cycle: `order` visits every vertex once and `length`
// includes the closing edge back to order.front().
struct Tour {
  std::vector<Vertex> order;
  CostValue length = 0;

  friend bool operator==(const Tour&, const Tour&) = default;
};

// Cyclic length of `order`; no permutation check.
CostValue CyclicLength(const Instance& instance, std::span<const Vertex> order);

// Checks that tour.order is a permutation of all vertices and that
// tour.length matches the recomputed cyclic length, which is returned.
// Throws NotAPermutation or LengthMismatch.
CostValue ValidateTour(const Instance& instance, const Tour& tour);

}  // namespace krnn
