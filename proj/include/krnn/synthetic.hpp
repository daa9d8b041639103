#pragma once

#include <random>
#include <string>

#include "krnn/instance.hpp"

namespace krnn {

// Shape of a random complete graph.
struct RandomInstanceSpec {
  int n = 10;
  bool symmetric = false;
  // Off-diagonal costs are drawn uniformly from [min_cost, max_cost]. A narrow
  // range produces many ties.
  CostValue min_cost = 1;
  CostValue max_cost = 1000;
  // Draw every off-diagonal cost (every unordered pair when symmetric) without
  // replacement, so no two edges share a cost. Needs a range of at least
  // n(n-1) values.
  bool distinct = false;
};

Instance RandomInstance(const RandomInstanceSpec& spec, std::mt19937_64& rng,
                        std::string name = "random");

// Uniform points on a square grid of side `extent`, EUC_2D rounding.
Instance RandomEuclideanInstance(int n, double extent, std::mt19937_64& rng,
                                 std::string name = "random-euc");

}  // namespace krnn
