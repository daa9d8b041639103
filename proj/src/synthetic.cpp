#include "krnn/synthetic.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "krnn/error.hpp"
#include "krnn/tsplib.hpp"

namespace krnn {

Instance RandomInstance(const RandomInstanceSpec& spec, std::mt19937_64& rng,
                        std::string name) {
  const int n = spec.n;
  if (n < 2) throw Error("random instance needs n >= 2");
  if (spec.max_cost < spec.min_cost) throw Error("empty cost range");
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t edges = spec.symmetric ? nn * (nn - 1) / 2 : nn * (nn - 1);

  std::vector<CostValue> draws(edges);
  if (spec.distinct) {
    const auto range = static_cast<std::size_t>(spec.max_cost - spec.min_cost + 1);
    if (range < edges) throw Error("cost range too small for distinct costs");
    // Partial Fisher-Yates shuffle over the value range.
    std::vector<CostValue> pool(range);
    std::iota(pool.begin(), pool.end(), spec.min_cost);
    for (std::size_t i = 0; i < edges; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, range - 1);
      std::swap(pool[i], pool[pick(rng)]);
      draws[i] = pool[i];
    }
  } else {
    std::uniform_int_distribution<CostValue> cost(spec.min_cost, spec.max_cost);
    for (auto& d : draws) d = cost(rng);
  }

  std::vector<CostValue> matrix(nn * nn, 0);
  std::size_t next = 0;
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nn; ++j) {
      if (i == j) continue;
      if (spec.symmetric) {
        if (j < i) continue;
        matrix[i * nn + j] = matrix[j * nn + i] = draws[next++];
      } else {
        matrix[i * nn + j] = draws[next++];
      }
    }
  }
  Instance::Metadata meta;
  meta.name = std::move(name);
  return Instance(n, spec.symmetric, std::move(matrix), std::move(meta));
}

Instance RandomEuclideanInstance(int n, double extent, std::mt19937_64& rng,
                                 std::string name) {
  std::uniform_real_distribution<double> coordinate(0.0, extent);
  std::vector<Coord> points(n);
  for (auto& p : points) p = Coord{coordinate(rng), coordinate(rng)};
  const auto nn = static_cast<std::size_t>(n);
  std::vector<CostValue> matrix(nn * nn, 0);
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nn; ++j) {
      if (i != j) matrix[i * nn + j] = tsplib::Euc2DDistance(points[i], points[j]);
    }
  }
  Instance::Metadata meta;
  meta.name = std::move(name);
  meta.weight_type = EdgeWeightType::kEuc2D;
  meta.weight_format = EdgeWeightFormat::kFunction;
  meta.coords = std::move(points);
  return Instance(n, true, std::move(matrix), std::move(meta));
}

}  // namespace krnn
