#include "krnn/k_permutations.hpp"

#include <algorithm>
#include <bit>

#include "krnn/error.hpp"

namespace krnn {

std::optional<std::uint64_t> PermutationCount(int n, int k) {
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(count, static_cast<std::uint64_t>(n - i), &count)) {
      return std::nullopt;
    }
  }
  return count;
}

KPermutations::KPermutations(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 0 || k > n) throw KOutOfRange(k, 0, n);
  count_ = PermutationCount(n, k);
}

// Mixed-radix decode: position i has (n - i) choices, each owning a block of
// PermutationCount(n - i - 1, k - i - 1) ranks.
std::vector<Vertex> KPermutations::Unrank(std::uint64_t rank) const {
  std::vector<Vertex> tuple;
  tuple.reserve(k_);
  std::vector<Vertex> used;  // sorted
  used.reserve(k_);
  for (int i = 0; i < k_; ++i) {
    const std::uint64_t block = *PermutationCount(n_ - i - 1, k_ - i - 1);
    auto digit = static_cast<Vertex>(rank / block);
    rank %= block;
    // digit-th smallest vertex not yet used
    Vertex v = digit;
    for (const Vertex u : used) {
      if (u <= v) ++v;
    }
    tuple.push_back(v);
    used.insert(std::upper_bound(used.begin(), used.end(), v), v);
  }
  return tuple;
}

KPermutations::Cursor::Cursor(const KPermutations& perms, std::uint64_t rank)
    : n_(perms.n()), free_((perms.n() + 63) / 64 + 1, 0), rank_(rank) {
  for (int v = 0; v < n_; ++v) Release(v);
  if (!perms.count() || rank >= *perms.count()) {
    done_ = true;
    return;
  }
  tuple_ = perms.Unrank(rank);
  for (const Vertex v : tuple_) Take(v);
}

}  // namespace krnn
