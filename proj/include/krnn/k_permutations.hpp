#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <vector>

#include "krnn/instance.hpp"

namespace krnn {

// All ordered k-tuples of distinct vertices from {0, ..., n-1}, in
// lexicographic order. There are n!/(n-k)! of them; rank r is the r-th
// tuple in that order.
class KPermutations {
 public:
  // Throws KOutOfRange unless 0 <= k <= n.
  KPermutations(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }

  // n!/(n-k)!, or nullopt when that does not fit in 64 bits.
  std::optional<std::uint64_t> count() const { return count_; }

  // Requires count() and rank < *count().
  std::vector<Vertex> Unrank(std::uint64_t rank) const;

  // Walks tuples in rank order starting from an arbitrary rank.
  class Cursor {
   public:
    Cursor(const KPermutations& perms, std::uint64_t rank);

    const std::vector<Vertex>& tuple() const { return tuple_; }
    std::uint64_t rank() const { return rank_; }
    bool done() const { return done_; }

    // Moves to the next tuple. Returns the first position whose entry
    // changed, or -1 once the sequence is exhausted.
    int Advance();

   private:
    int NextFree(int from) const;
    void Take(int v) { free_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void Release(int v) { free_[v >> 6] |= std::uint64_t{1} << (v & 63); }

    int n_;
    std::vector<Vertex> tuple_;
    std::vector<std::uint64_t> free_;  // bit set = vertex not in tuple_
    std::uint64_t rank_;
    bool done_ = false;
  };

  Cursor CursorAt(std::uint64_t rank) const { return Cursor(*this, rank); }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::vector<Vertex>;
    using difference_type = std::ptrdiff_t;
    using reference = const std::vector<Vertex>&;
    using pointer = const std::vector<Vertex>*;

    iterator() = default;
    explicit iterator(const KPermutations& perms)
        : cursor_(std::in_place, perms, 0) {}

    reference operator*() const { return cursor_->tuple(); }
    pointer operator->() const { return &cursor_->tuple(); }
    iterator& operator++() {
      cursor_->Advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.cursor_ || it.cursor_->done();
    }

   private:
    std::optional<Cursor> cursor_;
  };

  iterator begin() const { return iterator(*this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
  int k_;
  std::optional<std::uint64_t> count_;
};

// n!/(n-k)! or nullopt on 64-bit overflow.
std::optional<std::uint64_t> PermutationCount(int n, int k);

// Defined inline because they run once per starting permutation.

inline int KPermutations::Cursor::NextFree(int from) const {
  if (from >= n_) return n_;
  std::size_t word = static_cast<std::size_t>(from) >> 6;
  std::uint64_t bits = free_[word] & (~std::uint64_t{0} << (from & 63));
  while (bits == 0) {
    if (++word >= free_.size()) return n_;
    bits = free_[word];
  }
  const int v = static_cast<int>(word * 64) + std::countr_zero(bits);
  return v < n_ ? v : n_;
}

inline int KPermutations::Cursor::Advance() {
  if (done_) return -1;
  const int k = static_cast<int>(tuple_.size());
  for (int i = k - 1; i >= 0; --i) {
    Release(tuple_[i]);
    const int next = NextFree(tuple_[i] + 1);
    if (next < n_) {
      tuple_[i] = next;
      Take(next);
      for (int j = i + 1; j < k; ++j) {
        tuple_[j] = NextFree(0);
        Take(tuple_[j]);
      }
      ++rank_;
      return i;
    }
  }
  done_ = true;
  ++rank_;
  return -1;
}

}  // namespace krnn
