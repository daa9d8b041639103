#pragma once

#include <span>
#include <vector>

#include "krnn/instance.hpp"

namespace krnn {

// An ordered path of distinct vertices that can grow at either end, plus
// the complementary set of unvisited vertices.
//
// Unvisited vertices are kept in a compact array so a nearest-neighbor
// scan touches only the n - size() candidates. Their order within that
// array is unspecified.
class PartialTour {
 public:
  explicit PartialTour(int dimension);
  // Throws VertexOutOfRange or NotAPermutation (repeated vertex).
  PartialTour(int dimension, std::span<const Vertex> prefix);

  // Replaces the contents with `prefix`. Same checks as the constructor.
  void Reset(std::span<const Vertex> prefix);

  int dimension() const { return dimension_; }
  int size() const { return end_ - begin_; }
  bool empty() const { return begin_ == end_; }
  bool complete() const { return size() == dimension_; }

  // head = first vertex of the path, tail = last. Require !empty().
  Vertex head() const { return buffer_[begin_]; }
  Vertex tail() const { return buffer_[end_ - 1]; }

  bool visited(Vertex v) const { return slot_[v] < 0; }
  std::span<const Vertex> unvisited() const { return unvisited_; }
  std::span<const Vertex> path() const {
    return {buffer_.data() + begin_, static_cast<std::size_t>(size())};
  }

  // Require !visited(v).
  void Append(Vertex v);
  void Prepend(Vertex v);

 private:
  void MarkVisited(Vertex v);

  int dimension_;
  // Path lives in buffer_[begin_, end_); it starts centered so it can grow
  // dimension_ steps in either direction.
  std::vector<Vertex> buffer_;
  int begin_;
  int end_;
  std::vector<Vertex> unvisited_;
  std::vector<int> slot_;  // index into unvisited_, or -1 once visited
};

}  // namespace krnn
