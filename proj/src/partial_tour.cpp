#include "krnn/partial_tour.hpp"

#include <string>

#include "krnn/error.hpp"

namespace krnn {

PartialTour::PartialTour(int dimension)
    : dimension_(dimension),
      buffer_(2 * static_cast<std::size_t>(dimension) + 1),
      begin_(dimension),
      end_(dimension),
      slot_(dimension) {
  Reset({});
}

PartialTour::PartialTour(int dimension, std::span<const Vertex> prefix)
    : PartialTour(dimension) {
  Reset(prefix);
}

void PartialTour::Reset(std::span<const Vertex> prefix) {
  begin_ = end_ = dimension_;
  unvisited_.resize(dimension_);
  for (int v = 0; v < dimension_; ++v) {
    unvisited_[v] = v;
    slot_[v] = v;
  }
  for (const Vertex v : prefix) {
    if (v < 0 || v >= dimension_) throw VertexOutOfRange(v, dimension_);
    if (visited(v)) {
      throw NotAPermutation("vertex " + std::to_string(v) + " repeated in prefix");
    }
    Append(v);
  }
}

void PartialTour::MarkVisited(Vertex v) {
  const int slot = slot_[v];
  const Vertex last = unvisited_.back();
  unvisited_[slot] = last;
  slot_[last] = slot;
  unvisited_.pop_back();
  slot_[v] = -1;
}

void PartialTour::Append(Vertex v) {
  MarkVisited(v);
  buffer_[end_++] = v;
}

void PartialTour::Prepend(Vertex v) {
  MarkVisited(v);
  buffer_[--begin_] = v;
}

}  // namespace krnn
