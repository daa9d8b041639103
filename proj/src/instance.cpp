#include "krnn/instance.hpp"

#include <utility>

#include "krnn/error.hpp"

namespace krnn {

Instance::Instance(int dimension, bool symmetric, std::vector<CostValue> matrix,
                   Metadata metadata)
    : dimension_(dimension),
      symmetric_(symmetric),
      matrix_(std::move(matrix)),
      meta_(std::move(metadata)) {
  if (dimension_ < 2) {
    throw Error("instance dimension must be at least 2, got " +
                std::to_string(dimension_));
  }
  const auto n = static_cast<std::size_t>(dimension_);
  if (matrix_.size() != n * n) {
    throw Error("cost matrix has " + std::to_string(matrix_.size()) +
                " entries, expected " + std::to_string(n * n));
  }
  if (symmetric_) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (matrix_[i * n + j] != matrix_[j * n + i]) {
          throw Error("symmetric instance has c(" + std::to_string(i) + "," +
                      std::to_string(j) + ") != c(" + std::to_string(j) + "," +
                      std::to_string(i) + ")");
        }
      }
    }
  } else {
    transposed_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        transposed_[j * n + i] = matrix_[i * n + j];
      }
    }
  }
}

Instance Instance::FromRows(const std::vector<std::vector<CostValue>>& rows,
                            std::string name) {
  const int n = static_cast<int>(rows.size());
  std::vector<CostValue> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw Error("cost matrix must be square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  bool symmetric = true;
  for (int i = 0; i < n && symmetric; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        symmetric = false;
        break;
      }
    }
  }
  Metadata meta;
  meta.name = std::move(name);
  return Instance(n, symmetric, std::move(flat), std::move(meta));
}

CostValue Instance::cost(int i, int j) const {
  if (i < 0 || i >= dimension_) throw VertexOutOfRange(i, dimension_);
  if (j < 0 || j >= dimension_) throw VertexOutOfRange(j, dimension_);
  if (i == j) throw SelfLoop(i);
  return at(i, j);
}

Instance Instance::Translated(CostValue delta) const {
  std::vector<CostValue> shifted = matrix_;
  const auto n = static_cast<std::size_t>(dimension_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) shifted[i * n + j] += delta;
    }
  }
  return Instance(dimension_, symmetric_, std::move(shifted), meta_);
}

}  // namespace krnn
