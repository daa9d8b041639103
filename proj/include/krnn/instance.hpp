#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace krnn {

// Edge and tour costs. TSPLIB costs are integral after rounding, so all
// tour arithmetic is exact.
using CostValue = std::int64_t;

// Vertices are 0-based indices into the instance.
using Vertex = std::int32_t;

enum class EdgeWeightType { kExplicit, kEuc2D, kCeil2D, kGeo, kAtt };

enum class EdgeWeightFormat {
  kFunction,
  kFullMatrix,
  kUpperRow,
  kLowerRow,
  kUpperDiagRow,
  kLowerDiagRow,
};

struct Coord {
  double x = 0.0;
  double y = 0.0;
};

struct InstanceMetadata {
  std::string name;
  std::string comment;
  EdgeWeightType weight_type = EdgeWeightType::kExplicit;
  EdgeWeightFormat weight_format = EdgeWeightFormat::kFullMatrix;
  std::vector<Coord> coords;  // empty unless weight_type is coordinate based
};

// A complete weighted graph. Immutable once built; safe to share between
// threads.
//
// Costs are held in a dense row-major matrix regardless of how the source
// file described them. The diagonal is kept as parsed but never returned
// from cost().
class Instance {
 public:
  using Metadata = InstanceMetadata;

  // `matrix` is row-major with dimension*dimension entries. When `symmetric`
  // is set the matrix must satisfy m[i][j] == m[j][i]; throws krnn::Error
  // otherwise, or if dimension < 2.
  Instance(int dimension, bool symmetric, std::vector<CostValue> matrix,
           Metadata metadata = {});

  // Convenience for tests and synthetic instances.
  static Instance FromRows(const std::vector<std::vector<CostValue>>& rows,
                           std::string name = "matrix");

  int dimension() const { return dimension_; }
  bool symmetric() const { return symmetric_; }
  const std::string& name() const { return meta_.name; }
  const std::string& comment() const { return meta_.comment; }
  const Metadata& metadata() const { return meta_; }

  // Checked accessor: throws VertexOutOfRange or SelfLoop.
  CostValue cost(int i, int j) const;

  // Unchecked hot-path access. out_row(i)[j] = c(i, j), in_row(j)[i] = c(i, j).
  // Diagonal entries are meaningless.
  std::span<const CostValue> out_row(int i) const {
    return {matrix_.data() + static_cast<std::size_t>(i) * dimension_,
            static_cast<std::size_t>(dimension_)};
  }
  std::span<const CostValue> in_row(int j) const {
    const auto& m = symmetric_ ? matrix_ : transposed_;
    return {m.data() + static_cast<std::size_t>(j) * dimension_,
            static_cast<std::size_t>(dimension_)};
  }
  CostValue at(int i, int j) const {
    return matrix_[static_cast<std::size_t>(i) * dimension_ + j];
  }

  // Returns a copy with `delta` added to every off-diagonal cost.
  Instance Translated(CostValue delta) const;

 private:
  int dimension_;
  bool symmetric_;
  std::vector<CostValue> matrix_;
  std::vector<CostValue> transposed_;  // only populated for asymmetric
  Metadata meta_;
};

}  // namespace krnn
