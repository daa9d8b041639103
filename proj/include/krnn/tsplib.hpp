#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "krnn/instance.hpp"

namespace krnn::tsplib {

// Parses a TSPLIB 95 TSP/ATSP file.
//
// Supported EDGE_WEIGHT_TYPEs: EXPLICIT, EUC_2D, CEIL_2D, GEO, ATT.
// Supported EDGE_WEIGHT_FORMATs for EXPLICIT: FULL_MATRIX, UPPER_ROW,
// LOWER_ROW, UPPER_DIAG_ROW, LOWER_DIAG_ROW. Unknown header keys are
// ignored; DISPLAY_DATA_SECTION contents are skipped.
//
// Throws UnsupportedFormat or MalformedFile.
Instance ParseInstance(std::string_view text);

// Reads and parses a file; MalformedFile reasons are prefixed with the path.
Instance LoadInstance(const std::filesystem::path& path);

// TSPLIB reference distance functions.
CostValue Euc2DDistance(const Coord& a, const Coord& b);
CostValue Ceil2DDistance(const Coord& a, const Coord& b);
CostValue GeoDistance(const Coord& a, const Coord& b);
CostValue AttDistance(const Coord& a, const Coord& b);

// TSPLIB "nint": nearest integer, halves rounded away from zero.
CostValue Nint(double x);

// Emits the instance as an EXPLICIT FULL_MATRIX file. The diagonal is
// written as 0. Only used to check parse/serialize/parse stability.
std::string ToFullMatrixText(const Instance& instance);

// Re-extracts the weights of an explicit triangular format in file order.
std::vector<CostValue> ExtractTriangle(const Instance& instance,
                                       EdgeWeightFormat format);

}  // namespace krnn::tsplib
