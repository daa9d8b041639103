#include "krnn/tsplib.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "krnn/error.hpp"

namespace krnn::tsplib {
namespace {

constexpr double kGeoPi = 3.141592;
constexpr double kEarthRadius = 6378.388;

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) break;
    auto end = line.find_first_of(" \t\r", pos);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::optional<std::int64_t> ParseInt(std::string_view tok) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

std::optional<double> ParseDouble(std::string_view tok) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

// Integral weight; tolerates "12.0" but nothing fractional.
std::optional<std::int64_t> ParseWeight(std::string_view tok) {
  if (auto i = ParseInt(tok)) return i;
  if (auto d = ParseDouble(tok); d && std::isfinite(*d) && std::trunc(*d) == *d) {
    return static_cast<std::int64_t>(*d);
  }
  return std::nullopt;
}

bool IsNumeric(std::string_view tok) { return ParseDouble(tok).has_value(); }

const std::unordered_map<std::string_view, EdgeWeightType>& WeightTypes() {
  static const auto* m = new std::unordered_map<std::string_view, EdgeWeightType>{
      {"EXPLICIT", EdgeWeightType::kExplicit},
      {"EUC_2D", EdgeWeightType::kEuc2D},
      {"CEIL_2D", EdgeWeightType::kCeil2D},
      {"GEO", EdgeWeightType::kGeo},
      {"ATT", EdgeWeightType::kAtt},
  };
  return *m;
}

const std::unordered_map<std::string_view, EdgeWeightFormat>& WeightFormats() {
  static const auto* m =
      new std::unordered_map<std::string_view, EdgeWeightFormat>{
          {"FUNCTION", EdgeWeightFormat::kFunction},
          {"FULL_MATRIX", EdgeWeightFormat::kFullMatrix},
          {"UPPER_ROW", EdgeWeightFormat::kUpperRow},
          {"LOWER_ROW", EdgeWeightFormat::kLowerRow},
          {"UPPER_DIAG_ROW", EdgeWeightFormat::kUpperDiagRow},
          {"LOWER_DIAG_ROW", EdgeWeightFormat::kLowerDiagRow},
      };
  return *m;
}

// Visits (i, j) in the order a format lists its entries.
template <typename Fn>
void ForEachEntry(EdgeWeightFormat format, int n, Fn&& fn) {
  for (int i = 0; i < n; ++i) {
    int lo = 0;
    int hi = n;  // exclusive
    switch (format) {
      case EdgeWeightFormat::kFullMatrix: break;
      case EdgeWeightFormat::kUpperRow: lo = i + 1; break;
      case EdgeWeightFormat::kUpperDiagRow: lo = i; break;
      case EdgeWeightFormat::kLowerRow: hi = i; break;
      case EdgeWeightFormat::kLowerDiagRow: hi = i + 1; break;
      case EdgeWeightFormat::kFunction: return;
    }
    for (int j = lo; j < hi; ++j) fn(i, j);
  }
}

std::size_t EntryCount(EdgeWeightFormat format, int n) {
  std::size_t count = 0;
  ForEachEntry(format, n, [&](int, int) { ++count; });
  return count;
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      lines_.push_back(text.substr(pos, end - pos));
      pos = end + 1;
    }
  }

  Instance Run() {
    while (cursor_ < lines_.size()) {
      const std::string_view line = Trim(lines_[cursor_]);
      const int line_no = static_cast<int>(cursor_) + 1;
      ++cursor_;
      if (line.empty()) continue;

      std::string_view key;
      std::string_view value;
      if (const auto colon = line.find(':'); colon != std::string_view::npos) {
        key = Trim(line.substr(0, colon));
        value = Trim(line.substr(colon + 1));
      } else {
        const auto toks = Tokens(line);
        key = toks.front();
        if (IsNumeric(key)) {
          throw MalformedFile(line_no, "unexpected data line outside a section");
        }
      }

      if (key == "EOF") break;
      if (key == "NAME") {
        meta_.name = std::string(value);
      } else if (key == "COMMENT") {
        if (!meta_.comment.empty()) meta_.comment += '\n';
        meta_.comment += value;
      } else if (key == "TYPE") {
        if (value == "TSP") {
          symmetric_ = true;
        } else if (value == "ATSP") {
          symmetric_ = false;
        } else {
          throw UnsupportedFormat("TYPE", std::string(value));
        }
      } else if (key == "DIMENSION") {
        auto d = ParseInt(value);
        if (!d || *d < 2 || *d > 1'000'000) {
          throw MalformedFile(line_no, "invalid DIMENSION '" + std::string(value) + "'");
        }
        dimension_ = static_cast<int>(*d);
      } else if (key == "EDGE_WEIGHT_TYPE") {
        const auto it = WeightTypes().find(value);
        if (it == WeightTypes().end()) {
          throw UnsupportedFormat("EDGE_WEIGHT_TYPE", std::string(value));
        }
        weight_type_ = it->second;
      } else if (key == "EDGE_WEIGHT_FORMAT") {
        const auto it = WeightFormats().find(value);
        if (it == WeightFormats().end()) {
          throw UnsupportedFormat("EDGE_WEIGHT_FORMAT", std::string(value));
        }
        weight_format_ = it->second;
      } else if (key == "NODE_COORD_SECTION") {
        ReadCoords(line_no);
      } else if (key == "EDGE_WEIGHT_SECTION") {
        ReadWeights(line_no);
      } else if (key == "DISPLAY_DATA_SECTION") {
        SkipDataLines(line_no, "DISPLAY_DATA_SECTION");
      } else if (key == "FIXED_EDGES_SECTION") {
        SkipUntilTerminator();
      } else if (key.ends_with("_SECTION")) {
        throw UnsupportedFormat("section", std::string(key));
      }
      // Anything else (DISPLAY_DATA_TYPE, NODE_COORD_TYPE, ...) is ignored.
    }
    return Build();
  }

 private:
  int RequireDimension(int line_no, std::string_view section) const {
    if (!dimension_) {
      throw MalformedFile(line_no, std::string(section) + " before DIMENSION");
    }
    return *dimension_;
  }

  // True when the line at `cursor_` begins a new keyword rather than data.
  bool AtKeyword() const {
    const auto toks = Tokens(lines_[cursor_]);
    return !toks.empty() && !IsNumeric(toks.front());
  }

  void ReadCoords(int section_line) {
    const int n = RequireDimension(section_line, "NODE_COORD_SECTION");
    coords_.assign(n, Coord{});
    std::vector<bool> seen(n, false);
    int read = 0;
    while (read < n) {
      if (cursor_ >= lines_.size() || AtKeyword()) {
        throw MalformedFile(static_cast<int>(cursor_) + 1,
                            "NODE_COORD_SECTION has " + std::to_string(read) +
                                " nodes, DIMENSION is " + std::to_string(n));
      }
      const int line_no = static_cast<int>(cursor_) + 1;
      const auto toks = Tokens(lines_[cursor_++]);
      if (toks.empty()) continue;
      if (toks.size() != 3) {
        throw MalformedFile(line_no, "expected 3 tokens (id x y), found " +
                                         std::to_string(toks.size()));
      }
      const auto id = ParseInt(toks[0]);
      const auto x = ParseDouble(toks[1]);
      const auto y = ParseDouble(toks[2]);
      if (!id || !x || !y) throw MalformedFile(line_no, "non-numeric coordinate");
      if (*id < 1 || *id > n || seen[*id - 1]) {
        throw MalformedFile(line_no, "invalid or duplicate node id " +
                                         std::string(toks[0]));
      }
      seen[*id - 1] = true;
      coords_[*id - 1] = Coord{*x, *y};
      ++read;
    }
    ExpectSectionEnd("NODE_COORD_SECTION");
  }

  void ReadWeights(int section_line) {
    const int n = RequireDimension(section_line, "EDGE_WEIGHT_SECTION");
    if (!weight_format_ || *weight_format_ == EdgeWeightFormat::kFunction) {
      throw MalformedFile(section_line,
                          "EDGE_WEIGHT_SECTION requires an explicit EDGE_WEIGHT_FORMAT");
    }
    const std::size_t expected = EntryCount(*weight_format_, n);
    weights_.clear();
    weights_.reserve(expected);
    while (weights_.size() < expected) {
      if (cursor_ >= lines_.size() || AtKeyword()) {
        throw MalformedFile(static_cast<int>(cursor_) + 1,
                            "EDGE_WEIGHT_SECTION has " +
                                std::to_string(weights_.size()) +
                                " weights, DIMENSION " + std::to_string(n) +
                                " implies " + std::to_string(expected));
      }
      const int line_no = static_cast<int>(cursor_) + 1;
      for (const auto tok : Tokens(lines_[cursor_++])) {
        const auto w = ParseWeight(tok);
        if (!w) {
          throw MalformedFile(line_no, "non-numeric weight '" + std::string(tok) + "'");
        }
        if (weights_.size() == expected) {
          throw MalformedFile(line_no, "more weights than DIMENSION " +
                                           std::to_string(n) + " implies");
        }
        weights_.push_back(*w);
      }
    }
    ExpectSectionEnd("EDGE_WEIGHT_SECTION");
  }

  void ExpectSectionEnd(std::string_view section) {
    while (cursor_ < lines_.size() && Trim(lines_[cursor_]).empty()) ++cursor_;
    if (cursor_ < lines_.size() && !AtKeyword()) {
      throw MalformedFile(static_cast<int>(cursor_) + 1,
                          std::string(section) + " longer than DIMENSION implies");
    }
  }

  void SkipDataLines(int section_line, std::string_view section) {
    RequireDimension(section_line, section);
    while (cursor_ < lines_.size() && (Trim(lines_[cursor_]).empty() || !AtKeyword())) {
      ++cursor_;
    }
  }

  void SkipUntilTerminator() {
    while (cursor_ < lines_.size()) {
      const auto toks = Tokens(lines_[cursor_++]);
      if (!toks.empty() && toks.front() == "-1") return;
    }
  }

  Instance Build() {
    const int last_line = static_cast<int>(lines_.size());
    if (!symmetric_) throw MalformedFile(last_line, "missing TYPE");
    if (!dimension_) throw MalformedFile(last_line, "missing DIMENSION");
    if (!weight_type_) throw MalformedFile(last_line, "missing EDGE_WEIGHT_TYPE");
    const int n = *dimension_;
    const auto nn = static_cast<std::size_t>(n);
    std::vector<CostValue> matrix(nn * nn, 0);

    meta_.weight_type = *weight_type_;
    if (*weight_type_ == EdgeWeightType::kExplicit) {
      if (weights_.empty()) throw MalformedFile(last_line, "missing EDGE_WEIGHT_SECTION");
      meta_.weight_format = *weight_format_;
      std::size_t next = 0;
      const bool full = *weight_format_ == EdgeWeightFormat::kFullMatrix;
      ForEachEntry(*weight_format_, n, [&](int i, int j) {
        const CostValue w = weights_[next++];
        matrix[i * nn + j] = w;
        if (!full) matrix[j * nn + i] = w;
      });
    } else {
      if (coords_.empty()) throw MalformedFile(last_line, "missing NODE_COORD_SECTION");
      meta_.weight_format = EdgeWeightFormat::kFunction;
      CostValue (*fn)(const Coord&, const Coord&) = nullptr;
      switch (*weight_type_) {
        case EdgeWeightType::kEuc2D: fn = &Euc2DDistance; break;
        case EdgeWeightType::kCeil2D: fn = &Ceil2DDistance; break;
        case EdgeWeightType::kGeo: fn = &GeoDistance; break;
        case EdgeWeightType::kAtt: fn = &AttDistance; break;
        case EdgeWeightType::kExplicit: break;
      }
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i != j) matrix[i * nn + j] = fn(coords_[i], coords_[j]);
        }
      }
      meta_.coords = std::move(coords_);
    }

    try {
      return Instance(n, *symmetric_, std::move(matrix), std::move(meta_));
    } catch (const Error& e) {
      throw MalformedFile(last_line, e.what());
    }
  }

  std::vector<std::string_view> lines_;
  std::size_t cursor_ = 0;

  Instance::Metadata meta_;
  std::optional<bool> symmetric_;
  std::optional<int> dimension_;
  std::optional<EdgeWeightType> weight_type_;
  std::optional<EdgeWeightFormat> weight_format_;
  std::vector<Coord> coords_;
  std::vector<CostValue> weights_;
};

double GeoRadians(double v) {
  const double deg = std::trunc(v);
  const double min = v - deg;
  return kGeoPi * (deg + 5.0 * min / 3.0) / 180.0;
}

}  // namespace

CostValue Nint(double x) { return static_cast<CostValue>(std::round(x)); }

CostValue Euc2DDistance(const Coord& a, const Coord& b) {
  return Nint(std::hypot(a.x - b.x, a.y - b.y));
}

CostValue Ceil2DDistance(const Coord& a, const Coord& b) {
  return static_cast<CostValue>(std::ceil(std::hypot(a.x - b.x, a.y - b.y)));
}

// Coordinates are DDD.MM (degrees, minutes).
CostValue GeoDistance(const Coord& a, const Coord& b) {
  const double lat_a = GeoRadians(a.x);
  const double lon_a = GeoRadians(a.y);
  const double lat_b = GeoRadians(b.x);
  const double lon_b = GeoRadians(b.y);
  const double q1 = std::cos(lon_a - lon_b);
  const double q2 = std::cos(lat_a - lat_b);
  const double q3 = std::cos(lat_a + lat_b);
  return static_cast<CostValue>(
      kEarthRadius * std::acos(0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3)) + 1.0);
}

// Pseudo-Euclidean distance, rounded up when nint() rounds down.
CostValue AttDistance(const Coord& a, const Coord& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double r = std::sqrt((dx * dx + dy * dy) / 10.0);
  const CostValue t = Nint(r);
  return static_cast<double>(t) < r ? t + 1 : t;
}

Instance ParseInstance(std::string_view text) { return Parser(text).Run(); }

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ParseInstance(buf.str());
  } catch (const MalformedFile& e) {
    throw MalformedFile(e.line(), path.string() + ": " + e.reason());
  }
}

std::string ToFullMatrixText(const Instance& instance) {
  const int n = instance.dimension();
  std::ostringstream out;
  out << "NAME : " << instance.name() << '\n'
      << "TYPE : " << (instance.symmetric() ? "TSP" : "ATSP") << '\n'
      << "DIMENSION : " << n << '\n'
      << "EDGE_WEIGHT_TYPE : EXPLICIT\n"
      << "EDGE_WEIGHT_FORMAT : FULL_MATRIX\n"
      << "EDGE_WEIGHT_SECTION\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out << (j ? " " : "") << (i == j ? 0 : instance.at(i, j));
    }
    out << '\n';
  }
  out << "EOF\n";
  return out.str();
}

std::vector<CostValue> ExtractTriangle(const Instance& instance,
                                       EdgeWeightFormat format) {
  std::vector<CostValue> out;
  ForEachEntry(format, instance.dimension(), [&](int i, int j) {
    out.push_back(instance.at(i, j));
  });
  return out;
}

}  // namespace krnn::tsplib
