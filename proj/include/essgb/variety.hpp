#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "essgb/field.hpp"
#include "essgb/poly.hpp"

namespace essgb {

/// m >= 1 pairwise distinct points of F_p^n.
class Variety {
 public:
  /// Throws InputError on m = 0, wrong point length, out-of-range
  /// coordinates, or duplicate points.
  Variety(PrimeField field, std::size_t n_vars, std::vector<Point> points);

  /// Like the constructor but drops repeated points (first occurrence kept).
  /// `removed` receives the number of dropped rows.
  static Variety deduplicated(PrimeField field, std::size_t n_vars, std::vector<Point> points,
                              std::size_t* removed = nullptr);

  const PrimeField& field() const { return field_; }
  std::size_t n_vars() const { return n_vars_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t t) const { return points_[t]; }

 private:
  PrimeField field_;
  std::size_t n_vars_;
  std::vector<Point> points_;
};

struct ParseOptions {
  bool strict = false;
};

struct ParsedVariety {
  Variety variety;
  std::vector<std::string> warnings;
};

/// Reads the text format
///   p <prime>
///   n <variable count>
///   m <point count>
///   <m lines of n space-separated integers in [0,p)>
/// Duplicate rows are an error in strict mode and dropped with a warning
/// otherwise. Throws InputError with a line-numbered diagnostic.
ParsedVariety parse_variety(std::string_view text, const ParseOptions& options = {});

/// Inverse of parse_variety.
std::string render_variety(const Variety& v);

/// m distinct points with coordinates drawn uniformly from F_p, fully
/// determined by (p, n, m, seed). Throws InputError when m > p^n.
Variety random_variety(std::uint32_t p, std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace essgb
