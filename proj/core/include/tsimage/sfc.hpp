#ifndef TSIMAGE_SFC_HPP
#define TSIMAGE_SFC_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "tsimage/series.hpp"

namespace tsimage {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct BoundingBox {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;
};

/// An ordered 2D trajectory. The bounding box is the tightest axis-aligned
/// box containing every point.
struct Trajectory {
  std::vector<Point2> points;

  int length() const { return static_cast<int>(points.size()); }
  BoundingBox bounding_box() const;
};

/// Hilbert curve over a 2^order x 2^order grid. Cell (0, 0) is the lower
/// left corner and carries index 0; the curve ends at the lower right
/// corner with index 4^order - 1. Columns grow rightward, rows upward.
class HilbertCurve {
 public:
  explicit HilbertCurve(int order);

  int order() const { return order_; }
  std::uint32_t grid_side() const { return side_; }
  std::uint64_t cell_count() const {
    return static_cast<std::uint64_t>(side_) * side_;
  }

  /// Curve index of grid cell (col, row). Out-of-grid cells are a data error.
  std::uint64_t index(std::uint32_t col, std::uint32_t row) const;

  /// Inverse map: (col, row) of a curve index.
  std::pair<std::uint32_t, std::uint32_t> cell(std::uint64_t index) const;

 private:
  int order_;
  std::uint32_t side_;
};

/// Maps each trajectory point to its Hilbert index over the given bounding
/// box partitioned into 2^order x 2^order equal cells. Cells are half-open
/// with the top/right box edge closed; a zero-extent axis collapses to
/// column/row 0. Output timestamps are 1..len.
Series linearize(const Trajectory& t, int order, const BoundingBox& box);

/// Same, over the trajectory's own bounding box.
Series linearize(const Trajectory& t, int order);

/// Lengthens a series to exactly target_len by duplicating points in
/// temporal order: uniformly when the deficit is at least the current
/// length, otherwise by duplicating a seeded uniform random subset of
/// points once each. Requires target_len >= length.
Series stretch_series(const Series& s, int target_len, std::uint64_t seed);

}  // namespace tsimage

#endif
