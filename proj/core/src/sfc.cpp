#include "tsimage/sfc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsimage/errors.hpp"
#include "tsimage/rng.hpp"

namespace tsimage {

BoundingBox Trajectory::bounding_box() const {
  if (points.empty()) {
    throw DataError("trajectory must contain at least one point");
  }
  BoundingBox box{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const Point2& p : points) {
    box.min_x = std::min(box.min_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_x = std::max(box.max_x, p.x);
    box.max_y = std::max(box.max_y, p.y);
  }
  return box;
}

HilbertCurve::HilbertCurve(int order) : order_(order) {
  if (order < 1 || order > 31) {
    throw DataError("hilbert curve order must lie in [1, 31], got " +
                    std::to_string(order));
  }
  side_ = 1u << order;
}

namespace {

// Quadrant rotation/reflection step shared by both directions of the map.
void hilbert_rotate(std::uint32_t side, std::uint32_t& col, std::uint32_t& row,
                    std::uint32_t rx, std::uint32_t ry) {
  if (ry == 0) {
    if (rx == 1) {
      col = side - 1 - col;
      row = side - 1 - row;
    }
    std::swap(col, row);
  }
}

}  // namespace

std::uint64_t HilbertCurve::index(std::uint32_t col, std::uint32_t row) const {
  if (col >= side_ || row >= side_) {
    throw DataError("cell (" + std::to_string(col) + ", " +
                    std::to_string(row) + ") lies outside the 2^" +
                    std::to_string(order_) + " grid");
  }
  std::uint64_t d = 0;
  for (std::uint32_t s = side_ / 2; s > 0; s /= 2) {
    const std::uint32_t rx = (col & s) ? 1 : 0;
    const std::uint32_t ry = (row & s) ? 1 : 0;
    d += static_cast<std::uint64_t>(s) * s * ((3 * rx) ^ ry);
    hilbert_rotate(side_, col, row, rx, ry);
  }
  return d;
}

std::pair<std::uint32_t, std::uint32_t> HilbertCurve::cell(
    std::uint64_t index) const {
  if (index >= cell_count()) {
    throw DataError("hilbert index " + std::to_string(index) +
                    " exceeds 4^" + std::to_string(order_) + " - 1");
  }
  std::uint32_t col = 0;
  std::uint32_t row = 0;
  std::uint64_t t = index;
  for (std::uint32_t s = 1; s < side_; s *= 2) {
    const std::uint32_t rx = 1 & static_cast<std::uint32_t>(t / 2);
    const std::uint32_t ry = 1 & static_cast<std::uint32_t>(t ^ rx);
    hilbert_rotate(s, col, row, rx, ry);
    col += s * rx;
    row += s * ry;
    t /= 4;
  }
  return {col, row};
}

namespace {

std::uint32_t cell_coordinate(double v, double lo, double hi,
                              std::uint32_t side) {
  if (!(hi > lo)) return 0;  // degenerate axis collapses to 0
  const double scaled = (v - lo) / (hi - lo) * side;
  const auto cell = static_cast<std::int64_t>(std::floor(scaled));
  return static_cast<std::uint32_t>(
      std::clamp<std::int64_t>(cell, 0, static_cast<std::int64_t>(side) - 1));
}

}  // namespace

Series linearize(const Trajectory& t, int order, const BoundingBox& box) {
  if (t.points.empty()) {
    throw DataError("cannot linearize an empty trajectory");
  }
  const HilbertCurve curve(order);
  std::vector<double> values;
  values.reserve(t.points.size());
  for (const Point2& p : t.points) {
    const std::uint32_t col =
        cell_coordinate(p.x, box.min_x, box.max_x, curve.grid_side());
    const std::uint32_t row =
        cell_coordinate(p.y, box.min_y, box.max_y, curve.grid_side());
    values.push_back(static_cast<double>(curve.index(col, row)));
  }
  return make_series(std::move(values));
}

Series linearize(const Trajectory& t, int order) {
  return linearize(t, order, t.bounding_box());
}

Series stretch_series(const Series& s, int target_len, std::uint64_t seed) {
  validate(s);
  const int n = s.length();
  if (target_len < n) {
    throw DataError("stretch target " + std::to_string(target_len) +
                    " is shorter than the series (" + std::to_string(n) +
                    "); shrink with paa instead");
  }
  if (target_len == n) return s;

  std::vector<int> repeats(n, 1);
  const int deficit = target_len - n;
  if (deficit >= n) {
    // uniform duplication: point i repeated so the totals partition evenly
    for (int i = 0; i < n; ++i) {
      const auto hi = static_cast<std::int64_t>(i + 1) * target_len / n;
      const auto lo = static_cast<std::int64_t>(i) * target_len / n;
      repeats[i] = static_cast<int>(hi - lo);
    }
  } else {
    // duplicate a random subset of points once each
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    Rng rng(seed);
    rng.shuffle(order);
    for (int i = 0; i < deficit; ++i) repeats[order[i]] = 2;
  }

  Series out;
  out.values.reserve(target_len);
  out.timestamps.resize(target_len);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < repeats[i]; ++r) out.values.push_back(s.values[i]);
  }
  for (int i = 0; i < target_len; ++i) {
    out.timestamps[i] = i + 1;
  }
  return out;
}

}  // namespace tsimage
