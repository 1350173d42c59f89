#ifndef TSIMAGE_SERIES_HPP
#define TSIMAGE_SERIES_HPP

#include <cstdint>
#include <vector>

namespace tsimage {

/// A finite univariate series of real observations with strictly
/// increasing non-negative integer timestamps.
struct Series {
  std::vector<double> values;
  std::vector<std::int64_t> timestamps;

  int length() const { return static_cast<int>(values.size()); }
};

/// Builds a series with default timestamps 1..n.
Series make_series(std::vector<double> values);

/// Throws DataError if the series violates its invariants
/// (empty, length mismatch, timestamps not strictly increasing or negative).
void validate(const Series& s);

enum class RangeMode {
  MinusOneToOne,  // values rescaled into [-1, 1]
  ZeroToOne,      // values rescaled into [0, 1]
};

struct RescaledSeries {
  std::vector<double> values;
  std::vector<std::int64_t> timestamps;
  RangeMode mode = RangeMode::MinusOneToOne;
  bool degenerate = false;  // constant input; values pinned to range midpoint

  int length() const { return static_cast<int>(values.size()); }
};

/// Min-max rescaling. A constant series maps to the midpoint of the target
/// range (0 or 0.5) and is flagged degenerate.
RescaledSeries rescale(const Series& s, RangeMode mode);

/// Piecewise aggregate approximation: point i (0-based) joins segment
/// floor(i * target_len / n); each output value is its segment's mean.
/// Output timestamps are 1..target_len. Requires 1 <= target_len <= n.
Series paa(const Series& s, int target_len);

struct PolarSeries {
  std::vector<double> angles;  // arccos of rescaled values, in [0, pi]
  std::vector<double> radii;   // timestamp / span
  double span = 1.0;

  int length() const { return static_cast<int>(angles.size()); }
};

/// Polar representation of a [-1, 1]-rescaled series: angle = arccos(value),
/// radius = timestamp / span. Values beyond [-1, 1] by more than 1e-9 are a
/// data error; smaller excursions are clamped.
PolarSeries to_polar(const RescaledSeries& r, double span);

}  // namespace tsimage

#endif
