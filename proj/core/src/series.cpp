#include "tsimage/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsimage/errors.hpp"

namespace tsimage {

namespace {
constexpr double kArccosClampTolerance = 1e-9;
}

Series make_series(std::vector<double> values) {
  Series s;
  s.timestamps.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    s.timestamps[i] = static_cast<std::int64_t>(i) + 1;
  }
  s.values = std::move(values);
  return s;
}

void validate(const Series& s) {
  if (s.values.empty()) {
    throw DataError("series must contain at least one observation");
  }
  if (s.values.size() != s.timestamps.size()) {
    throw DataError("series has " + std::to_string(s.values.size()) +
                    " values but " + std::to_string(s.timestamps.size()) +
                    " timestamps");
  }
  if (s.timestamps.front() < 0) {
    throw DataError("timestamps must be non-negative");
  }
  for (std::size_t i = 1; i < s.timestamps.size(); ++i) {
    if (s.timestamps[i] <= s.timestamps[i - 1]) {
      throw DataError("timestamps must be strictly increasing (position " +
                      std::to_string(i) + ")");
    }
  }
}

RescaledSeries rescale(const Series& s, RangeMode mode) {
  validate(s);
  RescaledSeries out;
  out.mode = mode;
  out.timestamps = s.timestamps;
  out.values.resize(s.values.size());

  const auto [min_it, max_it] = std::minmax_element(s.values.begin(), s.values.end());
  const double lo = *min_it;
  const double hi = *max_it;

  if (hi == lo) {
    out.degenerate = true;
    const double midpoint = mode == RangeMode::MinusOneToOne ? 0.0 : 0.5;
    std::fill(out.values.begin(), out.values.end(), midpoint);
    return out;
  }

  const double range = hi - lo;
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    const double x = s.values[i];
    out.values[i] = mode == RangeMode::MinusOneToOne
                        ? ((x - hi) + (x - lo)) / range
                        : (x - lo) / range;
  }
  return out;
}

Series paa(const Series& s, int target_len) {
  validate(s);
  const int n = s.length();
  if (target_len <= 0) {
    throw DataError("paa target length must be positive, got " +
                    std::to_string(target_len));
  }
  if (target_len > n) {
    throw DataError("paa cannot upscale: target length " +
                    std::to_string(target_len) + " exceeds series length " +
                    std::to_string(n));
  }

  Series out;
  out.values.assign(target_len, 0.0);
  out.timestamps.resize(target_len);
  std::vector<int> counts(target_len, 0);
  for (int i = 0; i < n; ++i) {
    const int segment = static_cast<int>(
        (static_cast<std::int64_t>(i) * target_len) / n);
    out.values[segment] += s.values[i];
    ++counts[segment];
  }
  for (int b = 0; b < target_len; ++b) {
    out.values[b] /= counts[b];
    out.timestamps[b] = b + 1;
  }
  return out;
}

PolarSeries to_polar(const RescaledSeries& r, double span) {
  if (r.mode != RangeMode::MinusOneToOne) {
    throw DataError("polar representation requires [-1, 1] rescaling");
  }
  if (!(span > 0.0)) {
    throw DataError("polar span constant must be positive");
  }
  if (r.values.size() != r.timestamps.size()) {
    throw DataError("rescaled series has inconsistent timestamp count");
  }

  PolarSeries out;
  out.span = span;
  out.angles.resize(r.values.size());
  out.radii.resize(r.values.size());
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    double x = r.values[i];
    if (x > 1.0 + kArccosClampTolerance || x < -1.0 - kArccosClampTolerance) {
      throw DataError("rescaled value " + std::to_string(x) + " at position " +
                      std::to_string(i) + " lies outside [-1, 1]");
    }
    x = std::clamp(x, -1.0, 1.0);
    out.angles[i] = std::acos(x);
    out.radii[i] = static_cast<double>(r.timestamps[i]) / span;
  }
  return out;
}

}  // namespace tsimage
