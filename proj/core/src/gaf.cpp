#include "tsimage/gaf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsimage/errors.hpp"

namespace tsimage {

GafImage encode_gaf(const Series& s, int image_size) {
  const Series smoothed = paa(s, image_size);
  const RescaledSeries rescaled = rescale(smoothed, RangeMode::MinusOneToOne);

  const int n = rescaled.length();
  Eigen::VectorXd x(n);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    const double v = rescaled.values[i];
    x[i] = v;
    y[i] = std::sqrt(std::max(0.0, 1.0 - v * v));
  }

  GafImage out;
  out.source_len = s.length();
  out.paa_len = image_size;
  out.degenerate = rescaled.degenerate;
  out.matrix = x * x.transpose() - y * y.transpose();
  return out;
}

Series reconstruct_from_diagonal(const GafImage& g) {
  const int n = g.size();
  if (n == 0) {
    throw DataError("cannot reconstruct from an empty field");
  }
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) {
    double d = g.matrix(i, i);
    if (d > 1.0 + 1e-9 || d < -1.0 - 1e-9) {
      throw DataError("field diagonal entry " + std::to_string(d) +
                      " at position " + std::to_string(i) +
                      " lies outside [-1, 1]");
    }
    d = std::clamp(d, -1.0, 1.0);
    values[i] = std::sqrt((d + 1.0) / 2.0);
  }
  return make_series(std::move(values));
}

}  // namespace tsimage
