#include "tsimage/mtf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsimage/errors.hpp"

namespace tsimage {

QuantileBinning quantize(const Series& s, int quantile_count) {
  validate(s);
  if (quantile_count < 2) {
    throw DataError("quantile count must be at least 2, got " +
                    std::to_string(quantile_count));
  }
  const int n = s.length();
  const int q = quantile_count;

  std::vector<double> sorted = s.values;
  std::sort(sorted.begin(), sorted.end());

  QuantileBinning out;
  out.quantile_count = q;
  out.boundaries.resize(q - 1);
  for (int i = 1; i < q; ++i) {
    // order statistic at rank ceil(i*n/q), 1-based
    const std::int64_t rank =
        (static_cast<std::int64_t>(i) * n + q - 1) / q;
    out.boundaries[i - 1] = sorted[rank - 1];
  }

  out.assignment.resize(n);
  std::vector<bool> occupied(q, false);
  for (int i = 0; i < n; ++i) {
    const int bin = static_cast<int>(
        std::lower_bound(out.boundaries.begin(), out.boundaries.end(),
                         s.values[i]) -
        out.boundaries.begin());
    out.assignment[i] = bin;
    occupied[bin] = true;
  }
  out.degenerate = std::count(occupied.begin(), occupied.end(), true) < 2;
  return out;
}

MarkovMatrix transition_matrix(const QuantileBinning& binning,
                               TransitionOrientation orientation) {
  const int n = static_cast<int>(binning.assignment.size());
  const int q = binning.quantile_count;
  if (n < 2) {
    throw DataError("transition matrix needs at least 2 points, got " +
                    std::to_string(n));
  }

  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(q, q);
  for (int t = 1; t < n; ++t) {
    const int from = binning.assignment[t - 1];
    const int to = binning.assignment[t];
    if (orientation == TransitionOrientation::RowStochastic) {
      counts(from, to) += 1.0;
    } else {
      counts(to, from) += 1.0;
    }
  }

  MarkovMatrix out;
  out.orientation = orientation;
  out.weights = Eigen::MatrixXd::Zero(q, q);
  if (orientation == TransitionOrientation::RowStochastic) {
    for (int i = 0; i < q; ++i) {
      const double total = counts.row(i).sum();
      if (total > 0.0) {
        out.weights.row(i) = counts.row(i) / total;
      } else {
        out.weights.row(i).setConstant(1.0 / q);
      }
    }
  } else {
    for (int j = 0; j < q; ++j) {
      const double total = counts.col(j).sum();
      if (total > 0.0) {
        out.weights.col(j) = counts.col(j) / total;
      } else {
        out.weights.col(j).setConstant(1.0 / q);
      }
    }
  }
  return out;
}

namespace {

// Averages non-overlapping m x m patches; trailing patches cover whatever
// remains. Result side = ceil(n / m).
Eigen::MatrixXd blur_field(const Eigen::MatrixXd& field, int m) {
  const int n = static_cast<int>(field.rows());
  const int side = (n + m - 1) / m;
  Eigen::MatrixXd out(side, side);
  for (int br = 0; br < side; ++br) {
    const int r0 = br * m;
    const int rows = std::min(m, n - r0);
    for (int bc = 0; bc < side; ++bc) {
      const int c0 = bc * m;
      const int cols = std::min(m, n - c0);
      out(br, bc) = field.block(r0, c0, rows, cols).mean();
    }
  }
  return out;
}

// Center-pads a matrix to target x target by replicating edge rows/columns.
Eigen::MatrixXd pad_to(const Eigen::MatrixXd& in, int target) {
  const int side = static_cast<int>(in.rows());
  if (side == target) return in;
  const int before = (target - side) / 2;
  Eigen::MatrixXd out(target, target);
  for (int r = 0; r < target; ++r) {
    const int sr = std::clamp(r - before, 0, side - 1);
    for (int c = 0; c < target; ++c) {
      const int sc = std::clamp(c - before, 0, side - 1);
      out(r, c) = in(sr, sc);
    }
  }
  return out;
}

}  // namespace

MtfImage encode_mtf(const Series& s, int quantile_count, int image_size,
                    TransitionOrientation orientation) {
  const int n = s.length();
  if (image_size < 1 || image_size > n) {
    throw DataError("mtf image size must lie in [1, " + std::to_string(n) +
                    "], got " + std::to_string(image_size));
  }

  const QuantileBinning binning = quantize(s, quantile_count);
  const MarkovMatrix markov = transition_matrix(binning, orientation);

  Eigen::MatrixXd field(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      field(a, b) = markov.weights(binning.assignment[a], binning.assignment[b]);
    }
  }

  MtfImage out;
  out.quantile_count = quantile_count;
  out.degenerate = binning.degenerate;
  out.blur_factor = (n + image_size - 1) / image_size;
  out.matrix = pad_to(blur_field(field, out.blur_factor), image_size);
  return out;
}

}  // namespace tsimage
