#ifndef TSIMAGE_MTF_HPP
#define TSIMAGE_MTF_HPP

#include <Eigen/Core>
#include <vector>

#include "tsimage/series.hpp"

namespace tsimage {

/// Equal-mass discretization of a series into Q quantile bins. Boundaries
/// are the order statistics at ranks ceil(i*n/Q), i = 1..Q-1 (inverted-CDF
/// empirical quantiles); a point lands in bin b iff
/// boundary[b-1] < x <= boundary[b], so ties on a boundary fall to the
/// lower bin.
struct QuantileBinning {
  int quantile_count = 0;
  std::vector<double> boundaries;  // Q-1 sorted values
  std::vector<int> assignment;     // per-point bin index in [0, Q)
  bool degenerate = false;         // fewer than 2 distinct bins occupied
};

QuantileBinning quantize(const Series& s, int quantile_count);

/// Which way Eq.-style transition counts are conditioned. RowStochastic
/// (default) normalizes rows: W(i, j) = P(next in bin j | current in bin i).
/// ColumnStochastic normalizes columns: W(i, j) = P(prev in bin j accounts
/// for arrivals into bin i), kept for study of the alternate reading.
enum class TransitionOrientation { RowStochastic, ColumnStochastic };

/// First-order Markov transition matrix over quantile bins. Bins that never
/// occur as a transition source (row) / target (column) get the uniform
/// distribution 1/Q in the normalized direction. Requires n >= 2.
struct MarkovMatrix {
  Eigen::MatrixXd weights;  // Q x Q, entries in [0, 1]
  TransitionOrientation orientation = TransitionOrientation::RowStochastic;
};

MarkovMatrix transition_matrix(
    const QuantileBinning& binning,
    TransitionOrientation orientation = TransitionOrientation::RowStochastic);

/// Markov transition field: the n x n field F(a, b) = W(bin_a, bin_b)
/// averaged over non-overlapping m x m patches, m = ceil(n / image_size).
/// Trailing partial patches average over their actual extent; if the result
/// comes out smaller than image_size it is center-padded by edge
/// replication.
struct MtfImage {
  Eigen::MatrixXd matrix;  // image_size x image_size, entries in [0, 1]
  int quantile_count = 0;
  int blur_factor = 0;
  bool degenerate = false;

  int size() const { return static_cast<int>(matrix.rows()); }
};

MtfImage encode_mtf(
    const Series& s, int quantile_count, int image_size,
    TransitionOrientation orientation = TransitionOrientation::RowStochastic);

}  // namespace tsimage

#endif
