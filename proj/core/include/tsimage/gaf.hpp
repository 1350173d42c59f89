#ifndef TSIMAGE_GAF_HPP
#define TSIMAGE_GAF_HPP

#include <Eigen/Core>

#include "tsimage/series.hpp"

namespace tsimage {

/// Gramian angular field of a series: symmetric S x S matrix whose (i, j)
/// entry is cos(angle_i + angle_j) of the polar-encoded series. Entries lie
/// in [-1, 1]; the diagonal carries 2*x_i^2 - 1 of the rescaled values.
struct GafImage {
  Eigen::MatrixXd matrix;
  int source_len = 0;  // length of the series before smoothing
  int paa_len = 0;     // side of the image (after PAA)
  bool degenerate = false;

  int size() const { return static_cast<int>(matrix.rows()); }
};

/// Encodes series -> PAA(image_size) -> [-1,1] rescale -> polar -> field.
/// Computed in the outer-product form x x' - y y' with y = sqrt(1 - x^2),
/// which equals the cosine-sum form exactly. Requires 1 <= image_size <= n.
GafImage encode_gaf(const Series& s, int image_size);

/// Recovers |x_i| of the rescaled smoothed series from the field diagonal
/// via sqrt((g_ii + 1) / 2). Diagonal entries outside [-1, 1] by more than
/// 1e-9 are a data error; smaller excursions are clamped.
Series reconstruct_from_diagonal(const GafImage& g);

}  // namespace tsimage

#endif
