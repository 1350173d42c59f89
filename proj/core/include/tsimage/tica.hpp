#ifndef TSIMAGE_TICA_HPP
#define TSIMAGE_TICA_HPP

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace tsimage {

/// Square image with one matrix per channel, all sides equal.
using MultiChannelImage = std::vector<Eigen::MatrixXd>;

/// Structure of one pretraining block. A block covers span_units x
/// span_units hidden-unit positions per map; each unit sees an s x s
/// window of the (s + span - 1)-sided input patch at its own offset, so
/// units tied with period tile_period and units with identical footprints
/// (same offset, different maps) both occur.
struct TiledLayerConfig {
  int field_size = 8;      // receptive field side s
  int tile_period = 2;     // weight-tying period k
  int map_count = 6;       // feature maps l
  int span_units = 4;      // block side in units; default 2k
  int input_channels = 1;

  int patch_side() const { return field_size + span_units - 1; }
  int patch_dim() const {
    return patch_side() * patch_side() * input_channels;
  }
  int filter_dim() const {
    return field_size * field_size * input_channels;
  }
  int unit_count() const { return map_count * span_units * span_units; }
};

/// Precomputed layout: receptive-field columns per unit (in canonical
/// channel-row-column filter order), the weight-tying partition, and the
/// pooling topology V (each pooling unit spans the contiguous 3x3
/// neighborhood of its map position, truncated at block borders).
struct TiledLayerLayout {
  TiledLayerConfig config;
  std::vector<std::vector<int>> footprints;
  std::vector<std::vector<int>> tied_groups;
  Eigen::MatrixXd pooling;  // V: unit_count x unit_count, entries 0/1

  static TiledLayerLayout make(const TiledLayerConfig& config);

  int unit_index(int map, int row_offset, int col_offset) const {
    const int span = config.span_units;
    return (map * span + row_offset) * span + col_offset;
  }
};

struct TiledLayer {
  TiledLayerLayout layout;
  Eigen::MatrixXd weights;  // unit_count x patch_dim
};

/// Zeroes weight entries outside each unit's receptive field. Idempotent.
void localize(Eigen::MatrixXd& weights, const TiledLayerLayout& layout);

/// Replaces each tied set of filters by the set's mean, aligned by
/// receptive-field offset. Idempotent.
void tie_weights(Eigen::MatrixXd& weights, const TiledLayerLayout& layout);

/// Symmetric (Loewdin) orthonormalization of each group of rows that share
/// an identical receptive-field footprint; rows with a unique footprint are
/// normalized. A rank-deficient group Gram matrix gets a 1e-12 ridge.
void orthogonalize_local_rf(Eigen::MatrixXd& weights,
                            const TiledLayerLayout& layout);

/// Smoothed TICA objective: sum over patches and pooling units of
/// sqrt(V (W x)^2 + epsilon). Patches are rows of `patches`.
double tica_objective(const Eigen::MatrixXd& patches, const TiledLayer& layer,
                      double epsilon);

/// Gradient of tica_objective with respect to the weights.
Eigen::MatrixXd tica_gradient(const Eigen::MatrixXd& patches,
                              const TiledLayer& layer, double epsilon);

struct PretrainOptions {
  int max_iterations = 200;
  double tolerance = 1e-6;  // relative objective decrease per outer iteration
  double epsilon = 1e-8;    // smoothing constant inside the pooling sqrt
  int max_halvings = 50;    // line-search budget
};

struct PretrainResult {
  int iterations = 0;
  double objective = 0.0;
  bool stalled = false;  // line search exhausted without improvement
  std::vector<double> objective_trace;  // initial value, then each accepted f
};

/// Seeded standard-normal weights projected onto the constraint set
/// (localize, tie, orthogonalize, tie).
TiledLayer make_layer(const TiledLayerConfig& config, std::uint64_t seed);

/// Batch projected gradient descent with backtracking line search. Each
/// candidate step applies localize, tieWeights, orthogonalizeLocalRF,
/// tieWeights; the gradient is held fixed while the step is halved. Stops
/// on relative objective decrease below tolerance or on max_iterations.
PretrainResult pretrain_tica(const Eigen::MatrixXd& patches, TiledLayer& layer,
                             const PretrainOptions& options = {});

/// One convolution + pooling stage of the trained network. The filter for
/// grid position (i, j) of map m is row (m*k + i%k)*k + j%k of `filters`.
struct NetworkStage {
  int field_size = 0;
  int tile_period = 0;
  int map_count = 0;
  int input_channels = 0;
  Eigen::MatrixXd filters;  // (map_count*k^2) x (s^2 * channels)

  int filter_count() const {
    return map_count * tile_period * tile_period;
  }
};

/// Valid tiled convolution, square nonlinearity, and 3x3 stride-1 TICA
/// pooling truncated at borders, so the pooled maps keep the convolution
/// grid size. Output has map_count channels of side (in - s + 1).
MultiChannelImage stage_forward(const NetworkStage& stage,
                                const MultiChannelImage& input);

/// Stacked tiled convolutional network (default: 8x8 then 3x3 fields,
/// k = 2, 6 maps each).
struct TiledNetwork {
  std::vector<NetworkStage> stages;
  std::uint64_t seed = 0;

  /// Smallest image side the stacked stages accept.
  int min_input_side() const;
  /// Length of the flattened feature vector for a given image side.
  int feature_length(int image_side) const;
  /// Features: final-stage pooled maps flattened map-major, then row-major.
  Eigen::VectorXd forward(const MultiChannelImage& image) const;
};

/// Extracts the k x k distinct filters per map from a pretrained block.
NetworkStage stage_from_layer(const TiledLayer& layer);

/// All non-overlapping patch_side x patch_side patches of every image,
/// flattened channel-major; one row per patch.
Eigen::MatrixXd extract_patches(const std::vector<MultiChannelImage>& images,
                                int patch_side);

/// Greedy layer-wise pretraining of the default two-stage network on the
/// given images: stage one on raw image patches, stage two on the pooled
/// outputs of stage one.
TiledNetwork pretrain_network(const std::vector<MultiChannelImage>& images,
                              std::uint64_t seed,
                              const PretrainOptions& options = {});

}  // namespace tsimage

#endif
