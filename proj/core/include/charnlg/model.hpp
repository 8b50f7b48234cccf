#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "charnlg/dataset.hpp"
#include "charnlg/model_config.hpp"

namespace charnlg {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// One GRU cell: z/r gates and candidate state.
///   z = sigmoid(Wz x + Uz h + bz)
///   r = sigmoid(Wr x + Ur h + br)
///   g = tanh(Wh x + Uh (r o h) + bh)
///   h' = (1 - z) o g + z o h
struct GruParams {
  Mat Wz, Wr, Wh;  // hidden x input
  Mat Uz, Ur, Uh;  // hidden x hidden
  Vec bz, br, bh;  // hidden

  static GruParams zeros(int hidden, int input);
};

/// Additive attention: e_j = v . tanh(W q + U h_j), alpha = softmax(e),
/// context = sum_j alpha_j h_j.
struct AttentionParams {
  Mat W;  // attn x hidden      (query projection)
  Mat U;  // attn x 2*hidden    (encoder-state projection)
  Vec v;  // attn
};

struct DenseParams {
  Mat W;
  Vec b;
};

/// All trainable tensors of the encoder-decoder.
struct ModelParams {
  Mat embedding;                        // vocab x embed, one row per id (reserved ids included)
  std::vector<GruParams> encoder_fwd;   // per encoder layer
  std::vector<GruParams> encoder_bwd;
  std::vector<GruParams> decoder;       // layer 0 input = embed + 2*hidden, deeper layers = hidden
  AttentionParams attention;
  std::vector<DenseParams> init_map;    // per decoder layer: hidden x 2*hidden (+ bias)
  DenseParams projection;               // vocab x 3*hidden (+ bias)

  /// Uniform init in [-0.08, 0.08], deterministic given seed.
  static ModelParams init(const ModelConfig& config, std::uint64_t seed);
  static ModelParams zeros(const ModelConfig& config);
};

/// Flat view into one named parameter tensor; `data` uses the tensor's native
/// storage order, `shape` is the logical [rows, cols] (or [n] for vectors).
struct TensorView {
  std::string name;
  double* data;
  std::size_t size;
  std::vector<std::int64_t> shape;
  bool row_major_equals_storage;  // true for vectors
};

/// Stable, name-sorted-independent registry of every tensor in params.
/// Iteration order is fixed by construction so optimizers and the gradient
/// check index coordinates deterministically.
std::vector<TensorView> tensor_views(ModelParams& params);

std::size_t parameter_count(const ModelParams& params);

/// Checkpoint bridging. Tensors are stored row-major under stable names.
Checkpoint params_to_checkpoint(const ModelConfig& config, const Vocabulary& vocab,
                                const ModelParams& params);
ModelParams params_from_checkpoint(const Checkpoint& cp);

}  // namespace charnlg
