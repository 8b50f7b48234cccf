#pragma once

#include <utility>
#include <vector>

#include "charnlg/model.hpp"

namespace charnlg {

/// Per-position bidirectional encoder states plus the boundary summary used to
/// initialize the decoder.
struct EncoderOutput {
  Mat states;       // (2*hidden) x n, column j = [fwd_j; bwd_j] of the last layer
  Vec final_state;  // [fwd at last position; bwd at first position]
};

/// Bidirectional GRU encoding of a non-empty id sequence.
/// Throws NeuralError(IdOutOfRange) on ids outside the embedding table.
EncoderOutput encode(const ModelConfig& config, const ModelParams& params,
                     const std::vector<int>& source_ids);

/// Additive attention over encoder states for one decoder query.
/// Returns (context, weights); weights sum to 1 and context is their convex
/// combination of state columns.
std::pair<Vec, Vec> attend(const ModelParams& params, const Vec& decoder_state,
                           const Mat& encoder_states);

struct DecoderState {
  std::vector<Vec> layers;  // one hidden vector per decoder layer
};

/// Immutable per-source decoding context: encoder states, the cached attention
/// memory projection (U * states), and the learned initial decoder state.
struct DecodeContext {
  Mat states;
  Mat umem;
  DecoderState initial;
};

DecodeContext make_decode_context(const ModelConfig& config, const ModelParams& params,
                                  const std::vector<int>& source_ids);

/// One decoder step: consumes the previous output id, returns log-probabilities
/// over the vocabulary (exp-sum 1) and the successor state. Pure.
std::pair<Vec, DecoderState> decode_step(const ModelConfig& config, const ModelParams& params,
                                         const DecodeContext& ctx, int prev_id,
                                         const DecoderState& state);

/// Length normalization of Wu et al.: ((5 + length) / 6)^alpha.
double length_penalty(int length, double alpha);

/// Teacher-forced raw log-probability of target_ids (BOS-conditioned, the ids
/// themselves scored in order; an EOS terminator is scored like any id).
double score_sequence(const ModelConfig& config, const ModelParams& params,
                      const std::vector<int>& source_ids, const std::vector<int>& target_ids);

/// Argmax decoding until EOS or max_len. The returned ids include the
/// terminating EOS when one was produced. Reserved ids other than EOS are
/// never emitted.
std::vector<int> greedy_decode(const ModelConfig& config, const ModelParams& params,
                               const std::vector<int>& source_ids, int max_len);

struct BeamHypothesis {
  std::vector<int> ids;   // emitted ids, including the terminating EOS if finished
  double raw = 0.0;       // sum of log-probabilities, <= 0
  double normalized = 0.0;  // raw / length_penalty(|ids|, alpha)
  bool finished = false;
  int finish_step = 0;    // step at which EOS fired (or max_len for unfinished)
  DecoderState state;
};

/// Hypotheses sorted by normalized score descending; ties break by earlier
/// finish step, then insertion order. Size <= beam width.
struct NBestList {
  std::vector<BeamHypothesis> hyps;

  bool empty() const { return hyps.empty(); }
  const BeamHypothesis& best() const { return hyps.front(); }
};

/// Standard beam search over raw scores: expand every live hypothesis over the
/// vocabulary, keep the top beam_width candidates, retire EOS-terminated ones
/// to the finished pool, stop once the pool holds beam_width entries or
/// max_len is reached. Leftover live hypotheses fill the list only when the
/// pool comes up short.
NBestList beam_search(const ModelConfig& config, const ModelParams& params,
                      const std::vector<int>& source_ids, int beam_width, double alpha,
                      int max_len);

}  // namespace charnlg
