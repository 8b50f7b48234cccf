#pragma once

#include <string>

namespace charnlg {

/// Hyperparameters of the character-level encoder-decoder. Defaults mirror the
/// best decoding setup: 1 encoder layer, 2 decoder layers, GRU cells, additive
/// attention. Only 64-bit float training is implemented.
struct ModelConfig {
  int vocab_size = 0;
  int embed_dim = 16;
  int hidden_dim = 32;
  int encoder_layers = 1;
  int decoder_layers = 2;
  std::string cell = "gru";
  std::string attention = "additive";
  std::string precision = "f64";
  int max_decode_len = 350;

  /// Attention scoring dimension; tied to hidden_dim.
  int attention_dim() const { return hidden_dim; }

  /// Throws UsageError on dims < 1 or an unsupported cell/attention/precision kind.
  void validate() const;

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

}  // namespace charnlg
