#include "charnlg/model.hpp"

#include "charnlg/errors.hpp"
#include "charnlg/rng.hpp"

namespace charnlg {

void ModelConfig::validate() const {
  if (vocab_size < Vocabulary::kReserved)
    throw UsageError("vocab_size must cover the reserved ids");
  if (embed_dim < 1 || hidden_dim < 1 || encoder_layers < 1 || decoder_layers < 1 ||
      max_decode_len < 1)
    throw UsageError("model dimensions must all be >= 1");
  if (cell != "gru") throw UsageError("unsupported cell kind: " + cell);
  if (attention != "additive") throw UsageError("unsupported attention kind: " + attention);
  if (precision != "f64") throw UsageError("unsupported precision: " + precision);
}

GruParams GruParams::zeros(int hidden, int input) {
  GruParams p;
  p.Wz = Mat::Zero(hidden, input);
  p.Wr = Mat::Zero(hidden, input);
  p.Wh = Mat::Zero(hidden, input);
  p.Uz = Mat::Zero(hidden, hidden);
  p.Ur = Mat::Zero(hidden, hidden);
  p.Uh = Mat::Zero(hidden, hidden);
  p.bz = Vec::Zero(hidden);
  p.br = Vec::Zero(hidden);
  p.bh = Vec::Zero(hidden);
  return p;
}

ModelParams ModelParams::zeros(const ModelConfig& config) {
  config.validate();
  const int h = config.hidden_dim;
  const int e = config.embed_dim;
  const int a = config.attention_dim();
  const int v = config.vocab_size;

  ModelParams p;
  p.embedding = Mat::Zero(v, e);
  for (int l = 0; l < config.encoder_layers; ++l) {
    const int in = l == 0 ? e : 2 * h;
    p.encoder_fwd.push_back(GruParams::zeros(h, in));
    p.encoder_bwd.push_back(GruParams::zeros(h, in));
  }
  for (int l = 0; l < config.decoder_layers; ++l) {
    const int in = l == 0 ? e + 2 * h : h;
    p.decoder.push_back(GruParams::zeros(h, in));
    p.init_map.push_back(DenseParams{Mat::Zero(h, 2 * h), Vec::Zero(h)});
  }
  p.attention.W = Mat::Zero(a, h);
  p.attention.U = Mat::Zero(a, 2 * h);
  p.attention.v = Vec::Zero(a);
  p.projection.W = Mat::Zero(v, 3 * h);
  p.projection.b = Vec::Zero(v);
  return p;
}

ModelParams ModelParams::init(const ModelConfig& config, std::uint64_t seed) {
  ModelParams p = zeros(config);
  Rng rng(seed);
  for (auto& view : tensor_views(p)) {
    for (std::size_t i = 0; i < view.size; ++i) view.data[i] = rng.uniform(-0.08, 0.08);
  }
  return p;
}

namespace {

void add_mat(std::vector<TensorView>& views, const std::string& name, Mat& m) {
  views.push_back(TensorView{name, m.data(), static_cast<std::size_t>(m.size()),
                             {m.rows(), m.cols()}, false});
}

void add_vec(std::vector<TensorView>& views, const std::string& name, Vec& v) {
  views.push_back(TensorView{name, v.data(), static_cast<std::size_t>(v.size()), {v.size()}, true});
}

void add_gru(std::vector<TensorView>& views, const std::string& prefix, GruParams& g) {
  add_mat(views, prefix + ".Wz", g.Wz);
  add_mat(views, prefix + ".Wr", g.Wr);
  add_mat(views, prefix + ".Wh", g.Wh);
  add_mat(views, prefix + ".Uz", g.Uz);
  add_mat(views, prefix + ".Ur", g.Ur);
  add_mat(views, prefix + ".Uh", g.Uh);
  add_vec(views, prefix + ".bz", g.bz);
  add_vec(views, prefix + ".br", g.br);
  add_vec(views, prefix + ".bh", g.bh);
}

}  // namespace

std::vector<TensorView> tensor_views(ModelParams& p) {
  std::vector<TensorView> views;
  add_mat(views, "embedding", p.embedding);
  for (std::size_t l = 0; l < p.encoder_fwd.size(); ++l)
    add_gru(views, "encoder." + std::to_string(l) + ".fwd", p.encoder_fwd[l]);
  for (std::size_t l = 0; l < p.encoder_bwd.size(); ++l)
    add_gru(views, "encoder." + std::to_string(l) + ".bwd", p.encoder_bwd[l]);
  for (std::size_t l = 0; l < p.decoder.size(); ++l)
    add_gru(views, "decoder." + std::to_string(l), p.decoder[l]);
  add_mat(views, "attention.W", p.attention.W);
  add_mat(views, "attention.U", p.attention.U);
  add_vec(views, "attention.v", p.attention.v);
  for (std::size_t l = 0; l < p.init_map.size(); ++l) {
    add_mat(views, "init." + std::to_string(l) + ".W", p.init_map[l].W);
    add_vec(views, "init." + std::to_string(l) + ".b", p.init_map[l].b);
  }
  add_mat(views, "projection.W", p.projection.W);
  add_vec(views, "projection.b", p.projection.b);
  return views;
}

std::size_t parameter_count(const ModelParams& params) {
  std::size_t n = 0;
  for (const auto& view : tensor_views(const_cast<ModelParams&>(params))) n += view.size;
  return n;
}

Checkpoint params_to_checkpoint(const ModelConfig& config, const Vocabulary& vocab,
                                const ModelParams& params) {
  Checkpoint cp;
  cp.config = config;
  cp.vocab = vocab;
  cp.meta["kind"] = "seq2seq";
  for (const auto& view : tensor_views(const_cast<ModelParams&>(params))) {
    Tensor t;
    t.shape = view.shape;
    t.values.reserve(view.size);
    if (view.shape.size() == 2 && !view.row_major_equals_storage) {
      // Eigen stores column-major; checkpoints are row-major by contract.
      const auto rows = view.shape[0];
      const auto cols = view.shape[1];
      for (std::int64_t r = 0; r < rows; ++r)
        for (std::int64_t c = 0; c < cols; ++c) t.values.push_back(view.data[c * rows + r]);
    } else {
      t.values.assign(view.data, view.data + view.size);
    }
    cp.tensors.emplace(view.name, std::move(t));
  }
  return cp;
}

ModelParams params_from_checkpoint(const Checkpoint& cp) {
  cp.config.validate();
  ModelParams params = ModelParams::zeros(cp.config);
  for (auto& view : tensor_views(params)) {
    const auto it = cp.tensors.find(view.name);
    if (it == cp.tensors.end())
      throw DatasetError(DatasetError::Kind::CorruptCheckpoint, "missing tensor: " + view.name);
    const Tensor& t = it->second;
    if (t.shape != view.shape)
      throw DatasetError(DatasetError::Kind::CorruptCheckpoint,
                         "tensor " + view.name + " has unexpected shape");
    if (view.shape.size() == 2 && !view.row_major_equals_storage) {
      const auto rows = view.shape[0];
      const auto cols = view.shape[1];
      for (std::int64_t r = 0; r < rows; ++r)
        for (std::int64_t c = 0; c < cols; ++c)
          view.data[c * rows + r] = t.values[static_cast<std::size_t>(r * cols + c)];
    } else {
      std::copy(t.values.begin(), t.values.end(), view.data);
    }
  }
  if (cp.tensors.size() != tensor_views(params).size())
    throw DatasetError(DatasetError::Kind::CorruptCheckpoint, "checkpoint has extra tensors");
  return params;
}

}  // namespace charnlg
