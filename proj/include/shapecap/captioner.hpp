#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "shapecap/aggregate.hpp"
#include "shapecap/tensor.hpp"
#include "shapecap/text.hpp"

namespace shapecap::captioner {

// Gated recurrent unit with the reset gate applied before the candidate's
// recurrent product:
//   z = sigmoid(Wz x + Uz h + bz)
//   r = sigmoid(Wr x + Ur h + br)
//   n = tanh(Wh x + Uh (r * h) + bh)
//   h' = (1 - z) * h + z * n
struct GruParams {
  Tensor w_z, w_r, w_h;  // [H, input]
  Tensor u_z, u_r, u_h;  // [H, H]
  Tensor b_z, b_r, b_h;  // [H]

  static GruParams zeros(std::size_t input, std::size_t hidden);
  std::size_t input_size() const { return w_z.shape[1]; }
  std::size_t hidden_size() const { return w_z.shape[0]; }
  void append_parameters(const std::string& prefix, NamedTensors& out);
};

struct GruStep {
  std::vector<double> x, h_prev, z, r, n, h;
};

GruStep gru_forward(const GruParams& p, std::span<const double> x, std::span<const double> h);
std::vector<double> gru_cell(const GruParams& p, std::span<const double> x,
                             std::span<const double> h);
// Backpropagates d(loss)/d(h') through one step: parameter gradients are
// added into `grads`, input and previous-state gradients written to d_x and
// d_h_prev.
void gru_backward(const GruParams& p, const GruStep& step, std::span<const double> d_h,
                  GruParams& grads, std::span<double> d_x, std::span<double> d_h_prev);

struct CaptionerConfig {
  int num_classes = 4;
  int feature_dim = 256;
  int vocab_size = 16;
  int embedding_dim = 64;
  int hidden_size = 32;
  // Leave absent classes out of the encoder sequence instead of feeding zeros.
  bool skip_absent = false;

  void validate() const;
};

struct CaptionerModel {
  CaptionerConfig config;
  Tensor embedding;    // [W, E]
  GruParams encoder;   // input D + 1 (feature and presence bit)
  GruParams decoder;   // input E
  Tensor out_weight;   // [W, H]
  Tensor out_bias;     // [W]

  static CaptionerModel zeros(const CaptionerConfig& config);
  static CaptionerModel initialize(const CaptionerConfig& config, std::uint64_t seed);

  NamedTensors parameters();
  ConstNamedTensors parameters() const;
  CaptionerModel zeros_like() const { return zeros(config); }

  void save(const std::filesystem::path& path) const;
  static CaptionerModel load(const std::filesystem::path& path);
};

struct EncoderTrace {
  std::vector<GruStep> steps;
  std::vector<double> hidden;
};

// Runs the encoder over F_1..F_C (each followed by its presence bit) from a
// zero state.
EncoderTrace encode_trace(const CaptionerModel& model, const aggregate::ShapeFeature& feature);
std::vector<double> encode(const CaptionerModel& model, const aggregate::ShapeFeature& feature);
void encode_backward(const CaptionerModel& model, const EncoderTrace& trace,
                     std::span<const double> d_hidden, CaptionerModel& grads);

// -sum_n log p(t_n | t_<n, F) over the caption's words and the closing EOS,
// decoding from the encoder state with teacher forcing. Adds the gradient of
// weight * loss into `grads` when given.
double caption_loss(const CaptionerModel& model, const aggregate::ShapeFeature& feature,
                    const text::TokenSequence& target, CaptionerModel* grads = nullptr,
                    double weight = 1.0);

// Greedy decoding from BOS until EOS or max_len words. PAD and BOS are never
// emitted.
text::TokenSequence generate_caption(const CaptionerModel& model,
                                     const aggregate::ShapeFeature& feature, int max_len);

struct CaptionerTrainConfig {
  OptimizerConfig optimizer;
  int steps = 1000;
  int batch_size = 8;
  std::uint64_t seed = 1;
  std::function<void(int step, double loss)> on_step;
};

using CaptionExample = std::pair<aggregate::ShapeFeature, text::TokenSequence>;

// Mini-batch gradient descent on the mean caption loss.
CaptionerModel train_captioner(const std::vector<CaptionExample>& dataset,
                               const CaptionerConfig& config, const CaptionerTrainConfig& train,
                               const CaptionerModel* initial = nullptr);

}  // namespace shapecap::captioner
