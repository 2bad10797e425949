#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "shapecap/annotate.hpp"
#include "shapecap/box.hpp"
#include "shapecap/render.hpp"
#include "shapecap/tensor.hpp"

namespace shapecap::detector {

// 0.5 x^2 for |x| < 1, |x| - 0.5 otherwise.
double smooth_l1(double x);
double smooth_l1_grad(double x);

// Class vectors have C + 1 entries with background last. The result is
// cross-entropy(pred_probs, gt_probs) + lambda * sum_k smooth_l1(pred - gt),
// where the localization sum is skipped when gt_probs is one-hot at the
// background entry. Throws std::invalid_argument if gt_probs is not one-hot.
double detector_loss(std::span<const double> pred_probs, std::span<const double> pred_offsets,
                     std::span<const double> gt_probs, std::span<const double> gt_offsets,
                     double lambda);

// Shape of the network. Persisted in checkpoints.
struct DetectorConfig {
  int num_classes = 4;
  int image_size = render::kDefaultImageSize;
  std::vector<int> channels{8, 16, 16};
  std::vector<int> strides{2, 2, 1};
  int pool_size = 2;
  int feature_dim = 256;
  int anchor_stride = 8;
  std::vector<double> anchor_scales{16.0, 32.0, 64.0};
  double nms_iou = 0.5;
  BoxOffsets offset_weights = kUnitOffsetWeights;

  void validate() const;
  int feature_stride() const;
  int feature_map_size() const;
};

// Conv backbone (3x3 kernels, padding 1, tanh), per-region average pooling
// onto a pool_size^2 grid, a tanh feature layer of width feature_dim, and two
// linear heads reading [feature, box geometry]: C + 1 class logits and 4 box
// offsets.
struct DetectorModel {
  DetectorConfig config;
  std::vector<Tensor> conv_weight;  // [out, in, 3, 3]
  std::vector<Tensor> conv_bias;    // [out]
  Tensor feature_weight;            // [D, channels * pool^2]
  Tensor feature_bias;              // [D]
  Tensor class_weight;              // [C + 1, D + 4]
  Tensor class_bias;                // [C + 1]
  Tensor offset_weight;             // [4, D + 4]
  Tensor offset_bias;               // [4]

  static DetectorModel zeros(const DetectorConfig& config);
  static DetectorModel initialize(const DetectorConfig& config, std::uint64_t seed);

  NamedTensors parameters();
  ConstNamedTensors parameters() const;
  DetectorModel zeros_like() const { return zeros(config); }
  bool all_finite() const;

  void save(const std::filesystem::path& path) const;
  static DetectorModel load(const std::filesystem::path& path);
};

inline constexpr int kBackgroundLabel = -1;

enum class MatchKind { unmatched, positive, background, ignored };

struct Proposal {
  Box box;
  std::optional<annotate::PartBox> matched_gt;
  int label = kBackgroundLabel;
  double iou = 0.0;
  MatchKind match = MatchKind::unmatched;
};

// Anchors of every scale and aspect (1:1, 1:2, 2:1) centered on a regular
// grid with the given stride, clipped to the image. With ground truth, its
// boxes are appended verbatim.
std::vector<Proposal> propose_regions(const render::ViewImage& view, int stride,
                                      std::span<const double> scales,
                                      const std::vector<annotate::PartBox>* ground_truth = nullptr);

// Labels proposals: IoU >= positive_iou with some box takes that box's class,
// IoU < background_iou becomes background, anything between is ignored.
void match_proposals(std::vector<Proposal>& proposals,
                     const std::vector<annotate::PartBox>& ground_truth, double positive_iou,
                     double background_iou);

// Network input: [3, H, W] with pixel values mapped to [-1, 1].
Tensor image_tensor(const render::ViewImage& view);

// A training proposal with its class (kBackgroundLabel for background) and
// regression target.
struct ProposalTarget {
  Box box;
  int label = kBackgroundLabel;
  BoxOffsets offsets{};
};

// Mean detector_loss over the proposals. When `grads` is given, the gradient
// of weight * loss is added into it.
double detector_objective(const DetectorModel& model, const Tensor& input,
                          const std::vector<ProposalTarget>& proposals, double lambda,
                          DetectorModel* grads = nullptr, double weight = 1.0);

// Penultimate-layer feature (length D) of the region. Boxes with area below
// 4 pixels or outside the image are rejected.
std::vector<double> region_features(const DetectorModel& model, const render::ViewImage& view,
                                    const Box& box);

struct Detection {
  Box box;
  std::vector<double> probs;  // length C, renormalized without background
  std::vector<double> feature;
  int view_index = 0;

  annotate::PartBox as_part_box() const;
};

// Scores every anchor, drops background-argmax anchors, regresses the rest,
// keeps max prob > score_threshold, and applies per-class NMS.
std::vector<Detection> detect(const DetectorModel& model, const render::ViewImage& view,
                              double score_threshold, int view_index = 0);

struct DetectorExample {
  render::ViewImage view;
  std::vector<annotate::PartBox> boxes;
};

struct DetectorTrainConfig {
  OptimizerConfig optimizer;
  int steps = 1000;
  int views_per_step = 1;
  int proposals_per_view = 64;
  double positive_fraction = 0.25;
  double positive_iou = 0.5;
  double background_iou = 0.3;
  double lambda = 1.0;
  std::uint64_t seed = 1;
  std::function<void(int step, double loss)> on_step;
};

// Mini-batch gradient descent on the mean detector objective. Starts from
// `initial` when given (fine-tuning), otherwise from a seeded initialization.
// Throws std::runtime_error if no proposal matches any ground-truth box.
DetectorModel train_detector(const std::vector<DetectorExample>& dataset,
                             const DetectorConfig& config, const DetectorTrainConfig& train,
                             const DetectorModel* initial = nullptr);

}  // namespace shapecap::detector
