#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "shapecap/aggregate.hpp"
#include "shapecap/annotate.hpp"
#include "shapecap/captioner.hpp"
#include "shapecap/detector.hpp"
#include "shapecap/synthetic.hpp"
#include "shapecap/tensor.hpp"

namespace shapecap::pipeline {

// Environment variable that, when set, replaces the configured output root.
inline constexpr const char* kOutputRootEnv = "SHAPECAP_OUT";

// Every knob of one experiment. Files hold one `key = value` per line; `#`
// starts a comment. List values are comma separated.
struct ExperimentConfig {
  // data
  std::string category = "chair";
  std::string dataset_dir;  // ingest an existing dataset instead of generating one
  int bench_count = 16;
  int train_count = 20;
  int test_count = 4;
  std::uint64_t seed = 7;

  // geometry, views, boxes
  int resolution = geometry::kDefaultResolution;
  int samples_per_face = geometry::kDefaultSamplesPerFace;
  int views = 12;
  int image_size = render::kDefaultImageSize;
  double elevation = render::kDefaultElevation;
  int min_pixels = annotate::kDefaultMinPixels;
  std::string box_grouping = "component";

  // detector
  int feature_dim = 256;
  std::vector<int> det_channels{8, 16, 16};
  std::vector<int> det_strides{2, 2, 1};
  int det_pool_size = 2;
  int anchor_stride = 8;
  std::vector<double> anchor_scales{16.0, 32.0, 64.0};
  double nms_iou = 0.5;
  std::vector<double> offset_weights{1.0, 1.0, 1.0, 1.0};
  double positive_iou = 0.5;
  double background_iou = 0.3;
  double lambda = 1.0;
  int proposals_per_view = 64;
  double positive_fraction = 0.25;
  int det_views_per_step = 1;
  std::string det_optimizer = "sgd";
  double det_learning_rate = 1e-5;
  double det_momentum = 0.0;
  int det_steps = 1000;
  std::string finetune_optimizer = "sgd";
  double finetune_learning_rate = 1e-5;
  int finetune_steps = 1000;
  double transfer_threshold = annotate::kDefaultKeepThreshold;
  double detect_threshold = 0.5;

  // aggregation
  double rho = aggregate::kDefaultRho;
  std::string pooling = "max";

  // captioner
  int embedding_dim = 64;
  int hidden_size = 32;
  bool skip_absent = false;
  std::string cap_optimizer = "sgd";
  double cap_learning_rate = 1e-5;
  int cap_steps = 1000;
  int cap_batch_size = 8;
  int max_caption_len = 30;

  // paths
  std::string out_dir = "runs/default";

  static ExperimentConfig parse(const std::string& text);
  static ExperimentConfig load(const std::filesystem::path& path);

  // Sets one key from its textual value; throws std::invalid_argument on an
  // unknown key or a malformed value.
  void set(const std::string& key, const std::string& value);
  std::string get(const std::string& key) const;
  static const std::vector<std::string>& keys();

  // All keys in canonical order, one `key = value` per line.
  std::string echo() const;
  void validate() const;

  // out_dir, or the environment override when set.
  std::filesystem::path output_root() const;

  synthetic::Category category_enum() const;
  int num_classes() const;
  std::vector<render::Camera> cameras() const;
  annotate::BoxGrouping grouping() const;
  detector::DetectorConfig detector_config() const;
  detector::DetectorTrainConfig detector_train_config(bool finetune) const;
  aggregate::AggregationConfig aggregation_config() const;
  captioner::CaptionerConfig captioner_config(int vocab_size) const;
  captioner::CaptionerTrainConfig captioner_train_config() const;
};

}  // namespace shapecap::pipeline
