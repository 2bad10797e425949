#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "shapecap/config.hpp"
#include "shapecap/metrics.hpp"

namespace shapecap::pipeline {

enum class Stage {
  generate,
  voxelize,
  render,
  gengt,
  train_geom_detector,
  transfer_gt,
  finetune_detector,
  extract_features,
  train_captioner,
  caption,
  eval,
  report,
};

const std::vector<Stage>& all_stages();
const char* to_string(Stage stage);
Stage stage_from_string(const std::string& name);
// Stages whose manifests must exist before `stage` can run.
std::vector<Stage> upstream_of(Stage stage);
bool is_training_stage(Stage stage);

// Shape split roles: bench shapes carry segmentation only and train the
// geometry detector; train/test shapes also carry colors and captions.
enum class Split { bench, train, test };
const char* to_string(Split split);
Split split_from_string(const std::string& name);

struct ShapeRecord {
  std::string shape_id;
  Split split = Split::train;
  std::string caption;                      // empty for bench shapes
  std::vector<render::Rgb> palette;         // per class; empty for bench shapes
  std::filesystem::path obj_path;
  std::filesystem::path label_path;
};

// index.jsonl: one JSON object per shape with shape_id, split, caption,
// palette ([[r,g,b], ...]), obj and labels (paths relative to the index).
std::vector<ShapeRecord> read_dataset_index(const std::filesystem::path& index_path);
void write_dataset_index(const std::vector<ShapeRecord>& records,
                         const std::filesystem::path& index_path);

// Writes generated shapes (meshes, labels, index) into `dir`.
std::vector<ShapeRecord> write_synthetic_dataset(const ExperimentConfig& config,
                                                 const std::filesystem::path& dir);

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t hash = 0xcbf29ce484222325ULL);

struct StageResult {
  Stage stage = Stage::generate;
  bool skipped = false;  // manifest matched the current inputs
  std::string message;
};

// Runs one stage under config.output_root(). Throws std::runtime_error naming
// the missing stage when upstream artifacts are absent.
StageResult run_stage(const ExperimentConfig& config, Stage stage, std::ostream* log = nullptr);
std::vector<StageResult> run_all(const ExperimentConfig& config, std::ostream* log = nullptr);

// Throws if any test-split shape id appears in a training stage manifest.
void check_hygiene(const std::filesystem::path& root);

// For every ground-truth box, the best IoU over detections (restricted to the
// box's class when class_aware), averaged over all boxes.
double mean_best_iou(const std::vector<std::vector<annotate::PartBox>>& detections,
                     const std::vector<std::vector<annotate::PartBox>>& ground_truth,
                     bool class_aware);

// shape_id -> sentences, from JSONL records {"shape_id": ..., "sentences": [...]}.
std::map<std::string, std::vector<std::string>> read_sentences(const std::filesystem::path& path);

// Scores candidates (first sentence per shape) against all references.
metrics::MetricTable score_sentences(const std::map<std::string, std::vector<std::string>>& candidates,
                                     const std::map<std::string, std::vector<std::string>>& references);

// Plain-text table with columns B-1 B-2 B-3 B-4 M R C EM, one row per label.
std::string format_metric_rows(const std::vector<std::pair<std::string, metrics::MetricTable>>& rows);

}  // namespace shapecap::pipeline
