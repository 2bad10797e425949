#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "shapecap/detector.hpp"

namespace shapecap::aggregate {

enum class PoolingMode { max, mean, mixed, max_all };

PoolingMode pooling_from_string(const std::string& name);
const char* to_string(PoolingMode mode);

inline constexpr double kDefaultRho = 0.8;

struct AggregationConfig {
  double rho = kDefaultRho;
  PoolingMode mode = PoolingMode::max;
  int num_classes = 4;
  int feature_dim = 256;

  void validate() const;
};

// F = [F_1, ..., F_C] in class order. Classes with no pooled part hold zeros
// and a false presence flag.
struct ShapeFeature {
  std::vector<std::vector<double>> per_class;
  std::vector<bool> present;

  int num_classes() const { return static_cast<int>(per_class.size()); }
  int feature_dim() const { return per_class.empty() ? 0 : static_cast<int>(per_class[0].size()); }

  bool operator==(const ShapeFeature&) const = default;
};

// Detections whose largest class probability is strictly above rho.
std::vector<detector::Detection> select_parts(const std::vector<detector::Detection>& detections,
                                              double rho);

// Groups detections by argmax class and pools their features:
//   max      elementwise max per class
//   mean     elementwise mean per class
//   mixed    per-view max per class, then mean of those over views
//   max_all  one elementwise max over every detection, copied into each class
//            slot (presence set for all classes when anything was detected)
ShapeFeature aggregate(const std::vector<detector::Detection>& selected,
                       const AggregationConfig& config);

// Stored as a tensor archive: "features" float32 [C, D] and "present" uint8 [C].
void write_shape_feature(const ShapeFeature& feature, const std::filesystem::path& path,
                         const std::string& shape_id = {});
ShapeFeature read_shape_feature(const std::filesystem::path& path);

}  // namespace shapecap::aggregate
