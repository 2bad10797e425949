#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "shapecap/box.hpp"
#include "shapecap/geometry.hpp"
#include "shapecap/render.hpp"

namespace shapecap::annotate {

enum class BoxStage { geometry_gt, transferred_gt, detection };

const char* to_string(BoxStage stage);
BoxStage stage_from_string(const std::string& name);

struct PartBox {
  Box box;
  std::vector<double> probs;  // length C
  BoxStage stage = BoxStage::detection;

  int argmax() const;
  double max_prob() const;
  // Throws std::invalid_argument when the box or probability vector breaks
  // the record's invariants (one-hot for the two ground-truth stages).
  void validate(int image_width, int image_height) const;
};

PartBox one_hot_box(const Box& box, int part_class, int num_classes, BoxStage stage);

struct ViewAnnotation {
  std::string shape_id;
  int view_index = 0;
  BoxStage stage = BoxStage::geometry_gt;
  std::vector<PartBox> boxes;
};

// How highlighted pixels of one class become boxes: one per 8-connected
// region, or a single box around all of them.
enum class BoxGrouping { component, merged };

inline constexpr int kDefaultMinPixels = 9;

// Tight boxes around the 8-connected regions of a highlight mask with at least
// min_pixels pixels, ordered by each region's first pixel in raster order.
std::vector<Box> mask_boxes(const std::vector<bool>& mask, int width, int height,
                            int min_pixels, BoxGrouping grouping = BoxGrouping::component);

std::vector<bool> highlight_mask(const render::ViewImage& image);

std::vector<PartBox> extract_part_boxes(const geometry::LabeledVoxelGrid& grid,
                                        const render::Camera& cam, int part_class,
                                        int min_pixels = kDefaultMinPixels,
                                        BoxGrouping grouping = BoxGrouping::component);

// One annotation per camera holding the boxes of every class, class 0 first.
std::vector<ViewAnnotation> build_geometry_gt(const geometry::LabeledVoxelGrid& grid,
                                              const std::vector<render::Camera>& cameras,
                                              int min_pixels = kDefaultMinPixels,
                                              const std::string& shape_id = {},
                                              BoxGrouping grouping = BoxGrouping::component);

struct CoverageReport {
  std::size_t views = 0;
  std::size_t empty_views = 0;
  std::size_t boxes = 0;
};

CoverageReport coverage(const std::vector<ViewAnnotation>& annotations);

inline constexpr double kDefaultKeepThreshold = 0.7;

// Keeps detections whose largest class probability exceeds keep_threshold and
// turns each into a transferred ground-truth box: same coordinates, one-hot
// at the argmax class.
std::vector<PartBox> map_detections(const std::vector<PartBox>& detections,
                                    double keep_threshold = kDefaultKeepThreshold);

// One JSON object per box, fields in the order shape_id, view_index, stage,
// class_probs, box. Views without boxes produce no lines.
void write_annotations(const std::vector<ViewAnnotation>& annotations,
                       const std::filesystem::path& path);
// Rebuilds annotations grouped by (shape_id, view_index) in file order.
std::vector<ViewAnnotation> read_annotations(const std::filesystem::path& path);

}  // namespace shapecap::annotate
