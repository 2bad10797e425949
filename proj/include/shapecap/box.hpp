#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace shapecap {

// Axis-aligned rectangle in continuous pixel coordinates; pixel (x, y) covers
// [x, x+1) x [y, y+1), so a blob spanning pixels 3..5 has x_min 3, x_max 6.
struct Box {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() > 0 && height() > 0 ? width() * height() : 0.0; }
  bool valid() const { return x_min < x_max && y_min < y_max; }

  bool operator==(const Box&) const = default;
};

double iou(const Box& a, const Box& b);

Box clip(const Box& b, int width, int height);

// (dx, dy, dw, dh): center shift in anchor widths/heights and log size ratio.
using BoxOffsets = std::array<double, 4>;

// `weights` scale the four targets (larger weights give the regressor a
// stronger gradient); decode divides them out again.
inline constexpr BoxOffsets kUnitOffsetWeights{1.0, 1.0, 1.0, 1.0};
BoxOffsets encode_offsets(const Box& anchor, const Box& target,
                          const BoxOffsets& weights = kUnitOffsetWeights);
Box decode_offsets(const Box& anchor, const BoxOffsets& offsets,
                   const BoxOffsets& weights = kUnitOffsetWeights);

// Greedy non-maximum suppression. Returns kept indices in descending score
// order; equal scores keep the earlier index first.
std::vector<std::size_t> nms(const std::vector<Box>& boxes, const std::vector<double>& scores,
                             double iou_threshold);

}  // namespace shapecap
