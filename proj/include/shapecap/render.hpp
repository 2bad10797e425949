#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "shapecap/geometry.hpp"

namespace shapecap::render {

using Rgb = std::array<std::uint8_t, 3>;

inline constexpr Rgb kBackground{255, 255, 255};
inline constexpr Rgb kNeutral{128, 128, 128};
inline constexpr Rgb kHighlight{0, 0, 255};

inline constexpr int kDefaultImageSize = 128;
inline constexpr double kDefaultElevation = 30.0;
// Fraction of the image side covered by the diameter of the shape's bounding sphere.
inline constexpr double kFitFraction = 0.9;

// Orthographic camera orbiting the vertical (+y) axis. Azimuth 0 looks down
// -z from the +z side; positive elevation looks down onto the shape.
struct Camera {
  double azimuth = 0.0;
  double elevation = kDefaultElevation;
  int image_size = kDefaultImageSize;

  void validate() const;
};

// V cameras spaced 360/V degrees apart in azimuth, all at the same elevation.
std::vector<Camera> default_viewpoints(int views, int image_size = kDefaultImageSize,
                                       double elevation = kDefaultElevation);

enum class ViewMode { geometry, colored, highlight };

struct ViewImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // RGB, row-major, top row first
  ViewMode mode = ViewMode::geometry;
  int highlight_class = -1;

  Rgb at(int x, int y) const {
    const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    return {pixels[i], pixels[i + 1], pixels[i + 2]};
  }
  void put(int x, int y, const Rgb& c) {
    const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    pixels[i] = c[0];
    pixels[i + 1] = c[1];
    pixels[i + 2] = c[2];
  }
  bool is_background(int x, int y) const { return at(x, y) == kBackground; }
};

// One color per part class. Colors are pairwise distinct and never equal to
// the background, neutral or highlight colors.
struct ColorPalette {
  std::vector<Rgb> colors;

  void validate() const;
};

// Ray through a pixel center in grid space, where cell (i, j, k) spans
// [i, i+1] x [j, j+1] x [k, k+1].
struct Ray {
  std::array<double, 3> origin;
  std::array<double, 3> direction;
};

// Maps pixels to rays for one (grid, camera) pair. The shape is centered on
// the bounding box of its occupied cells, and that box's circumscribed sphere
// fills kFitFraction of the image.
class ViewFrame {
 public:
  ViewFrame(const geometry::LabeledVoxelGrid& grid, const Camera& cam);

  Ray pixel_ray(int px, int py) const;
  // Continuous image coordinates of a grid-space point.
  std::array<double, 2> project(const std::array<double, 3>& p) const;
  bool empty() const { return empty_; }

 private:
  int size_;
  bool empty_ = true;
  double scale_ = 1.0;  // pixels per cell
  double depth_ = 0.0;
  std::array<double, 3> center_{};
  std::array<double, 3> right_{};
  std::array<double, 3> up_{};
  std::array<double, 3> forward_{};
};

// Entry parameter of the ray into cell (x, y, z), or nullopt on a miss. Faces
// and edges count as hits.
std::optional<double> ray_cell_entry(const Ray& ray, int x, int y, int z);

// Linear cell index of the first occupied cell along each pixel's ray, -1 for
// background. Equal entry depths resolve to the smaller cell index.
std::vector<std::int64_t> visible_cells(const geometry::LabeledVoxelGrid& grid,
                                        const Camera& cam);

// Palette colors when a palette is given, neutral gray otherwise; white background.
ViewImage render_view(const geometry::LabeledVoxelGrid& grid, const Camera& cam,
                      const ColorPalette* palette = nullptr);

// Pixels whose first visible cell has class part_class are blue, other
// foreground pixels neutral gray.
ViewImage render_part_highlight(const geometry::LabeledVoxelGrid& grid, const Camera& cam,
                                int part_class);

// Binary PPM (P6).
void write_ppm(const ViewImage& image, const std::filesystem::path& path);
ViewImage read_ppm(const std::filesystem::path& path);

}  // namespace shapecap::render
