#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shapecap/geometry.hpp"
#include "shapecap/render.hpp"

namespace shapecap::synthetic {

enum class Category { chair, table };

Category category_from_string(const std::string& name);
const char* to_string(Category category);

// Part classes in label order: chair {back, arm, seat, leg}, table {top, leg, shelf}.
const std::vector<std::string>& part_names(Category category);
int num_classes(Category category);

struct NamedColor {
  std::string name;
  render::Rgb rgb;
  std::string material;  // word the caption pairs with this color
};

const std::vector<NamedColor>& color_table();

// A box-part shape with its per-class colors and template caption
// ("a <color> <material> <category> with <part descriptions>").
struct SyntheticShape {
  std::string shape_id;
  Category category = Category::chair;
  geometry::TriangleMesh mesh;
  std::vector<int> color_index;  // per class, into color_table()
  bool has_optional_part = false;  // chair arms / table shelf
  std::string caption;

  render::ColorPalette palette() const;
};

// `count` shapes with ids "<prefix>_0000", ... Deterministic in (count, seed, category).
std::vector<SyntheticShape> generate_synthetic_dataset(int count, std::uint64_t seed,
                                                       Category category,
                                                       const std::string& id_prefix = {});

// Default tessellation edge. Surface sampling draws a fixed number of points
// per triangle, so large triangles would leave holes in the voxelized surface.
inline constexpr double kMaxTriangleEdge = 0.05;

// The six faces of the box [lo, hi], each split into triangles with edges of
// at most max_edge, labelled part_class.
void append_box(geometry::TriangleMesh& mesh, const geometry::Vec3& lo, const geometry::Vec3& hi,
                int part_class, double max_edge = kMaxTriangleEdge);

}  // namespace shapecap::synthetic
