#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace shapecap::geometry {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Triangle soup with one part-class label per face. num_classes is C; every
// label lies in [0, C).
struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::uint32_t, 3>> faces;
  std::vector<int> face_labels;
  int num_classes = 0;

  // Throws std::invalid_argument when an index or label is out of range or
  // the mesh has no faces.
  void validate() const;
};

struct LabeledPointSet {
  std::vector<Vec3> points;
  std::vector<int> labels;
  int num_classes = 0;
};

// Faces whose area vanished during sampling; each was replaced by its
// centroid repeated per_face times.
struct SamplingReport {
  std::vector<std::size_t> degenerate_faces;
};

inline constexpr int kDefaultSamplesPerFace = 100;

// Uniform barycentric samples, per_face of them on each face, labelled with
// the face's class. Deterministic for a given seed.
LabeledPointSet sample_triangle_points(const TriangleMesh& mesh, int per_face,
                                       std::uint64_t seed,
                                       SamplingReport* report = nullptr);

// Axis-aligned cube [origin, origin + side]^3 that the voxel grid spans.
struct GridBounds {
  Vec3 origin;
  double side = 1.0;

  double cell_size(int resolution) const { return side / resolution; }
};

// Bounding box of [lo, hi] grown by 2% of the longest axis on each side and
// made cubic around its center. A zero-extent box gets side 1.
GridBounds fit_bounds(const Vec3& lo, const Vec3& hi);
GridBounds mesh_bounds(const TriangleMesh& mesh);
GridBounds point_bounds(const LabeledPointSet& points);

// Index of the cell containing `value` along one axis. Cells are
// (edge_i, edge_{i+1}] with edge_i = origin + i * cell, so a point on a shared
// face goes to the lower cell; values outside the grid clamp to the border.
int cell_coordinate(double value, double origin, double cell, int resolution);

inline constexpr int kDefaultResolution = 32;
inline constexpr int kMaxResolution = 128;
inline constexpr std::uint8_t kEmptyCell = 0;

class LabeledVoxelGrid {
 public:
  LabeledVoxelGrid() = default;
  LabeledVoxelGrid(int resolution, int num_classes, GridBounds bounds = {});

  int resolution() const { return resolution_; }
  int num_classes() const { return num_classes_; }
  const GridBounds& bounds() const { return bounds_; }

  std::size_t index(int x, int y, int z) const {
    return (static_cast<std::size_t>(z) * resolution_ + y) * resolution_ + x;
  }
  bool occupied(int x, int y, int z) const { return cells_[index(x, y, z)] != kEmptyCell; }
  // Class of an occupied cell, -1 when empty.
  int label(int x, int y, int z) const { return cells_[index(x, y, z)] - 1; }
  void set(int x, int y, int z, int label);
  void clear(int x, int y, int z) { cells_[index(x, y, z)] = kEmptyCell; }

  std::size_t occupied_count() const;

  // Raw cell codes: 0 empty, k + 1 occupied with class k. x varies fastest.
  const std::vector<std::uint8_t>& cells() const { return cells_; }

  bool operator==(const LabeledVoxelGrid& other) const {
    return resolution_ == other.resolution_ && num_classes_ == other.num_classes_ &&
           cells_ == other.cells_;
  }

 private:
  int resolution_ = 0;
  int num_classes_ = 0;
  GridBounds bounds_;
  std::vector<std::uint8_t> cells_;
};

// Bins every point into its cell and labels each occupied cell by majority
// vote; ties go to the smallest class index.
LabeledVoxelGrid voxelize_with_labels(const LabeledPointSet& points, int resolution);
LabeledVoxelGrid voxelize_with_labels(const LabeledPointSet& points, int resolution,
                                      const GridBounds& bounds);

// Wavefront OBJ subset: `v x y z` and triangular `f` records (1-based or
// negative indices, `a/b/c` forms accepted). Labels come from a sidecar file
// with one integer per face.
TriangleMesh read_obj(const std::filesystem::path& obj_path,
                      const std::filesystem::path& label_path, int num_classes = 0);
void write_obj(const TriangleMesh& mesh, const std::filesystem::path& obj_path,
               const std::filesystem::path& label_path);

// Voxel file: 8-byte magic "SCVOXEL1", uint32 LE resolution, uint32 LE class
// count, then resolution^3 cell codes in x-fastest order. Bounds are not
// stored; a loaded grid spans the unit cube.
void write_voxels(const LabeledVoxelGrid& grid, const std::filesystem::path& path);
LabeledVoxelGrid read_voxels(const std::filesystem::path& path);

}  // namespace shapecap::geometry
