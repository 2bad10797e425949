#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "shapecap/annotate.hpp"
#include "shapecap/detector.hpp"
#include "shapecap/geometry.hpp"
#include "shapecap/metrics.hpp"
#include "shapecap/pipeline.hpp"
#include "shapecap/render.hpp"
#include "shapecap/text.hpp"

namespace py = pybind11;
using namespace shapecap;

namespace {

using Array3 = py::array_t<double, py::array::c_style | py::array::forcecast>;
using IntArray = py::array_t<int, py::array::c_style | py::array::forcecast>;

py::tuple box_tuple(const Box& b) { return py::make_tuple(b.x_min, b.y_min, b.x_max, b.y_max); }

Box to_box(const std::array<double, 4>& b) { return {b[0], b[1], b[2], b[3]}; }

py::array_t<std::uint8_t> image_array(const render::ViewImage& img) {
  py::array_t<std::uint8_t> out({img.height, img.width, 3});
  std::copy(img.pixels.begin(), img.pixels.end(), out.mutable_data());
  return out;
}

// Labels indexed [x, y, z], -1 for empty cells.
py::array_t<int> grid_labels(const geometry::LabeledVoxelGrid& g) {
  const int r = g.resolution();
  py::array_t<int> out({r, r, r});
  auto m = out.mutable_unchecked<3>();
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y)
      for (int z = 0; z < r; ++z) m(x, y, z) = g.label(x, y, z);
  return out;
}

geometry::LabeledVoxelGrid labels_grid(const IntArray& labels, int num_classes) {
  if (labels.ndim() != 3 || labels.shape(0) != labels.shape(1) || labels.shape(1) != labels.shape(2))
    throw std::invalid_argument("labels must be a cubic (R, R, R) array");
  const int r = static_cast<int>(labels.shape(0));
  geometry::LabeledVoxelGrid g(r, num_classes);
  const auto m = labels.unchecked<3>();
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y)
      for (int z = 0; z < r; ++z)
        if (m(x, y, z) >= 0) g.set(x, y, z, m(x, y, z));
  return g;
}

geometry::LabeledPointSet point_set(const Array3& points, const IntArray& labels, int num_classes) {
  if (points.ndim() != 2 || points.shape(1) != 3) throw std::invalid_argument("points must have shape (N, 3)");
  if (labels.ndim() != 1 || labels.shape(0) != points.shape(0))
    throw std::invalid_argument("labels must have shape (N,)");
  geometry::LabeledPointSet s;
  s.num_classes = num_classes;
  const auto p = points.unchecked<2>();
  for (py::ssize_t i = 0; i < points.shape(0); ++i) {
    s.points.push_back({p(i, 0), p(i, 1), p(i, 2)});
    s.labels.push_back(labels.at(i));
  }
  return s;
}

render::ColorPalette to_palette(const std::vector<std::array<int, 3>>& colors) {
  render::ColorPalette p;
  for (const auto& c : colors)
    p.colors.push_back({static_cast<std::uint8_t>(c[0]), static_cast<std::uint8_t>(c[1]),
                        static_cast<std::uint8_t>(c[2])});
  return p;
}

std::vector<metrics::Tokens> tokenize_all(const std::vector<std::string>& sentences) {
  std::vector<metrics::Tokens> out;
  for (const auto& s : sentences) out.push_back(text::tokenize(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the shapecap captioning pipeline";
  m.attr("__version__") = "0.1.0";

  // Geometry.
  py::class_<geometry::TriangleMesh>(m, "TriangleMesh")
      .def_property_readonly("num_classes", [](const geometry::TriangleMesh& t) { return t.num_classes; })
      .def_property_readonly("vertices",
                             [](const geometry::TriangleMesh& t) {
                               py::array_t<double> a({static_cast<py::ssize_t>(t.vertices.size()), py::ssize_t{3}});
                               auto v = a.mutable_unchecked<2>();
                               for (std::size_t i = 0; i < t.vertices.size(); ++i) {
                                 v(i, 0) = t.vertices[i].x;
                                 v(i, 1) = t.vertices[i].y;
                                 v(i, 2) = t.vertices[i].z;
                               }
                               return a;
                             })
      .def_property_readonly("faces", [](const geometry::TriangleMesh& t) { return t.faces; })
      .def_property_readonly("face_labels", [](const geometry::TriangleMesh& t) { return t.face_labels; });
  m.def("read_obj", &geometry::read_obj, py::arg("obj_path"), py::arg("label_path"), py::arg("num_classes") = 0);
  m.def(
      "sample_points",
      [](const geometry::TriangleMesh& mesh, int per_face, std::uint64_t seed) {
        const auto s = geometry::sample_triangle_points(mesh, per_face, seed);
        py::array_t<double> pts({static_cast<py::ssize_t>(s.points.size()), py::ssize_t{3}});
        auto p = pts.mutable_unchecked<2>();
        for (std::size_t i = 0; i < s.points.size(); ++i) {
          p(i, 0) = s.points[i].x;
          p(i, 1) = s.points[i].y;
          p(i, 2) = s.points[i].z;
        }
        return py::make_tuple(pts, py::array_t<int>(static_cast<py::ssize_t>(s.labels.size()), s.labels.data()));
      },
      py::arg("mesh"), py::arg("per_face") = geometry::kDefaultSamplesPerFace, py::arg("seed") = 0,
      "Uniform surface samples: (points (N, 3), labels (N,)).");

  py::class_<geometry::LabeledVoxelGrid>(m, "VoxelGrid")
      .def(py::init([](const IntArray& labels, int num_classes) { return labels_grid(labels, num_classes); }),
           py::arg("labels"), py::arg("num_classes"), "Grid from an (R, R, R) label array, -1 for empty cells.")
      .def_property_readonly("resolution", &geometry::LabeledVoxelGrid::resolution)
      .def_property_readonly("num_classes", &geometry::LabeledVoxelGrid::num_classes)
      .def("occupied_count", &geometry::LabeledVoxelGrid::occupied_count)
      .def("labels", &grid_labels, "Labels indexed [x, y, z], -1 for empty cells.")
      .def("__eq__", [](const geometry::LabeledVoxelGrid& a, const geometry::LabeledVoxelGrid& b) { return a == b; });
  m.def(
      "voxelize",
      [](const Array3& points, const IntArray& labels, int num_classes, int resolution) {
        return geometry::voxelize_with_labels(point_set(points, labels, num_classes), resolution);
      },
      py::arg("points"), py::arg("labels"), py::arg("num_classes"),
      py::arg("resolution") = geometry::kDefaultResolution);
  m.def("read_voxels", &geometry::read_voxels);
  m.def("write_voxels", &geometry::write_voxels);

  // Rendering.
  py::class_<render::Camera>(m, "Camera")
      .def(py::init([](double azimuth, double elevation, int image_size) {
             render::Camera c{azimuth, elevation, image_size};
             c.validate();
             return c;
           }),
           py::arg("azimuth") = 0.0, py::arg("elevation") = render::kDefaultElevation,
           py::arg("image_size") = render::kDefaultImageSize)
      .def_readonly("azimuth", &render::Camera::azimuth)
      .def_readonly("elevation", &render::Camera::elevation)
      .def_readonly("image_size", &render::Camera::image_size)
      .def("__repr__", [](const render::Camera& c) {
        return "Camera(azimuth=" + std::to_string(c.azimuth) + ", elevation=" + std::to_string(c.elevation) +
               ", image_size=" + std::to_string(c.image_size) + ")";
      });
  m.def("default_viewpoints", &render::default_viewpoints, py::arg("views"),
        py::arg("image_size") = render::kDefaultImageSize, py::arg("elevation") = render::kDefaultElevation);
  m.def(
      "render_view",
      [](const geometry::LabeledVoxelGrid& g, const render::Camera& cam,
         const std::optional<std::vector<std::array<int, 3>>>& palette) {
        if (!palette) return image_array(render::render_view(g, cam));
        const auto p = to_palette(*palette);
        return image_array(render::render_view(g, cam, &p));
      },
      py::arg("grid"), py::arg("camera"), py::arg("palette") = py::none(), "RGB image of shape (H, W, 3).");
  m.def(
      "render_part_highlight",
      [](const geometry::LabeledVoxelGrid& g, const render::Camera& cam, int part_class) {
        return image_array(render::render_part_highlight(g, cam, part_class));
      },
      py::arg("grid"), py::arg("camera"), py::arg("part_class"));
  m.def("read_ppm", [](const std::filesystem::path& p) { return image_array(render::read_ppm(p)); });

  // Boxes and annotation.
  m.def("iou", [](const std::array<double, 4>& a, const std::array<double, 4>& b) { return iou(to_box(a), to_box(b)); });
  m.def(
      "nms",
      [](const std::vector<std::array<double, 4>>& boxes, const std::vector<double>& scores, double threshold) {
        std::vector<Box> b;
        for (const auto& x : boxes) b.push_back(to_box(x));
        return nms(b, scores, threshold);
      },
      py::arg("boxes"), py::arg("scores"), py::arg("iou_threshold"));
  m.def(
      "extract_part_boxes",
      [](const geometry::LabeledVoxelGrid& g, const render::Camera& cam, int part_class, int min_pixels) {
        py::list out;
        for (const auto& b : annotate::extract_part_boxes(g, cam, part_class, min_pixels)) out.append(box_tuple(b.box));
        return out;
      },
      py::arg("grid"), py::arg("camera"), py::arg("part_class"), py::arg("min_pixels") = annotate::kDefaultMinPixels,
      "Boxes (x_min, y_min, x_max, y_max) around the class's connected highlight regions.");
  m.def(
      "map_detections",
      [](const std::vector<std::pair<std::array<double, 4>, std::vector<double>>>& dets, double threshold) {
        std::vector<annotate::PartBox> in;
        for (const auto& [b, p] : dets) in.push_back({to_box(b), p, annotate::BoxStage::detection});
        py::list out;
        for (const auto& k : annotate::map_detections(in, threshold)) out.append(py::make_tuple(box_tuple(k.box), k.probs));
        return out;
      },
      py::arg("detections"), py::arg("threshold") = annotate::kDefaultKeepThreshold,
      "Keeps (box, probs) pairs with max prob above threshold as one-hot copies.");

  // Detector loss.
  m.def("smooth_l1", &detector::smooth_l1);
  m.def(
      "detector_loss",
      [](const std::vector<double>& pred_probs, const std::vector<double>& pred_offsets,
         const std::vector<double>& gt_probs, const std::vector<double>& gt_offsets, double lambda) {
        return detector::detector_loss(pred_probs, pred_offsets, gt_probs, gt_offsets, lambda);
      },
      py::arg("pred_probs"), py::arg("pred_offsets"), py::arg("gt_probs"), py::arg("gt_offsets"),
      py::arg("lam") = 1.0);

  // Caption metrics on raw sentences.
  m.def("tokenize", [](const std::string& s) { return text::tokenize(s); });
  m.def(
      "bleu",
      [](const std::string& cand, const std::vector<std::string>& refs, int n) {
        return metrics::bleu_n(text::tokenize(cand), tokenize_all(refs), n);
      },
      py::arg("candidate"), py::arg("references"), py::arg("n") = 4);
  m.def("rouge_l", [](const std::string& cand, const std::vector<std::string>& refs) {
    return metrics::rouge_l(text::tokenize(cand), tokenize_all(refs));
  });
  m.def("meteor", [](const std::string& cand, const std::vector<std::string>& refs) {
    return metrics::meteor_simple(text::tokenize(cand), tokenize_all(refs));
  });
  m.def("cider", [](const std::vector<std::string>& cands, const std::vector<std::vector<std::string>>& refs) {
    std::vector<std::vector<metrics::Tokens>> r;
    for (const auto& set : refs) r.push_back(tokenize_all(set));
    return metrics::cider(tokenize_all(cands), r).mean;
  });

  // Pipeline.
  py::class_<pipeline::ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_static("load", &pipeline::ExperimentConfig::load)
      .def_static("parse", &pipeline::ExperimentConfig::parse)
      .def_static("keys", &pipeline::ExperimentConfig::keys)
      .def("get", &pipeline::ExperimentConfig::get)
      .def("set", &pipeline::ExperimentConfig::set)
      .def("echo", &pipeline::ExperimentConfig::echo)
      .def("validate", &pipeline::ExperimentConfig::validate)
      .def("__getitem__", &pipeline::ExperimentConfig::get)
      .def("__setitem__", &pipeline::ExperimentConfig::set);
  m.def("stages", [] {
    std::vector<std::string> out;
    for (auto s : pipeline::all_stages()) out.emplace_back(pipeline::to_string(s));
    return out;
  });
  m.def(
      "run_stage",
      [](const pipeline::ExperimentConfig& c, const std::string& stage) {
        py::gil_scoped_release release;
        const auto r = pipeline::run_stage(c, pipeline::stage_from_string(stage));
        return std::make_pair(r.skipped, r.message);
      },
      py::arg("config"), py::arg("stage"), "Runs one stage; returns (skipped, message).");
  m.def(
      "run_all",
      [](const pipeline::ExperimentConfig& c) {
        std::vector<pipeline::StageResult> results;
        {
          py::gil_scoped_release release;
          results = pipeline::run_all(c);
        }
        py::list out;
        for (const auto& r : results) out.append(py::make_tuple(pipeline::to_string(r.stage), r.skipped, r.message));
        return out;
      },
      py::arg("config"), "Runs every stage; returns [(stage, skipped, message)].");
}
