#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace shapecap {

// Dense row-major array of doubles. Parameters live in double precision so
// finite-difference checks are meaningful; checkpoints store float32.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> values;

  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> dims, double fill = 0.0);

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  void fill(double v);
  bool all_finite() const;

  bool operator==(const Tensor&) const = default;
};

using NamedTensors = std::vector<std::pair<std::string, Tensor*>>;
using ConstNamedTensors = std::vector<std::pair<std::string, const Tensor*>>;

// Fills a tensor with N(0, stddev^2) draws.
void randomize(Tensor& t, std::mt19937_64& rng, double stddev);

// Archive file, shared by model checkpoints and shape features:
//   8-byte magic "SCTENSOR", uint32 version (1),
//   uint32 metadata count, then (key, value) length-prefixed string pairs,
//   uint32 tensor count, then per tensor: name, uint8 dtype (0 = float32,
//   1 = uint8), uint32 rank, uint32 dims[rank], payload.
// All integers and floats are little-endian.
struct ArchiveEntry {
  enum class DType : std::uint8_t { f32 = 0, u8 = 1 };
  std::string name;
  DType dtype = DType::f32;
  std::vector<std::size_t> shape;
  std::vector<float> f32;
  std::vector<std::uint8_t> u8;
};

struct TensorArchive {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<ArchiveEntry> entries;

  void put_meta(const std::string& key, const std::string& value);
  const std::string& meta(const std::string& key) const;
  bool has_meta(const std::string& key) const;

  void put(const std::string& name, const Tensor& t);
  void put_bytes(const std::string& name, std::vector<std::size_t> shape,
                 std::vector<std::uint8_t> bytes);
  const ArchiveEntry& entry(const std::string& name) const;
  // Copies a float32 entry into `out`, which must already have the same shape.
  void get(const std::string& name, Tensor& out) const;

  void save(const std::filesystem::path& path) const;
  static TensorArchive load(const std::filesystem::path& path);
};

enum class OptimizerKind { sgd, adam };

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::sgd;
  double learning_rate = 1e-5;
  double momentum = 0.0;  // sgd only
  double beta1 = 0.9;     // adam only
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double grad_clip = 0.0;  // global L2 norm clip; 0 disables
  // Learning rate falls linearly from learning_rate to learning_rate *
  // final_lr_fraction over a training run; 1 keeps it constant.
  double final_lr_fraction = 1.0;
};

// Learning rate for `step` of a `total`-step run.
double scheduled_learning_rate(const OptimizerConfig& config, int step, int total);

OptimizerKind optimizer_from_string(const std::string& name);
const char* to_string(OptimizerKind kind);

// First-order update over a fixed list of parameter tensors. Parameter and
// gradient lists must line up entry for entry.
class Optimizer {
 public:
  explicit Optimizer(OptimizerConfig config) : config_(config) {}

  void step(const NamedTensors& params, const ConstNamedTensors& grads);
  void set_learning_rate(double lr) { config_.learning_rate = lr; }

 private:
  OptimizerConfig config_;
  std::vector<Tensor> first_;
  std::vector<Tensor> second_;
  long steps_ = 0;
};

}  // namespace shapecap
