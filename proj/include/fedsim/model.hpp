#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fedsim {

enum class Activation { Tanh, Relu };

// Dense row-major matrix; the only tensor shape the feed-forward model needs.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  bool operator==(const Matrix&) const = default;
};

struct TensorShape {
  std::string name;
  std::vector<std::size_t> dims;

  std::size_t size() const;
  bool operator==(const TensorShape&) const = default;
};

// Flat model parameters plus the tensor layout they map onto. This is the
// object the averaging step manipulates; layout equality is the compatibility
// contract between client and global models.
struct ParameterVector {
  std::vector<double> values;
  std::vector<TensorShape> layout;

  std::size_t size() const { return values.size(); }
  bool same_layout(const ParameterVector& other) const { return layout == other.layout; }
  bool all_finite() const;
  bool operator==(const ParameterVector&) const = default;
};

// a - b / a + b elementwise; layouts must match.
ParameterVector subtract(const ParameterVector& a, const ParameterVector& b);
ParameterVector add(const ParameterVector& a, const ParameterVector& b);

struct ModelSpec {
  std::size_t input_dim = 0;
  std::vector<std::size_t> hidden_dims;
  std::size_t output_classes = 0;
  Activation activation = Activation::Tanh;

  void validate() const;
  // W0 (out x in), b0, W1, b1, ... in forward order.
  std::vector<TensorShape> layout() const;
  std::size_t parameter_count() const;
  bool operator==(const ModelSpec&) const = default;
};

struct LabeledDataset {
  Matrix features;           // one row per example
  std::vector<int> labels;   // class indices in [0, output_classes)

  std::size_t size() const { return labels.size(); }
  bool operator==(const LabeledDataset&) const = default;
};

struct TrainConfig {
  double learning_rate = 0.05;
  int batch_size = 8;
  int epochs = 1;
  std::uint64_t seed = 0;

  void validate() const;
  bool operator==(const TrainConfig&) const = default;
};

struct EvalMetrics {
  double loss = 0.0;
  double accuracy = 0.0;
};

// Uniform(-1,1)/sqrt(fan_in) weights, zero biases; deterministic in (spec, seed).
ParameterVector init_model(const ModelSpec& spec, std::uint64_t seed);

// Log-probabilities, one row per feature row; each row's exp sums to 1.
Matrix forward(const ParameterVector& params, const ModelSpec& spec, const Matrix& features);

// Mean cross-entropy over the dataset.
double loss(const ParameterVector& params, const ModelSpec& spec, const LabeledDataset& data);

// Exact gradient of loss(), same layout as params.
ParameterVector gradient(const ParameterVector& params, const ModelSpec& spec,
                         const LabeledDataset& data);

// Central-difference approximation of the same gradient; test oracle.
ParameterVector finite_diff_gradient(const ParameterVector& params, const ModelSpec& spec,
                                     const LabeledDataset& data, double h);

ParameterVector sgd_step(const ParameterVector& params, const ParameterVector& grad, double lr);

// Loss plus argmax accuracy (ties -> lowest class index).
EvalMetrics evaluate(const ParameterVector& params, const ModelSpec& spec,
                     const LabeledDataset& data);

// Key and permutation for one epoch's example order. Every data consumer
// (plain training, chunk plans, batch-level subsets) derives from this single
// permutation so the different training paths see identical example streams.
std::uint64_t epoch_order_key(std::uint64_t seed, std::size_t epoch);
std::vector<std::size_t> epoch_order(std::size_t n, std::uint64_t seed, std::size_t epoch);

// count split into batches of batch_size, last one ragged.
std::vector<int> batch_sizes_for(std::size_t count, int batch_size);

// One SGD pass over `indices`, sliced into the given batch sizes.
ParameterVector train_on_batches(const ParameterVector& params, const ModelSpec& spec,
                                 const LabeledDataset& data, std::span<const std::size_t> indices,
                                 std::span<const int> batch_sizes, double learning_rate);

// Minibatch SGD for config.epochs shuffled passes, or exactly `steps`
// minibatches if given (cycling epochs as needed).
ParameterVector train_local(const ParameterVector& params, const ModelSpec& spec,
                            const LabeledDataset& data, const TrainConfig& config,
                            std::optional<long> steps = std::nullopt);

}  // namespace fedsim
