#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fprover/cost.hpp"
#include "fprover/features.hpp"

namespace fpr {

inline constexpr int kCheckpointSchemaVersion = 1;

// The paper's clause scorer: dense layers of widths 256, 64, 16, 4, 1 over
// the 38 scalar features, rectifiers between layers and none after the last,
// one output logit. Parameters are float64 throughout; checkpoints round-trip
// bit-exactly. Models are immutable while shared across proof attempts;
// training mutates a private copy and publishes it whole.
struct MlpModel {
  // [input, hidden..., 1]; the default is {38, 256, 64, 16, 4, 1}.
  std::vector<uint32_t> layer_dims;
  std::vector<std::vector<double>> weights;  // per layer, row-major [out][in]
  std::vector<std::vector<double>> biases;   // per layer, [out]
  uint64_t train_steps = 0;
  int feature_schema_version = kFeatureSchemaVersion;

  size_t num_layers() const { return weights.size(); }
  size_t input_width() const { return layer_dims.empty() ? 0 : layer_dims.front(); }
  size_t parameter_count() const;
};

// Weights drawn from U[-1/sqrt(fan_in), 1/sqrt(fan_in)], biases zero.
MlpModel make_mlp(const std::vector<uint32_t>& layer_dims, uint64_t seed);
MlpModel make_default_mlp(uint64_t seed);

double sigmoid(double logit);

// x.size() must equal input_width().
double mlp_forward(const MlpModel& m, std::span<const double> x);
double mlp_forward(const MlpModel& m, const ScalarFeatures& x);

// Mean binary cross-entropy of sigmoid(logit) against labels in {0, 1},
// computed in the overflow-free log1p form.
double mlp_batch_loss(const MlpModel& m,
                      std::span<const std::vector<double>> inputs,
                      std::span<const double> labels);

// One plain SGD step on the mean batch loss; returns that loss as measured
// before the update. Increments train_steps.
double mlp_train_step(MlpModel& m, std::span<const std::vector<double>> inputs,
                      std::span<const double> labels, double learning_rate);

// Checkpoint JSON: {schema_version, feature_schema_version, layer_dims,
// layers: [{weights, bias}...], trainer: {steps}}. Loading rejects malformed
// documents, shape mismatches, and a foreign feature schema version.
std::string save_model(const MlpModel& m);
MlpModel load_model(const std::string& json_text);
void save_model_file(const MlpModel& m, const std::string& path);
MlpModel load_model_file(const std::string& path);

// Appendix D.3 mixture: cost = 64 * (1 - sigmoid(logit)) + clause size. A
// constant-output network therefore orders clauses exactly by size.
class NeuralCost final : public CostModel {
 public:
  // The model must take kScalarFeatureCount inputs and carry the current
  // feature schema version; throws std::invalid_argument otherwise.
  explicit NeuralCost(std::shared_ptr<const MlpModel> model);

  double score(const DerivedClause& target, const ScoringContext& ctx) const override;

  const MlpModel& model() const { return *model_; }

 private:
  std::shared_ptr<const MlpModel> model_;
};

inline constexpr double kCostMixtureWeight = 64.0;

}  // namespace fpr
