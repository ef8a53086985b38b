#include "fprover/mlp.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fpr {

namespace {

void check_shape(const MlpModel& m) {
  if (m.layer_dims.size() < 2 || m.layer_dims.back() != 1)
    throw std::invalid_argument("mlp: layer_dims must be [input, ..., 1]");
  if (m.weights.size() + 1 != m.layer_dims.size() ||
      m.biases.size() + 1 != m.layer_dims.size())
    throw std::invalid_argument("mlp: layer count mismatch");
  for (size_t l = 0; l < m.weights.size(); ++l) {
    size_t in = m.layer_dims[l], out = m.layer_dims[l + 1];
    if (in == 0 || out == 0)
      throw std::invalid_argument("mlp: zero-width layer");
    if (m.weights[l].size() != in * out || m.biases[l].size() != out)
      throw std::invalid_argument("mlp: layer shape mismatch");
  }
}

// Forward pass keeping every post-activation layer, for backprop.
void forward_activations(const MlpModel& m, std::span<const double> x,
                         std::vector<std::vector<double>>& acts) {
  acts.resize(m.num_layers() + 1);
  acts[0].assign(x.begin(), x.end());
  for (size_t l = 0; l < m.num_layers(); ++l) {
    size_t in = m.layer_dims[l], out = m.layer_dims[l + 1];
    const std::vector<double>& h = acts[l];
    std::vector<double>& z = acts[l + 1];
    z.assign(out, 0.0);
    const double* w = m.weights[l].data();
    for (size_t r = 0; r < out; ++r) {
      double acc = m.biases[l][r];
      const double* row = w + r * in;
      for (size_t c = 0; c < in; ++c) acc += row[c] * h[c];
      z[r] = acc;
    }
    if (l + 1 < m.num_layers())
      for (double& v : z) v = v > 0.0 ? v : 0.0;
  }
}

// max(z,0) - z*y + log1p(exp(-|z|)): the stable form of BCE on sigmoid(z).
double bce_with_logit(double z, double y) {
  return std::max(z, 0.0) - z * y + std::log1p(std::exp(-std::fabs(z)));
}

void check_batch(const MlpModel& m, std::span<const std::vector<double>> inputs,
                 std::span<const double> labels) {
  if (inputs.size() != labels.size())
    throw std::invalid_argument("mlp: batch size mismatch");
  if (inputs.empty()) throw std::invalid_argument("mlp: empty batch");
  for (const auto& x : inputs)
    if (x.size() != m.input_width())
      throw std::invalid_argument("mlp: bad input width in batch");
  for (double y : labels)
    if (y != 0.0 && y != 1.0)
      throw std::invalid_argument("mlp: labels must be 0 or 1");
}

}  // namespace

size_t MlpModel::parameter_count() const {
  size_t n = 0;
  for (size_t l = 0; l < weights.size(); ++l)
    n += weights[l].size() + biases[l].size();
  return n;
}

MlpModel make_mlp(const std::vector<uint32_t>& layer_dims, uint64_t seed) {
  MlpModel m;
  m.layer_dims = layer_dims;
  m.weights.resize(layer_dims.size() - 1);
  m.biases.resize(layer_dims.size() - 1);
  std::mt19937_64 rng(seed);
  for (size_t l = 0; l + 1 < layer_dims.size(); ++l) {
    size_t in = layer_dims[l], out = layer_dims[l + 1];
    double bound = 1.0 / std::sqrt(double(in));
    std::uniform_real_distribution<double> dist(-bound, bound);
    m.weights[l].resize(in * out);
    for (double& w : m.weights[l]) w = dist(rng);
    m.biases[l].assign(out, 0.0);
  }
  check_shape(m);
  return m;
}

MlpModel make_default_mlp(uint64_t seed) {
  return make_mlp({kScalarFeatureCount, 256, 64, 16, 4, 1}, seed);
}

double sigmoid(double logit) {
  if (logit >= 0.0) return 1.0 / (1.0 + std::exp(-logit));
  double e = std::exp(logit);
  return e / (1.0 + e);
}

double mlp_forward(const MlpModel& m, std::span<const double> x) {
  check_shape(m);
  if (x.size() != m.input_width())
    throw std::invalid_argument("mlp: bad input width");
  thread_local std::vector<std::vector<double>> acts;
  forward_activations(m, x, acts);
  return acts.back()[0];
}

double mlp_forward(const MlpModel& m, const ScalarFeatures& x) {
  return mlp_forward(m, std::span<const double>(x.data(), x.size()));
}

double mlp_batch_loss(const MlpModel& m,
                      std::span<const std::vector<double>> inputs,
                      std::span<const double> labels) {
  check_shape(m);
  check_batch(m, inputs, labels);
  double total = 0.0;
  for (size_t i = 0; i < inputs.size(); ++i)
    total += bce_with_logit(mlp_forward(m, inputs[i]), labels[i]);
  return total / double(inputs.size());
}

double mlp_train_step(MlpModel& m, std::span<const std::vector<double>> inputs,
                      std::span<const double> labels, double learning_rate) {
  check_shape(m);
  check_batch(m, inputs, labels);

  std::vector<std::vector<double>> grad_w(m.num_layers());
  std::vector<std::vector<double>> grad_b(m.num_layers());
  for (size_t l = 0; l < m.num_layers(); ++l) {
    grad_w[l].assign(m.weights[l].size(), 0.0);
    grad_b[l].assign(m.biases[l].size(), 0.0);
  }

  double total_loss = 0.0;
  std::vector<std::vector<double>> acts;
  std::vector<double> delta, next_delta;
  for (size_t i = 0; i < inputs.size(); ++i) {
    forward_activations(m, inputs[i], acts);
    double z = acts.back()[0];
    total_loss += bce_with_logit(z, labels[i]);

    // dLoss/dlogit = sigmoid(z) - y; walk the layers backwards.
    delta.assign(1, sigmoid(z) - labels[i]);
    for (size_t l = m.num_layers(); l-- > 0;) {
      size_t in = m.layer_dims[l], out = m.layer_dims[l + 1];
      const std::vector<double>& h = acts[l];
      for (size_t r = 0; r < out; ++r) {
        grad_b[l][r] += delta[r];
        double* grow = grad_w[l].data() + r * in;
        for (size_t c = 0; c < in; ++c) grow[c] += delta[r] * h[c];
      }
      if (l == 0) break;
      next_delta.assign(in, 0.0);
      const double* w = m.weights[l].data();
      for (size_t r = 0; r < out; ++r) {
        const double* row = w + r * in;
        for (size_t c = 0; c < in; ++c) next_delta[c] += delta[r] * row[c];
      }
      // Rectifier gate: the stored activation is already max(z, 0), so its
      // positivity decides the derivative.
      for (size_t c = 0; c < in; ++c)
        if (h[c] <= 0.0) next_delta[c] = 0.0;
      delta.swap(next_delta);
    }
  }

  double inv_batch = 1.0 / double(inputs.size());
  for (size_t l = 0; l < m.num_layers(); ++l) {
    for (size_t k = 0; k < m.weights[l].size(); ++k)
      m.weights[l][k] -= learning_rate * grad_w[l][k] * inv_batch;
    for (size_t k = 0; k < m.biases[l].size(); ++k)
      m.biases[l][k] -= learning_rate * grad_b[l][k] * inv_batch;
  }
  m.train_steps += 1;
  return total_loss * inv_batch;
}

std::string save_model(const MlpModel& m) {
  check_shape(m);
  nlohmann::json doc;
  doc["schema_version"] = kCheckpointSchemaVersion;
  doc["feature_schema_version"] = m.feature_schema_version;
  doc["layer_dims"] = m.layer_dims;
  nlohmann::json layers = nlohmann::json::array();
  for (size_t l = 0; l < m.num_layers(); ++l) {
    nlohmann::json layer;
    layer["weights"] = m.weights[l];
    layer["bias"] = m.biases[l];
    layers.push_back(std::move(layer));
  }
  doc["layers"] = std::move(layers);
  doc["trainer"] = {{"steps", m.train_steps}};
  return doc.dump();
}

MlpModel load_model(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("model checkpoint: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<int>() != kCheckpointSchemaVersion)
      throw std::runtime_error("model checkpoint: unsupported schema_version");
    MlpModel m;
    m.feature_schema_version = doc.at("feature_schema_version").get<int>();
    if (m.feature_schema_version != kFeatureSchemaVersion)
      throw std::runtime_error(
          "model checkpoint: feature schema version " +
          std::to_string(m.feature_schema_version) + " does not match " +
          std::to_string(kFeatureSchemaVersion));
    m.layer_dims = doc.at("layer_dims").get<std::vector<uint32_t>>();
    for (const auto& layer : doc.at("layers")) {
      m.weights.push_back(layer.at("weights").get<std::vector<double>>());
      m.biases.push_back(layer.at("bias").get<std::vector<double>>());
    }
    m.train_steps = doc.at("trainer").at("steps").get<uint64_t>();
    check_shape(m);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("model checkpoint: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("model checkpoint: ") + e.what());
  }
}

void save_model_file(const MlpModel& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  out << save_model(m) << '\n';
  if (!out) throw std::runtime_error("failed writing model file: " + path);
}

MlpModel load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

NeuralCost::NeuralCost(std::shared_ptr<const MlpModel> model)
    : model_(std::move(model)) {
  if (!model_) throw std::invalid_argument("neural cost: null model");
  check_shape(*model_);
  if (model_->input_width() != kScalarFeatureCount)
    throw std::invalid_argument("neural cost: model input width must be " +
                                std::to_string(kScalarFeatureCount));
  if (model_->feature_schema_version != kFeatureSchemaVersion)
    throw std::invalid_argument("neural cost: feature schema version mismatch");
}

double NeuralCost::score(const DerivedClause& target,
                         const ScoringContext& ctx) const {
  ScalarFeatures x =
      scalar_features(target.clause, double(target.generation_step),
                      double(target.parent_ids.size()), ctx);
  double p = sigmoid(mlp_forward(*model_, x));
  return kCostMixtureWeight * (1.0 - p) + double(clause_size(target.clause));
}

}  // namespace fpr
