/*
 * Copyright 2026 The lexisent Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lexisent/context/model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "lexisent/core/math.h"
#include "lexisent/core/text.h"

namespace lexisent::context {

Vocabulary::Vocabulary() {
  for (const char* token : {"[PAD]", "[UNK]", "[TARGET]", "[/TARGET]"}) Add(token);
}

Vocabulary Vocabulary::Build(std::span<const TargetSentence> sentences) {
  Vocabulary vocabulary;
  for (const auto& s : sentences) {
    for (const auto& token : s.tokens) vocabulary.Add(token);
  }
  return vocabulary;
}

int Vocabulary::Add(const std::string& token) {
  const auto [it, inserted] = ids_.emplace(token, size());
  if (inserted) tokens_.push_back(token);
  return it->second;
}

int Vocabulary::Id(const std::string& token) const {
  const auto it = ids_.find(token);
  return it == ids_.end() ? kUnknown : it->second;
}

nlohmann::json Vocabulary::ToJson() const { return tokens_; }

Vocabulary Vocabulary::FromJson(const nlohmann::json& j) {
  const auto tokens = j.get<std::vector<std::string>>();
  Vocabulary vocabulary;
  if (tokens.size() < kNumSpecial ||
      !std::equal(vocabulary.tokens_.begin(), vocabulary.tokens_.end(), tokens.begin())) {
    throw std::invalid_argument("vocabulary does not start with the special tokens");
  }
  for (std::size_t i = kNumSpecial; i < tokens.size(); ++i) {
    if (vocabulary.Add(tokens[i]) != static_cast<int>(i)) {
      throw std::invalid_argument("duplicate vocabulary token: " + tokens[i]);
    }
  }
  return vocabulary;
}

std::string_view ActivationName(Activation activation) {
  return activation == Activation::kTanh ? "tanh" : "identity";
}

Activation ParseActivation(std::string_view name) {
  if (name == "tanh") return Activation::kTanh;
  if (name == "identity") return Activation::kIdentity;
  throw std::invalid_argument("unknown activation: " + std::string(name));
}

nlohmann::json ContextConfig::ToJson() const {
  return {{"embedding_dim", embedding_dim},
          {"window", window},
          {"activation", ActivationName(activation)},
          {"init_scale", init_scale}};
}

ContextConfig ContextConfig::FromJson(const nlohmann::json& j) {
  ContextConfig config;
  config.embedding_dim = j.at("embedding_dim").get<int>();
  config.window = j.at("window").get<int>();
  config.activation = ParseActivation(j.at("activation").get<std::string>());
  config.init_scale = j.at("init_scale").get<double>();
  return config;
}

ClassWeights InverseFrequencyWeights(std::span<const TargetSentence> sentences) {
  std::array<double, kNumPolarities> counts{};
  double total = 0;
  for (const auto& s : sentences) {
    if (!s.label) continue;
    counts[Index(*s.label)] += 1;
    total += 1;
  }
  ClassWeights weights{};
  for (std::size_t c = 0; c < kNumPolarities; ++c) {
    weights[c] = counts[c] > 0 ? total / (static_cast<double>(kNumPolarities) * counts[c]) : 0.0;
  }
  return weights;
}

namespace {

constexpr int kClasses = static_cast<int>(kNumPolarities);

Eigen::VectorXd Activate(Activation activation, const Eigen::VectorXd& h) {
  return activation == Activation::kTanh ? Eigen::VectorXd(h.array().tanh()) : h;
}

// Derivative of the activation at h.
Eigen::VectorXd ActivationSlope(Activation activation, const Eigen::VectorXd& h) {
  if (activation == Activation::kIdentity) return Eigen::VectorXd::Ones(h.size());
  return (1.0 - h.array().tanh().square()).matrix();
}

}  // namespace

ContextModel ContextModel::Initialize(Vocabulary vocabulary, const ContextConfig& config,
                                      std::uint64_t seed) {
  if (config.embedding_dim < 1) throw std::invalid_argument("embedding_dim must be >= 1");
  if (config.window < 0) throw std::invalid_argument("window must be >= 0");
  ContextModel model;
  model.vocabulary_ = std::move(vocabulary);
  model.config_ = config;
  model.seed_ = seed;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, config.init_scale);
  const int e = config.embedding_dim;
  model.embeddings_ = Eigen::MatrixXd::NullaryExpr(model.vocabulary_.size(), e,
                                                   [&] { return normal(rng); });
  model.weights_ = Eigen::MatrixXd::NullaryExpr(kClasses, 2 * e, [&] { return normal(rng); });
  model.bias_ = Eigen::VectorXd::Zero(kClasses);
  return model;
}

std::vector<std::size_t> ContextModel::WindowPositions(const TargetSentence& sentence) const {
  std::vector<std::size_t> positions;
  const std::size_t t = sentence.target_index;
  const std::size_t w = static_cast<std::size_t>(config_.window);
  const std::size_t lo = t > w ? t - w : 0;
  const std::size_t hi = std::min(sentence.tokens.size(), t + w + 1);
  for (std::size_t j = lo; j < hi; ++j) {
    if (j != t) positions.push_back(j);
  }
  return positions;
}

Example ContextModel::Encode(const TargetSentence& sentence) const {
  Example example;
  example.target = vocabulary_.Id(sentence.tokens.at(sentence.target_index));
  for (std::size_t j : WindowPositions(sentence)) {
    example.context.push_back(vocabulary_.Id(sentence.tokens[j]));
  }
  example.label = sentence.label ? static_cast<int>(Index(*sentence.label)) : -1;
  return example;
}

Eigen::MatrixXd ContextModel::Embed(const TargetSentence& sentence) const {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(sentence.tokens.size()), embeddings_.cols());
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    x.row(static_cast<Eigen::Index>(i)) = embeddings_.row(vocabulary_.Id(sentence.tokens[i]));
  }
  return x;
}

Eigen::VectorXd ContextModel::Features(const Example& example) const {
  const Eigen::Index e = embeddings_.cols();
  Eigen::VectorXd h = Eigen::VectorXd::Zero(2 * e);
  h.head(e) = embeddings_.row(example.target).transpose();
  if (!example.context.empty()) {
    for (int id : example.context) h.tail(e) += embeddings_.row(id).transpose();
    h.tail(e) /= static_cast<double>(example.context.size());
  }
  return h;
}

Eigen::VectorXd ContextModel::Logits(const Example& example) const {
  return weights_ * Activate(config_.activation, Features(example)) + bias_;
}

Eigen::VectorXd ContextModel::Logits(const TargetSentence& sentence) const {
  return Logits(Encode(sentence));
}

namespace {

// Window rows of an L-row embedding matrix around the target.
std::vector<Eigen::Index> WindowRows(Eigen::Index rows, std::size_t target_index, int window) {
  std::vector<Eigen::Index> out;
  const auto t = static_cast<Eigen::Index>(target_index);
  for (Eigen::Index j = std::max<Eigen::Index>(0, t - window);
       j < std::min(rows, t + window + 1); ++j) {
    if (j != t) out.push_back(j);
  }
  return out;
}

}  // namespace

Eigen::VectorXd ContextModel::LogitsFromEmbeddings(const Eigen::MatrixXd& x,
                                                   std::size_t target_index) const {
  Eigen::VectorXd logits(kClasses);
  for (int c = 0; c < kClasses; ++c) logits(c) = LogitGradient(x, target_index, c, nullptr);
  return logits;
}

double ContextModel::LogitGradient(const Eigen::MatrixXd& x, std::size_t target_index,
                                   int cls, Eigen::MatrixXd* gradient) const {
  const Eigen::Index e = embeddings_.cols();
  if (x.cols() != e || static_cast<Eigen::Index>(target_index) >= x.rows()) {
    throw std::invalid_argument("embedding matrix does not match the model");
  }
  if (cls < 0 || cls >= kClasses) throw std::invalid_argument("class out of range");
  const auto rows = WindowRows(x.rows(), target_index, config_.window);
  Eigen::VectorXd h = Eigen::VectorXd::Zero(2 * e);
  h.head(e) = x.row(static_cast<Eigen::Index>(target_index)).transpose();
  for (Eigen::Index j : rows) h.tail(e) += x.row(j).transpose();
  if (!rows.empty()) h.tail(e) /= static_cast<double>(rows.size());

  const double value =
      weights_.row(cls).dot(Activate(config_.activation, h)) + bias_(cls);
  if (gradient != nullptr) {
    const Eigen::VectorXd dh =
        weights_.row(cls).transpose().cwiseProduct(ActivationSlope(config_.activation, h));
    *gradient = Eigen::MatrixXd::Zero(x.rows(), e);
    gradient->row(static_cast<Eigen::Index>(target_index)) = dh.head(e).transpose();
    for (Eigen::Index j : rows) {
      gradient->row(j) = dh.tail(e).transpose() / static_cast<double>(rows.size());
    }
  }
  return value;
}

Eigen::VectorXd ContextModel::PredictProba(const TargetSentence& sentence) const {
  return Softmax(Logits(sentence));
}

int ContextModel::Predict(const TargetSentence& sentence) const {
  return ArgmaxLowest(Logits(sentence));
}

double ContextModel::Loss(std::span<const Example> examples, const ClassWeights& weights,
                          Gradients* gradient) const {
  if (examples.empty()) throw std::invalid_argument("loss over an empty batch");
  const Eigen::Index e = embeddings_.cols();
  const double scale = 1.0 / static_cast<double>(examples.size());
  if (gradient != nullptr) {
    gradient->embeddings = Eigen::MatrixXd::Zero(embeddings_.rows(), e);
    gradient->weights = Eigen::MatrixXd::Zero(weights_.rows(), weights_.cols());
    gradient->bias = Eigen::VectorXd::Zero(bias_.size());
  }
  double loss = 0.0;
  for (const Example& ex : examples) {
    if (ex.label < 0 || ex.label >= kClasses) {
      throw std::invalid_argument("loss needs labeled examples");
    }
    const double w = weights[static_cast<std::size_t>(ex.label)];
    const Eigen::VectorXd h = Features(ex);
    const Eigen::VectorXd a = Activate(config_.activation, h);
    const Eigen::VectorXd z = weights_ * a + bias_;
    loss += w * (LogSumExp(z) - z(ex.label));
    if (gradient == nullptr) continue;

    Eigen::VectorXd dz = Softmax(z);
    dz(ex.label) -= 1.0;
    dz *= w * scale;
    gradient->weights += dz * a.transpose();
    gradient->bias += dz;
    const Eigen::VectorXd dh =
        (weights_.transpose() * dz).cwiseProduct(ActivationSlope(config_.activation, h));
    gradient->embeddings.row(ex.target) += dh.head(e).transpose();
    if (!ex.context.empty()) {
      const Eigen::RowVectorXd share =
          dh.tail(e).transpose() / static_cast<double>(ex.context.size());
      for (int id : ex.context) gradient->embeddings.row(id) += share;
    }
  }
  // Dividing once keeps unit weights bit-identical to the plain mean.
  return loss / static_cast<double>(examples.size());
}

void ContextModel::Step(const Gradients& gradient, double learning_rate) {
  embeddings_ -= learning_rate * gradient.embeddings;
  weights_ -= learning_rate * gradient.weights;
  bias_ -= learning_rate * gradient.bias;
}

inline constexpr int kContextFormatVersion = 1;

nlohmann::json ContextModel::ToJson() const {
  return {{"format_version", kContextFormatVersion},
          {"kind", "contextual_target_classifier"},
          {"config", config_.ToJson()},
          {"seed", seed_},
          {"classes", PolarityClassNames()},
          {"vocabulary", vocabulary_.ToJson()},
          {"embeddings", MatrixToJson(embeddings_)},
          {"weights", MatrixToJson(weights_)},
          {"bias", VectorToJson(bias_)}};
}

ContextModel ContextModel::FromJson(const nlohmann::json& j) {
  if (j.at("format_version").get<int>() != kContextFormatVersion) {
    throw std::invalid_argument("unsupported contextual model format version");
  }
  ContextModel model;
  model.config_ = ContextConfig::FromJson(j.at("config"));
  model.seed_ = j.at("seed").get<std::uint64_t>();
  model.vocabulary_ = Vocabulary::FromJson(j.at("vocabulary"));
  model.embeddings_ = MatrixFromJson(j.at("embeddings"));
  model.weights_ = MatrixFromJson(j.at("weights"));
  model.bias_ = VectorFromJson(j.at("bias"));
  const int e = model.config_.embedding_dim;
  if (model.embeddings_.rows() != model.vocabulary_.size() || model.embeddings_.cols() != e ||
      model.weights_.rows() != kClasses || model.weights_.cols() != 2 * e ||
      model.bias_.size() != kClasses) {
    throw std::invalid_argument("contextual model parameters have inconsistent shapes");
  }
  return model;
}

nlohmann::json TrainConfig::ToJson() const {
  return {{"epochs", epochs},
          {"learning_rate", learning_rate},
          {"batch_size", batch_size},
          {"optimizer", "minibatch_gradient_descent"}};
}

namespace {

std::vector<Example> EncodeAll(const ContextModel& model,
                               std::span<const TargetSentence> sentences) {
  std::vector<Example> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences) {
    if (!s.label) throw std::invalid_argument("training sentences must be labeled");
    out.push_back(model.Encode(s));
  }
  return out;
}

}  // namespace

TrainResult Train(const ContextConfig& model_config, std::span<const TargetSentence> train,
                  std::span<const TargetSentence> validation, const ClassWeights& weights,
                  const TrainConfig& train_config, std::uint64_t seed) {
  if (train.empty()) throw std::invalid_argument("training set is empty");
  if (train_config.epochs < 1) throw std::invalid_argument("epochs must be >= 1");
  if (train_config.batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");

  TrainResult result{ContextModel::Initialize(Vocabulary::Build(train), model_config, seed),
                     {},
                     weights};
  ContextModel& model = result.model;
  const auto train_examples = EncodeAll(model, train);
  const auto val_examples = EncodeAll(model, validation);

  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    0x5eedu};
  std::mt19937_64 rng(seq);
  std::vector<std::size_t> order(train_examples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<Example> batch;
  Gradients gradient;
  const auto batch_size = static_cast<std::size_t>(train_config.batch_size);
  for (int epoch = 1; epoch <= train_config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t start = 0; start < order.size(); start += batch_size) {
      batch.clear();
      for (std::size_t i = start; i < std::min(order.size(), start + batch_size); ++i) {
        batch.push_back(train_examples[order[i]]);
      }
      model.Loss(batch, weights, &gradient);
      model.Step(gradient, train_config.learning_rate);
    }
    EpochRecord record;
    record.epoch = epoch;
    record.train_loss = model.Loss(train_examples, weights);
    if (val_examples.empty()) {
      record.validation_loss = std::numeric_limits<double>::quiet_NaN();
      record.validation_accuracy = std::numeric_limits<double>::quiet_NaN();
    } else {
      record.validation_loss = model.Loss(val_examples, weights);
      std::size_t hits = 0;
      for (const Example& ex : val_examples) hits += ArgmaxLowest(model.Logits(ex)) == ex.label;
      record.validation_accuracy =
          static_cast<double>(hits) / static_cast<double>(val_examples.size());
    }
    result.history.push_back(record);
  }
  return result;
}

std::string HistoryCsv(const std::vector<EpochRecord>& history) {
  std::string out = "epoch,train_loss,validation_loss,validation_accuracy\n";
  auto num = [](double v) { return std::isnan(v) ? std::string() : FormatShortest(v); };
  for (const auto& r : history) {
    out += std::to_string(r.epoch) + "," + num(r.train_loss) + "," + num(r.validation_loss) +
           "," + num(r.validation_accuracy) + "\n";
  }
  return out;
}

std::vector<std::string> PolarityClassNames() {
  std::vector<std::string> names;
  for (Polarity p : kAllPolarities) names.emplace_back(PolarityName(p));
  return names;
}

Evaluation Evaluate(const ContextModel& model, std::span<const TargetSentence> test) {
  if (test.empty()) throw std::invalid_argument("test set is empty");
  Evaluation eval;
  std::vector<int> truth;
  eval.probabilities.resize(static_cast<Eigen::Index>(test.size()), kClasses);
  for (std::size_t i = 0; i < test.size(); ++i) {
    if (!test[i].label) throw std::invalid_argument("test sentences must be labeled");
    truth.push_back(static_cast<int>(Index(*test[i].label)));
    const Eigen::VectorXd logits = model.Logits(test[i]);
    eval.predictions.push_back(ArgmaxLowest(logits));
    eval.probabilities.row(static_cast<Eigen::Index>(i)) = Softmax(logits).transpose();
  }
  const auto classes = PolarityClassNames();
  eval.confusion = metrics::Confusion(truth, eval.predictions, classes);
  eval.report = metrics::ComputeMetrics(eval.confusion);
  eval.roc = metrics::RocOneVsRest(truth, eval.probabilities, classes);
  return eval;
}

}  // namespace lexisent::context
