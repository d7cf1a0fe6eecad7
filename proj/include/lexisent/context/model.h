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

#ifndef LEXISENT_CONTEXT_MODEL_H_
#define LEXISENT_CONTEXT_MODEL_H_

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "lexisent/context/corpus.h"
#include "lexisent/metrics/metrics.h"

namespace lexisent::context {

class Vocabulary {
 public:
  static constexpr int kPad = 0;
  static constexpr int kUnknown = 1;
  static constexpr int kTargetOpen = 2;
  static constexpr int kTargetClose = 3;
  static constexpr int kNumSpecial = 4;

  Vocabulary();  // special tokens only
  // Every token of the sentences, in first-seen order.
  static Vocabulary Build(std::span<const TargetSentence> sentences);

  int Add(const std::string& token);
  // kUnknown for tokens never added.
  int Id(const std::string& token) const;
  const std::string& Token(int id) const { return tokens_.at(static_cast<std::size_t>(id)); }
  int size() const { return static_cast<int>(tokens_.size()); }

  nlohmann::json ToJson() const;
  static Vocabulary FromJson(const nlohmann::json& j);

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> ids_;
};

enum class Activation { kIdentity, kTanh };
std::string_view ActivationName(Activation activation);
Activation ParseActivation(std::string_view name);

struct ContextConfig {
  int embedding_dim = 32;
  int window = 5;
  // Applied to the concatenated features before the linear layer.
  Activation activation = Activation::kTanh;
  double init_scale = 0.1;  // std. dev. of the initial weights

  nlohmann::json ToJson() const;
  static ContextConfig FromJson(const nlohmann::json& j);
};

// A sentence reduced to vocabulary ids: the target and the context tokens
// within the window. label is -1 when unknown.
struct Example {
  int target = Vocabulary::kUnknown;
  std::vector<int> context;
  int label = -1;
};

struct Gradients {
  Eigen::MatrixXd embeddings;  // |V| x E
  Eigen::MatrixXd weights;     // 3 x 2E
  Eigen::VectorXd bias;        // 3
};

using ClassWeights = std::array<double, kNumPolarities>;
// w_c = N / (K n_c) with K = 3; classes absent from the labels get 0.
ClassWeights InverseFrequencyWeights(std::span<const TargetSentence> sentences);
inline constexpr ClassWeights kUniformWeights = {1.0, 1.0, 1.0};

// logits = W act([e_target ; mean of context embeddings within the window]) + b.
class ContextModel {
 public:
  static ContextModel Initialize(Vocabulary vocabulary, const ContextConfig& config,
                                 std::uint64_t seed);

  // Sentence positions (other than the target) that the model reads.
  std::vector<std::size_t> WindowPositions(const TargetSentence& sentence) const;
  Example Encode(const TargetSentence& sentence) const;
  // One embedding row per sentence token.
  Eigen::MatrixXd Embed(const TargetSentence& sentence) const;

  Eigen::VectorXd Logits(const Example& example) const;
  Eigen::VectorXd Logits(const TargetSentence& sentence) const;
  // Logits with the sentence's token embeddings replaced by `x` (rows aligned
  // with the tokens).
  Eigen::VectorXd LogitsFromEmbeddings(const Eigen::MatrixXd& x,
                                       std::size_t target_index) const;
  // Logit of `cls` at `x` and its gradient with respect to `x`.
  double LogitGradient(const Eigen::MatrixXd& x, std::size_t target_index, int cls,
                       Eigen::MatrixXd* gradient) const;

  Eigen::VectorXd PredictProba(const TargetSentence& sentence) const;
  int Predict(const TargetSentence& sentence) const;

  // Class-weighted cross-entropy averaged over the examples, and its exact
  // gradient when `gradient` is non-null.
  double Loss(std::span<const Example> examples, const ClassWeights& weights,
              Gradients* gradient = nullptr) const;
  void Step(const Gradients& gradient, double learning_rate);

  const Vocabulary& vocabulary() const { return vocabulary_; }
  const ContextConfig& config() const { return config_; }
  std::uint64_t seed() const { return seed_; }
  const Eigen::MatrixXd& embeddings() const { return embeddings_; }
  const Eigen::MatrixXd& weights() const { return weights_; }
  const Eigen::VectorXd& bias() const { return bias_; }
  Eigen::MatrixXd& mutable_embeddings() { return embeddings_; }
  Eigen::MatrixXd& mutable_weights() { return weights_; }
  Eigen::VectorXd& mutable_bias() { return bias_; }

  nlohmann::json ToJson() const;
  static ContextModel FromJson(const nlohmann::json& j);

 private:
  Eigen::VectorXd Features(const Example& example) const;  // pre-activation, 2E

  Vocabulary vocabulary_;
  ContextConfig config_;
  std::uint64_t seed_ = 0;
  Eigen::MatrixXd embeddings_;
  Eigen::MatrixXd weights_;
  Eigen::VectorXd bias_;
};

struct TrainConfig {
  int epochs = 30;
  double learning_rate = 0.5;
  int batch_size = 32;

  nlohmann::json ToJson() const;
};

struct EpochRecord {
  int epoch = 0;
  double train_loss = 0.0;
  double validation_loss = 0.0;  // NaN without a validation set
  double validation_accuracy = 0.0;
};

struct TrainResult {
  ContextModel model;
  std::vector<EpochRecord> history;
  ClassWeights class_weights{};
};

// Vocabulary from the training sentences, then mini-batch gradient descent
// over a per-epoch shuffle. Deterministic per seed.
TrainResult Train(const ContextConfig& model_config, std::span<const TargetSentence> train,
                  std::span<const TargetSentence> validation, const ClassWeights& weights,
                  const TrainConfig& train_config, std::uint64_t seed);

// Rows: epoch,train_loss,validation_loss,validation_accuracy.
std::string HistoryCsv(const std::vector<EpochRecord>& history);

struct Evaluation {
  metrics::ConfusionMatrix confusion;
  metrics::MetricsReport report;
  metrics::OneVsRestRoc roc;
  std::vector<int> predictions;
  Eigen::MatrixXd probabilities;  // rows = sentences
};
std::vector<std::string> PolarityClassNames();
Evaluation Evaluate(const ContextModel& model, std::span<const TargetSentence> test);

}  // namespace lexisent::context

#endif  // LEXISENT_CONTEXT_MODEL_H_
