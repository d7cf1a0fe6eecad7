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

#include "lexisent/xai/integrated_gradients.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lexisent/context/corpus.h"
#include "lexisent/context/model.h"
#include "lexisent/core/csv.h"

namespace lexisent::xai {
namespace {

using context::ContextModel;
using context::TargetSentence;

const Lexicon& SampleLexicon() {
  static const Lexicon lex = ParseLexicon(csv::ReadFile(LEXISENT_SAMPLE_LEXICON));
  return lex;
}

struct Trained {
  context::CorpusSplit split;
  ContextModel model;
};

const Trained& TrainedModel() {
  static const Trained t = [] {
    Trained out;
    out.split = context::Split702010(
        context::GenerateDataset(SampleLexicon(), Language::kEnglish, 400, 11), 11);
    context::TrainConfig tc;
    tc.epochs = 8;
    out.model = context::Train({}, out.split.train, out.split.validation,
                               context::InverseFrequencyWeights(out.split.train), tc, 11)
                    .model;
    return out;
  }();
  return t;
}

TEST(IntegratedGradientsTest, LinearScorerIsExact) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXd w(4, 3), x(4, 3);
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = n(rng), x(i) = n(rng);
    auto f = [&](const Eigen::MatrixXd& p, Eigen::MatrixXd* g) {
      *g = w;
      return w.cwiseProduct(p).sum();
    };
    for (int steps : {1, 2, 7, 50}) {
      const auto r = IntegratedGradients(f, x, Eigen::MatrixXd::Zero(4, 3), steps);
      EXPECT_TRUE(r.attributions.isApprox(w.cwiseProduct(x), 1e-13));
      EXPECT_NEAR(r.delta, 0.0, 1e-13);
    }
    const auto one = IntegratedGradients(f, x, Eigen::MatrixXd::Zero(4, 3), 1);
    EXPECT_EQ(one.attributions, w.cwiseProduct(x));
  }
}

TEST(IntegratedGradientsTest, FloatScalarAndErrors) {
  Eigen::MatrixXf x = Eigen::MatrixXf::Constant(2, 2, 2.0f);
  auto f = [](const Eigen::MatrixXf& p, Eigen::MatrixXf* g) {
    *g = 2.0f * p;
    return p.squaredNorm();
  };
  const auto r = IntegratedGradients(f, x, Eigen::MatrixXf::Zero(2, 2), 1000);
  EXPECT_NEAR(r.total, 16.0f, 0.05f);
  EXPECT_THROW(IntegratedGradients(f, x, Eigen::MatrixXf::Zero(2, 2), 0), std::invalid_argument);
  EXPECT_THROW(IntegratedGradients(f, x, Eigen::MatrixXf::Zero(3, 2), 5), std::invalid_argument);
}

TEST(IntegratedGradientsTest, ZeroInputZeroAttribution) {
  const auto& t = TrainedModel();
  const auto& s = t.split.test.front();
  const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(s.tokens.size()),
                                                     t.model.embeddings().cols());
  auto f = [&](const Eigen::MatrixXd& p, Eigen::MatrixXd* g) {
    return t.model.LogitGradient(p, s.target_index, 0, g);
  };
  const auto r = IntegratedGradients(f, zero, zero, 16);
  EXPECT_EQ(r.attributions.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(r.delta, 0.0);
}

TEST(ExplainTest, IdentityActivationModelIsExactInOneStep) {
  const auto& base = TrainedModel();
  auto cfg = base.model.config();
  cfg.activation = context::Activation::kIdentity;
  const auto linear = ContextModel::Initialize(base.model.vocabulary(), cfg, 5);
  for (std::size_t i = 0; i < 10; ++i) {
    for (auto kind : {BaselineKind::kZero, BaselineKind::kPad}) {
      const auto m = Explain(linear, base.split.test[i], std::nullopt, 1, kind);
      EXPECT_LT(std::abs(m.convergence_delta), 1e-12 * std::max(1.0, std::abs(m.f_input)));
    }
  }
}

TEST(ExplainTest, DeltaShrinksWithSteps) {
  const auto& t = TrainedModel();
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& s = t.split.test[i];
    double previous = INFINITY;
    for (int steps : {8, 32, 128, 512}) {
      const auto m = Explain(t.model, s, std::nullopt, steps);
      const double d = std::abs(m.convergence_delta);
      EXPECT_LT(d, previous) << s.text << " steps " << steps;
      previous = d;
      if (steps == 512) EXPECT_LT(d, 1e-3 * std::abs(m.f_input - m.f_baseline));
    }
  }
}

TEST(ExplainTest, FieldsAreConsistent) {
  const auto& t = TrainedModel();
  const auto& s = t.split.test.front();
  const auto m = Explain(t.model, s);
  ASSERT_EQ(m.per_token.size(), s.tokens.size());
  double sum = 0;
  for (const auto& p : m.per_token) sum += p.attribution;
  EXPECT_NEAR(m.total_attribution, sum, 1e-12);
  EXPECT_EQ(m.target_attribution, m.per_token[s.target_index].attribution);
  EXPECT_EQ(m.predicted_class, t.model.Predict(s));
  EXPECT_EQ(m.target_class, m.predicted_class);
  EXPECT_NEAR(m.confidence, t.model.PredictProba(s).maxCoeff(), 1e-12);
  EXPECT_EQ(m.steps, kDefaultSteps);
  EXPECT_NEAR(m.f_input, t.model.Logits(s)(m.target_class), 1e-12);
  EXPECT_NEAR(m.convergence_delta, m.total_attribution - (m.f_input - m.f_baseline), 1e-12);

  const auto forced = Explain(t.model, s, 1);
  EXPECT_EQ(forced.target_class, 1);

  const auto j = ToJson(m);
  for (const char* key : {"sentence", "predicted_class", "confidence", "convergence_delta",
                          "steps", "baseline", "per_token"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(ExplainTest, SymmetricTokensShareAttribution) {
  const auto& t = TrainedModel();
  const auto s = context::ParseMarked("good [TARGET] sick [/TARGET] good");
  const auto m = Explain(t.model, s);
  EXPECT_NEAR(m.per_token[0].attribution, m.per_token[2].attribution, 1e-14);
}

TEST(ExplainTest, ModelUntouchedByAttribution) {
  const auto& t = TrainedModel();
  const std::string before = t.model.ToJson().dump();
  for (const auto& s : t.split.test) Explain(t.model, s, std::nullopt, 64, BaselineKind::kPad);
  EXPECT_EQ(t.model.ToJson().dump(), before);
}

TEST(HeatmapTest, ColorScale) {
  EXPECT_EQ(ColorScale({{"a", 0.9}, {"b", 0.5}, {"c", 0.0}}), (std::vector<double>{1.0, 0.5 / 0.9, 0.0}));
  EXPECT_EQ(ColorScale({{"solo", -3.0}}), std::vector<double>{0.5});
  EXPECT_EQ(ColorScale({{"a", 2.0}, {"b", 2.0}}), (std::vector<double>{0.5, 0.5}));
}

TEST(HeatmapTest, Documents) {
  const auto& t = TrainedModel();
  const auto m = Explain(t.model, t.split.test.front());
  const std::string csv = HeatmapCsv(m);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "token,attribution,color");
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')),
            m.per_token.size() + 1);
  const std::string svg = HeatmapSvg(m);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  const std::string label = PredictedLabel(m);
  EXPECT_NE(label.find("(Confidence: "), std::string::npos);
  const std::string table = SummaryTable({m, m});
  EXPECT_NE(table.find("Convergence Delta"), std::string::npos);
  EXPECT_NE(table.find("Predicted Sentiment"), std::string::npos);
}

}  // namespace
}  // namespace lexisent::xai
