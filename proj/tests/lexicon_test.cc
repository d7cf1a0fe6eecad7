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

#include <Eigen/Core>
#include <random>

#include "fixtures.h"
#include "gtest/gtest.h"
#include "lexisent/lexicon/eda.h"
#include "lexisent/lexicon/lexicon.h"

namespace lexisent {
namespace {

constexpr std::string_view kRowPrefix = "\n";

std::string WithHeader(const std::string& rows) {
  return std::string(kLexiconHeader) + std::string(kRowPrefix) + rows;
}

TEST(ParseLexiconTest, IdsAndFallbackScores) {
  const Lexicon lex = fixtures::MiniLexicon();
  const LexiconEntry& come = lex.entry(7);
  EXPECT_EQ(*come.form(Language::kEnglish), "come");
  EXPECT_FALSE(come.language_scores[Index(Language::kEnglish)].has_value());
  EXPECT_EQ(come.EffectiveScore(Language::kEnglish), 3.3333333333333335);
  EXPECT_EQ(come.EffectiveScore(Language::kZulu), 4.0);
  EXPECT_EQ(come.MeanLanguageScore(), 10.0 / 3.0);
  EXPECT_EQ(lex.entry(1).MeanLanguageScore(), 0.0);
}

TEST(ParseLexiconTest, ErrorsNameRowAndField) {
  auto expect_error = [](const std::string& rows, std::size_t row, const std::string& field) {
    try {
      ParseLexicon(WithHeader(rows));
      ADD_FAILURE() << "no error for " << rows;
    } catch (const DataError& e) {
      EXPECT_EQ(e.row(), row) << e.what();
      EXPECT_EQ(e.field(), field) << e.what();
    }
  };
  expect_error("a,,b,,,,mot,1,,,,,,\nc,,d,,,,mot,abc,,,,,,\n", 2, "score");
  expect_error("a,,b,,,,mot,9.5,,,,,,\n", 1, "score");
  expect_error("a,,b,,,,noun,1,,,,,,\n", 1, "pos");
  expect_error(",,b,,,,mot,1,,,,,,\n", 1, "french");
  expect_error("a,,b,,,,mot,1,,,x,,,\n", 1, "score_en");
  EXPECT_THROW(ParseLexicon("french,english\nx,y\n"), DataError);
  EXPECT_THROW(ParseLexicon(WithHeader("a,b\n")), DataError);
  EXPECT_THROW(ParseLexicon(WithHeader("\xff,,,,,,mot,1,,,,,,\n")), DataError);
}

TEST(ParseLexiconTest, AcceptsByteOrderMark) {
  const Lexicon lex = ParseLexicon("\xEF\xBB\xBF" + WithHeader("a,,b,,,,mot,1,,,,,,\n"));
  EXPECT_EQ(lex.size(), 1u);
}

TEST(ParseLexiconTest, SerializeRoundTripIsByteEqual) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const std::string text = fixtures::SyntheticLexiconCsv(500, seed);
    const Lexicon lex = ParseLexicon(text);
    EXPECT_EQ(lex.size(), 500u);
    EXPECT_EQ(SerializeLexicon(lex), text);
    EXPECT_EQ(ParseLexicon(SerializeLexicon(lex)), lex);
  }
}

TEST(LookupTest, FormsIndexedByKey) {
  const Lexicon lex = fixtures::MiniLexicon();
  EXPECT_EQ(lex.Lookup(Language::kSepedi, "go tšhaba").size(), 1u);
  EXPECT_EQ(lex.Lookup(Language::kEnglish, "you like").size(), 2u);
  EXPECT_TRUE(lex.Lookup(Language::kEnglish, "missing").empty());
  EXPECT_EQ(lex.max_phrase_len(Language::kEnglish), 5u);  // to take care of oneself
}

TEST(ValidateTest, ReportsDuplicatesAndFormIssues) {
  const Lexicon lex = ParseLexicon(WithHeader(
      "Bon,,good,,,,adjectif,3,,,,,,\n"
      "bon,,good ,,,,adjectif,3,,,,,,\n"
      "bon,,fine,,,,adjectif,2,,,,,,\n"));
  const ValidationReport report = ValidateLexicon(lex);
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(report.DuplicateIds(), (std::vector<EntryId>{2}));
  int untrimmed = 0, unnormalized = 0;
  for (const auto& issue : report.issues) {
    untrimmed += issue.kind == ValidationIssue::Kind::kUntrimmed;
    unnormalized += issue.kind == ValidationIssue::Kind::kNotNormalized;
  }
  EXPECT_EQ(untrimmed, 1);
  EXPECT_EQ(unnormalized, 1);
  EXPECT_TRUE(ValidateLexicon(fixtures::MiniLexicon()).ok());
}

TEST(CleanTest, NormalizesDeduplicatesAndIsIdempotent) {
  const Lexicon lex = ParseLexicon(WithHeader(
      "Bon,,good,,,,adjectif,3,,,,,,\n"
      "bon,,good ,,,,adjectif,3,,,,,,\n"
      " MERCI,,thank you,,,,mot,5,,,,,,\n"));
  const CleanResult once = Clean(lex);
  EXPECT_EQ(once.lexicon.size(), 2u);
  ASSERT_EQ(once.report.removals.size(), 1u);
  EXPECT_EQ(once.report.removals[0].id, 2u);
  EXPECT_EQ(once.report.removals[0].kept, 1u);
  EXPECT_EQ(*once.lexicon.entry(3).form(Language::kFrench), "merci");
  const CleanResult twice = Clean(once.lexicon);
  EXPECT_EQ(twice.lexicon, once.lexicon);
  EXPECT_TRUE(twice.report.changes.empty());
  EXPECT_TRUE(twice.report.removals.empty());
  EXPECT_TRUE(ValidateLexicon(once.lexicon).ok());
}

TEST(CleanTest, IdempotentOnSyntheticLexicons) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CleanResult once = Clean(ParseLexicon(fixtures::SyntheticLexiconCsv(300, seed)));
    EXPECT_EQ(Clean(once.lexicon).lexicon, once.lexicon);
    EXPECT_EQ(SerializeLexicon(Clean(once.lexicon).lexicon), SerializeLexicon(once.lexicon));
  }
}

TEST(AddEntriesTest, FreshIdsAndConflicts) {
  const Lexicon lex = fixtures::MiniLexicon();
  LexiconEntry fresh;
  fresh.forms[Index(Language::kFrench)] = "nouveau";
  fresh.pos = PosTag::kAdjectif;
  fresh.shared_score = 1.0;
  LexiconEntry dup = lex.entry(2);
  const AddResult result = AddEntries(lex, {fresh, dup, fresh});
  EXPECT_EQ(result.added, (std::vector<EntryId>{lex.max_id() + 1}));
  ASSERT_EQ(result.conflicts.size(), 2u);
  EXPECT_EQ(result.conflicts[0].conflicts_with, 2u);
  EXPECT_EQ(result.lexicon.size(), lex.size() + 1);

  LexiconEntry bad = fresh;
  bad.shared_score = 12.0;
  EXPECT_THROW(AddEntries(lex, {bad}), DataError);
}

TEST(ContextDependentFormsTest, NeedsBothSigns) {
  const Lexicon sample = ParseLexicon(csv::ReadFile(LEXISENT_SAMPLE_LEXICON));
  EXPECT_EQ(ContextDependentForms(sample, Language::kEnglish),
            (std::vector<std::string>{"sick", "fine", "wicked", "killer", "crazy", "hot"}));
  EXPECT_TRUE(ContextDependentForms(fixtures::MiniLexicon(), Language::kEnglish).empty());
}

TEST(PearsonTest, MatchesTextbookFormulaOnFourPoints) {
  const std::vector<double> x = {1.0, 2.0, 3.0, 5.0};
  const std::vector<double> y = {2.0, 4.5, 5.0, 4.0};
  const Eigen::Map<const Eigen::VectorXd> xv(x.data(), 4), yv(y.data(), 4);
  const auto r = Pearson(xv, yv);
  ASSERT_TRUE(r.has_value());
  EXPECT_NEAR(*r, fixtures::BruteForcePearson(x, y), 1e-12);
  EXPECT_EQ(*Pearson(xv, xv), 1.0);
  EXPECT_EQ(*Pearson(xv, (-xv).eval()), -1.0);
  EXPECT_FALSE(Pearson(xv, Eigen::VectorXd::Constant(4, 2.0)).has_value());
  EXPECT_FALSE(Pearson(xv.head(1), yv.head(1)).has_value());
}

TEST(PearsonTest, SymmetricAndBoundedOnRandomData) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 100; ++t) {
    Eigen::VectorXd a(20), b(20);
    for (int i = 0; i < 20; ++i) a(i) = normal(rng), b(i) = normal(rng) + 0.3 * a(i);
    const double r = *Pearson(a, b);
    EXPECT_EQ(r, *Pearson(b, a));
    EXPECT_LE(std::abs(r), 1.0);
    EXPECT_NEAR(*Pearson((3.0 * a.array() + 1.0).matrix(), b), r, 1e-12);
  }
}

TEST(EdaTest, SelfCorrelationIsExactlyOne) {
  const EdaReport eda = ComputeEda(ParseLexicon(fixtures::SyntheticLexiconCsv(500, 9)));
  for (Language l : kAllLanguages) EXPECT_EQ(eda.Correlation(l, l), 1.0);
  for (Language a : kAllLanguages) {
    for (Language b : kAllLanguages) {
      EXPECT_EQ(std::isnan(eda.correlation(Index(a), Index(b))),
                std::isnan(eda.correlation(Index(b), Index(a))));
      if (eda.Correlation(a, b)) EXPECT_EQ(*eda.Correlation(a, b), *eda.Correlation(b, a));
    }
  }
}

TEST(EdaTest, CountsAndSummaries) {
  const Lexicon lex = fixtures::MiniLexicon();
  const EdaReport eda = ComputeEda(lex);
  EXPECT_EQ(static_cast<std::size_t>(eda.polarity_counts.sum()), lex.size());
  EXPECT_EQ(eda.pos_by_polarity.sum(), eda.polarity_counts.sum());
  for (Language l : kAllLanguages) {
    EXPECT_EQ(static_cast<std::size_t>(eda.language_histograms.row(Index(l)).sum()),
              lex.size());
  }
  EXPECT_EQ(HistogramBin(-9.0), 0);
  EXPECT_EQ(HistogramBin(9.0), 18);
  EXPECT_EQ(HistogramBin(0.49), 9);
  EXPECT_EQ(HistogramBin(0.5), 10);
  EXPECT_DOUBLE_EQ(Quantile(Eigen::Vector4d(1, 2, 3, 4), 0.25), 1.75);
  EXPECT_DOUBLE_EQ(Quantile(Eigen::Vector4d(1, 2, 3, 4), 0.5), 2.5);
  const auto& verbs = eda.pos_five_number[Index(PosTag::kVerbe)];
  ASSERT_TRUE(verbs.has_value());
  EXPECT_LE(verbs->min, verbs->q1);
  EXPECT_LE(verbs->q3, verbs->max);
  EXPECT_FALSE(eda.pos_five_number[Index(PosTag::kAdverb)].has_value());
  EXPECT_THROW(ComputeEda(ParseLexicon(std::string(kLexiconHeader) + "\n")), DataError);
}

}  // namespace
}  // namespace lexisent
