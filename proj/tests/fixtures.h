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

// Shared test data: a mini-lexicon carrying published word scores, a seeded
// synthetic lexicon generator, and small numeric oracles.
#ifndef LEXISENT_TESTS_FIXTURES_H_
#define LEXISENT_TESTS_FIXTURES_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lexisent/core/csv.h"
#include "lexisent/core/text.h"
#include "lexisent/core/types.h"
#include "lexisent/lexicon/lexicon.h"

namespace lexisent::fixtures {

// Columns: french,ciluba,english,afrikaans,sepedi,zulu,pos,score,
// score_fr,score_cil,score_en,score_af,score_nso,score_zu.
// "avg" scores are the mean of the per-language columns; an empty language
// score falls back to `score`.
inline std::string MiniLexiconCsv() {
  return std::string(kLexiconHeader) + "\n" +
         // English rows.
         "je,,i,ek,,mina,pronompersonnel,0,,,0,,,\n"
         "vouloir,,want,,,funa,verbe,3.5,3,,4,,,\n"
         "aliment,,food,,,ukudla,mot,3,3,,3,,,\n"
         "danser,,to dance,,,,verbe,2.4,,,2.4,,,\n"
         "avec,,with,,,,mot,0,,,0,,,\n"
         "vous,,you,,,wena,pronompersonnel,0,,,0,,,\n"
         "venir,,come,,,fika,verbe,3.3333333333333335,3,,,3,,4\n"
         "à,,to,,,,mot,0,,,0,,,\n"
         "oncle,,uncle,,,umalume,mot,4.333333333333333,4,,,4,,5\n"
         "je suis,,i am,,,,verbe,3,,,3,,,\n"
         "heureux,,happy,,thabile,jabulile,adjectif,4.5,4,,5,,,\n"
         "aujourd'hui,,today,,lehono,namhlanje,adverbe,1.6666666666666667,1,,2.5,,,1.5\n"
         "quoi,,what,,,,mot,0,,,0,,,\n"
         "faire,,do,,,,verbe,1.5,1,,2,,,\n"
         "regarder,,watch,,,,verbe,1.75,,,1.75,,,\n"
         "attente,,waiting,,,,mot,2.5,2,,3,,,\n"
         "accompagner,,to accompany,,,,verbe,4,,,4,,,\n"
         "avoir,,have,,,,verbe,3,,,3,,,\n"
         "mangé,,eaten,,,,verbe,3.5,1,,6,,,\n"
         "merci,tuasakadila,thank you,dankie,re a leboga,,mot,5,,,5,,,\n"
         "suivre,,follow,,,,verbe,2,,,2,,,\n"
         "moi,,me,,,,pronompersonnel,0,,,0,,,\n"
         "maison,,home,,,,mot,5,4,,6,,,\n"
         "pour,,for,,,,mot,1,,,1,,,\n"
         "amusement,,fun,,,,mot,1,,,1,,,\n"
         "un,,a,,,,article,0,,,0,,,\n"
         "bonne journée,,good day,,,,mot,4,,,4,,,\n"
         "faire confiance,,trust,vertrou,,,verbe,0,,,,0,,\n"
         "elle,,her,haar,,,pronompersonnel,2.6,,,,2.6,,\n"
         // Sepedi rows.
         "avoir peur,,to fear,,go tšhaba,ukwesaba,verbe,0,,,,,0,\n"
         "tomber,,to fall,,go wa,ukuwa,verbe,-1,,,,,-1,\n"
         "attendre,,to expect,,go letela,ukulindela,verbe,1,,,,,1,\n"
         "lune,,moon,,ngwedi,inyanga,mot,2.25,,,,,2.25,\n"
         "mon,,me,,ke,,pronompersonnel,0,,,,,0,\n"
         "personne,,person,,motho,umuntu,mot,1,,,,,1,\n"
         "et,,and,,le,futhi,conjunction,0,,,,,0,\n"
         "punition,,punishment,,kotlo,inhlawulo,mot,1.1666666666666667,0.5,,,,3,0\n"
         "aimer,,you like,,o rata,uthanda,verbe,9,,,,,9,\n"
         "mauvaises choses,,bad things,,tše mpe,,mot,-9,,,,,-9,\n"
         // Zulu rows.
         "gens,,people,,,abantu,mot,2.75,,,,,,2.75\n"
         "attentionnés,,those who are caring,,,abazinakekelayo,adjectif,9,,,,,,9\n"
         "important,,it's important,,,kubalulekile,adjectif,0,,,,,,0\n"
         "prendre soin,,to take care of oneself,,,ukuzinakekela,verbe,5,,,,,,5\n"
         "faire,,make,,,yenza,verbe,2.5,2,,,,,3\n"
         "ce que tu veux,,what you want,,,okufunayo,mot,0,,,,,,0\n"
         "traiter,,you treat,,,uphatha,verbe,5,,,,,,5\n"
         "mal,,badly,,,kabi,adverbe,-5,,,,,,-5\n"
         "aimer bien,,you like,,,uthanda,verbe,9,,,,,,9\n"
         "choses,,things,,,izinto,mot,3,,,,,,3\n"
         "mauvais,,bad,,,ezimbi,adjectif,0,,,,,,0\n";
}

inline Lexicon MiniLexicon() { return ParseLexicon(MiniLexiconCsv()); }

struct PublishedScore {
  const char* sentence;
  Language language;
  double avg_total;
  double v2_total;
  const char* avg_text;  // as printed with six decimals
  const char* v2_text;
  Polarity avg_polarity;
  Polarity v2_polarity;
};

// Totals printed for English, Sepedi and Zulu source sentences, in the
// print order of their result tables.
inline const std::vector<PublishedScore>& PublishedScores() {
  using enum Language;
  constexpr Polarity kPos = Polarity::kPositive, kNeg = Polarity::kNegative;
  static const std::vector<PublishedScore> rows = {
      {"I want food.", kEnglish, 6.5, 7.0, "6.500000", "7.000000", kPos, kPos},
      {"I want to dance with you.", kEnglish, 5.9, 6.4, "5.900000", "6.400000", kPos, kPos},
      {"Come to uncle Josh.", kEnglish, 23.0 / 3, 23.0 / 3, "7.666667", "7.666667", kPos, kPos},
      {"I am happy today.", kEnglish, 55.0 / 6, 10.5, "9.166667", "10.500000", kPos, kPos},
      {"What do you want to watch?", kEnglish, 6.75, 7.75, "6.750000", "7.750000", kPos, kPos},
      {"Waiting to dance to accompany you.", kEnglish, 8.9, 9.4, "8.900000", "9.400000", kPos,
       kPos},
      {"Have you eaten?", kEnglish, 6.5, 9.0, "6.500000", "9.000000", kPos, kPos},
      {"Thank you.", kEnglish, 5.0, 5.0, "5.000000", "5.000000", kPos, kPos},
      {"Follow me home for fun.", kEnglish, 9.0, 10.0, "9.000000", "10.000000", kPos, kPos},
      {"Have a good day", kEnglish, 7.0, 7.0, "7.000000", "7.000000", kPos, kPos},
      {"Go tšhaba go wa.", kSepedi, -1.0, -1.0, "-1.000000", "-1.000000", kNeg, kNeg},
      {"Go letela ngwedi.", kSepedi, 3.25, 3.25, "3.250000", "3.250000", kPos, kPos},
      {"Ke motho le go tšhaba kotlo.", kSepedi, 13.0 / 6, 4.0, "2.166667", "4.000000", kPos,
       kPos},
      {"O rata go letela tše mpe.", kSepedi, 1.0, 1.0, "1.000000", "1.000000", kPos, kPos},
      {"Ngiyabathanda abantu abazinakekelayo", kZulu, 11.75, 11.75, "11.750000", "11.750000",
       kPos, kPos},
      {"kubalulekile ukuzinakekela", kZulu, 5.0, 5.0, "5.000000", "5.000000", kPos, kPos},
      {"yenza okufunayo", kZulu, 2.5, 3.0, "2.500000", "3.000000", kPos, kPos},
      {"uphatha kabi abantu", kZulu, 2.75, 2.75, "2.750000", "2.750000", kPos, kPos},
      {"uthanda izinto ezimbi", kZulu, 12.0, 12.0, "12.000000", "12.000000", kPos, kPos},
  };
  return rows;
}

// A random lexicon with `n` rows: random ASCII/accented forms, all POS tags,
// scores on a 0.25 grid, and per-language scores present with probability 1/2.
// Per-class rows of the published random-forest POS report:
// class, precision, recall, f1, support.
struct PublishedClassRow {
  const char* name;
  double precision;
  double recall;
  double f1;
  long long support;
};
inline const std::vector<PublishedClassRow>& PublishedForestReport() {
  static const std::vector<PublishedClassRow> rows = {
      {"adjectif", 0.0, 0.0, 0.0, 1},        {"adverb", 0.0, 0.0, 0.0, 1},
      {"adverbe", 0.0, 0.0, 0.0, 5},         {"article", 0.0, 0.0, 0.0, 2},
      {"conjunction", 0.21, 0.71, 0.32, 7},  {"mot", 0.68, 0.96, 0.8, 402},
      {"nombre", 0.79, 0.94, 0.86, 16},      {"pronompersonnel", 0.0, 0.0, 0.0, 5},
      {"verbe", 0.52, 0.07, 0.12, 203},
  };
  return rows;
}

// Contextual-model confusion: 151 negatives and 154 positives all correct,
// 3 neutrals predicted negative. Order: negative, neutral, positive.
inline std::pair<std::vector<int>, std::vector<int>> ContextConfusionLabels() {
  std::vector<int> truth, pred;
  for (int i = 0; i < 151; ++i) truth.push_back(0), pred.push_back(0);
  for (int i = 0; i < 3; ++i) truth.push_back(1), pred.push_back(0);
  for (int i = 0; i < 154; ++i) truth.push_back(2), pred.push_back(2);
  return {truth, pred};
}

inline std::string SyntheticLexiconCsv(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<std::string> syllables = {"ka", "lo", "mé", "tsa", "ngu", "bi", "ré",
                                              "zo", "ša", "wu", "ê", "ph"};
  auto word = [&] {
    std::string w;
    const int len = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < len; ++i) {
      w += syllables[std::uniform_int_distribution<std::size_t>(0, syllables.size() - 1)(rng)];
    }
    return w;
  };
  auto score = [&] { return std::uniform_int_distribution<int>(-36, 36)(rng) / 4.0; };
  std::string out = std::string(kLexiconHeader) + "\n";
  for (std::size_t i = 0; i < n; ++i) {
    csv::Record rec;
    rec.push_back(word() + std::to_string(i));
    for (int l = 1; l < 6; ++l) {
      rec.push_back(std::bernoulli_distribution(0.7)(rng) ? word() : "");
    }
    rec.emplace_back(PosTagName(kAllPosTags[std::uniform_int_distribution<std::size_t>(
        0, kNumPosTags - 1)(rng)]));
    rec.push_back(FormatShortest(score()));
    for (int l = 0; l < 6; ++l) {
      rec.push_back(std::bernoulli_distribution(0.5)(rng) ? FormatShortest(score()) : "");
    }
    out += csv::FormatRecord(rec);
  }
  return out;
}

// Pearson correlation straight from the textbook sums.
inline double BruteForcePearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    syy += y[i] * y[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
}

// AUC as the fraction of (positive, negative) pairs ranked correctly, ties
// counting one half.
inline double PairwiseAuc(const std::vector<bool>& positive, const std::vector<double>& scores) {
  double concordant = 0, pairs = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!positive[i]) continue;
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (positive[j]) continue;
      pairs += 1;
      if (scores[i] > scores[j]) concordant += 1;
      if (scores[i] == scores[j]) concordant += 0.5;
    }
  }
  return concordant / pairs;
}

// Gaussian density.
inline double NormalPdf(double x, double mean, double var) {
  return std::exp(-(x - mean) * (x - mean) / (2 * var)) / std::sqrt(2 * M_PI * var);
}

}  // namespace lexisent::fixtures

#endif  // LEXISENT_TESTS_FIXTURES_H_
