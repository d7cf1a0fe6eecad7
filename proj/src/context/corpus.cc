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

#include "lexisent/context/corpus.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "lexisent/core/split.h"
#include "lexisent/core/text.h"

namespace lexisent::context {
namespace {

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::size_t> FindAll(const std::string& haystack, const std::string& needle) {
  std::vector<std::size_t> hits;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    hits.push_back(pos);
  }
  return hits;
}

std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> words;
  for (auto& w : SplitWords(NormalizeText(text))) words.push_back(std::move(w.text));
  return words;
}

}  // namespace

TargetSentence ParseMarked(std::string_view text) {
  const std::string lower = AsciiLower(text);
  const auto opens = FindAll(lower, AsciiLower(kTargetOpen));
  const auto closes = FindAll(lower, AsciiLower(kTargetClose));
  if (opens.empty() || closes.empty()) {
    throw std::invalid_argument("sentence has no [TARGET] ... [/TARGET] span");
  }
  if (opens.size() > 1 || closes.size() > 1) {
    throw std::invalid_argument("sentence has more than one target marker pair");
  }
  const std::size_t open_end = opens[0] + kTargetOpen.size();
  if (closes[0] < open_end) {
    throw std::invalid_argument("[/TARGET] appears before [TARGET]");
  }
  const auto before = Words(text.substr(0, opens[0]));
  const auto target_words = Words(text.substr(open_end, closes[0] - open_end));
  const auto after = Words(text.substr(closes[0] + kTargetClose.size()));
  if (target_words.empty()) throw std::invalid_argument("target span is empty");

  TargetSentence sentence;
  sentence.text = std::string(text);
  sentence.target = Join(target_words, " ");
  sentence.tokens = before;
  sentence.target_index = before.size();
  sentence.tokens.push_back(sentence.target);
  sentence.tokens.insert(sentence.tokens.end(), after.begin(), after.end());
  return sentence;
}

std::string FormatMarked(const std::vector<std::string>& before, std::string_view target,
                         const std::vector<std::string>& after) {
  std::string out;
  for (const auto& w : before) out += w + " ";
  out += std::string(kTargetOpen) + " " + std::string(target) + " " +
         std::string(kTargetClose);
  for (const auto& w : after) out += " " + w;
  return out + ".";
}

std::vector<TargetSentence> GenerateDataset(const Lexicon& lexicon, Language language,
                                            std::size_t n, std::uint64_t seed,
                                            const GenerateOptions& options) {
  const auto targets = ContextDependentForms(lexicon, language);
  if (targets.empty()) {
    throw std::invalid_argument("lexicon has no context-dependent " +
                                std::string(LanguageName(language)) + " forms");
  }
  if (options.min_context < 0 || options.max_context < options.min_context) {
    throw std::invalid_argument("invalid context length range");
  }
  if (options.noise < 0.0 || options.noise > 1.0) {
    throw std::invalid_argument("noise must lie in [0, 1]");
  }
  const std::set<std::string> target_set(targets.begin(), targets.end());
  std::array<std::vector<std::string>, kNumPolarities> pools;
  std::set<std::string> seen;
  for (const auto& entry : lexicon.entries()) {
    const auto& form = entry.form(language);
    if (!form) continue;
    std::string key = FormKey(*form);
    if (key.empty() || target_set.contains(key) || !seen.insert(key).second) continue;
    pools[Index(PolarityOf(entry.EffectiveScore(language)))].push_back(std::move(key));
  }
  std::array<double, kNumPolarities> weights{};
  for (std::size_t c = 0; c < kNumPolarities; ++c) {
    if (options.label_weights[c] < 0.0) throw std::invalid_argument("negative label weight");
    weights[c] = pools[c].empty() ? 0.0 : options.label_weights[c];
  }
  if (weights[0] + weights[1] + weights[2] <= 0.0) {
    throw std::invalid_argument("no label has both a positive weight and context words");
  }

  std::vector<TargetSentence> corpus;
  corpus.reserve(n);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  std::discrete_distribution<int> label_dist(weights.begin(), weights.end());
  std::uniform_int_distribution<int> length_dist(options.min_context, options.max_context);
  std::uniform_int_distribution<std::size_t> target_dist(0, targets.size() - 1);
  std::bernoulli_distribution noisy(options.noise);

  auto draw_word = [&](int label) {
    int pool = label;
    if (noisy(rng)) {
      std::vector<int> others;
      for (int c = 0; c < static_cast<int>(kNumPolarities); ++c) {
        if (c != label && !pools[static_cast<std::size_t>(c)].empty()) others.push_back(c);
      }
      if (!others.empty()) {
        pool = others[std::uniform_int_distribution<std::size_t>(0, others.size() - 1)(rng)];
      }
    }
    const auto& words = pools[static_cast<std::size_t>(pool)];
    return words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
  };

  for (std::size_t i = 0; i < n; ++i) {
    const int label = label_dist(rng);
    const std::string& target = targets[target_dist(rng)];
    std::vector<std::string> before, after;
    for (int k = length_dist(rng); k > 0; --k) before.push_back(draw_word(label));
    for (int k = length_dist(rng); k > 0; --k) after.push_back(draw_word(label));
    TargetSentence sentence = ParseMarked(FormatMarked(before, target, after));
    sentence.label = kAllPolarities[static_cast<std::size_t>(label)];
    corpus.push_back(std::move(sentence));
  }
  return corpus;
}

CorpusSplit Split702010(const std::vector<TargetSentence>& data, std::uint64_t seed) {
  if (data.size() < 10) {
    throw std::invalid_argument("a 70:20:10 split needs at least 10 sentences");
  }
  std::vector<int> labels;
  std::array<bool, kNumPolarities> present{};
  for (const auto& s : data) {
    if (!s.label) throw std::invalid_argument("cannot split unlabeled sentences");
    labels.push_back(static_cast<int>(Index(*s.label)));
    present[Index(*s.label)] = true;
  }
  const double fractions[] = {0.7, 0.2, 0.1};
  const Partition partition = StratifiedPartition(labels, fractions, seed);
  CorpusSplit split;
  auto take = [&](const std::vector<std::size_t>& rows, std::vector<TargetSentence>& out) {
    for (std::size_t r : rows) out.push_back(data[r]);
  };
  take(partition.parts[0], split.train);
  take(partition.parts[1], split.validation);
  take(partition.parts[2], split.test);
  for (Polarity p : kAllPolarities) {
    if (!present[Index(p)]) split.absent_labels.push_back(p);
  }
  return split;
}

std::string WriteCorpus(const std::vector<TargetSentence>& data) {
  std::string out;
  for (const auto& s : data) {
    if (s.text.find_first_of("\t\n\r") != std::string::npos) {
      throw std::invalid_argument("sentence contains a tab or line break");
    }
    out += s.text + "\t" + (s.label ? std::string(PolarityName(*s.label)) : "") + "\n";
  }
  return out;
}

std::vector<TargetSentence> ReadCorpus(std::string_view tsv) {
  std::vector<TargetSentence> data;
  std::size_t line_no = 0;
  while (!tsv.empty()) {
    ++line_no;
    const auto eol = tsv.find('\n');
    std::string_view line = tsv.substr(0, eol);
    tsv = eol == std::string_view::npos ? std::string_view{} : tsv.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) continue;
    const auto tab = line.rfind('\t');
    if (tab == std::string_view::npos) {
      throw DataError(line_no, "label", "expected marked_sentence<TAB>label");
    }
    TargetSentence sentence;
    try {
      sentence = ParseMarked(line.substr(0, tab));
    } catch (const std::invalid_argument& e) {
      throw DataError(line_no, "marked_sentence", e.what());
    }
    const std::string label = Trim(line.substr(tab + 1));
    if (!label.empty()) {
      try {
        sentence.label = ParsePolarity(NormalizeText(label));
      } catch (const std::exception& e) {
        throw DataError(line_no, "label", e.what());
      }
    }
    data.push_back(std::move(sentence));
  }
  return data;
}

}  // namespace lexisent::context
