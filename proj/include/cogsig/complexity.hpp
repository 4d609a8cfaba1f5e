// Copyright 2026 The cogsig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COGSIG_COMPLEXITY_HPP
#define COGSIG_COMPLEXITY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cogsig {

// A normalized word and the offset (in code points) of the first character
// of the whitespace-delimited token it came from.
struct Token {
  std::string word;
  std::size_t begin = 0;
};

// Splits on whitespace, strips ASCII punctuation and lowercases ASCII.
// Tokens that are empty after stripping are dropped.
std::vector<Token> tokenize(std::u32string_view text);
std::vector<Token> tokenize(std::string_view utf8_text);

inline constexpr int kNumComplexityBins = 8;

// Word-level n-gram model with add-alpha smoothing:
//   P(w | ctx) = (c(ctx, w) + alpha) / (c(ctx) + alpha * V)
// `context_length` preceding words form the context; the start of a text is
// padded with a begin-of-stream marker.
class NgramModel {
 public:
  static constexpr int kDefaultContextLength = 1;
  static constexpr double kDefaultAlpha = 0.1;

  static NgramModel train(std::string_view corpus,
                          int context_length = kDefaultContextLength,
                          double alpha = kDefaultAlpha);
  static NgramModel train(const std::vector<std::string>& words,
                          int context_length, double alpha);

  int context_length() const { return context_length_; }
  double alpha() const { return alpha_; }
  std::size_t vocab_size() const { return vocab_.size(); }
  const std::vector<std::string>& vocabulary() const { return words_; }

  // `context` holds the preceding words, oldest first; only the last
  // context_length() are used and missing ones count as stream start.
  double probability(std::string_view word,
                     std::span<const std::string> context) const;
  double surprisal(std::string_view word,
                   std::span<const std::string> context) const;

 private:
  using Key = std::uint64_t;
  struct ContextCounts {
    std::uint64_t total = 0;
    std::unordered_map<std::uint32_t, std::uint64_t> next;
  };

  std::uint32_t id_of(std::string_view word) const;
  Key context_key(std::span<const std::string> context) const;

  int context_length_ = kDefaultContextLength;
  double alpha_ = kDefaultAlpha;
  std::unordered_map<std::string, std::uint32_t> vocab_;
  std::vector<std::string> words_;
  std::unordered_map<Key, ContextCounts> counts_;
};

struct WordComplexity {
  std::size_t word_index = 0;
  double surprisal_bits = 0.0;
};

struct ComplexityProfile {
  std::vector<Token> tokens;
  std::vector<WordComplexity> per_word;
  // Within-document octile of each word's surprisal (0-7).
  std::vector<int> bins;
};

ComplexityProfile profile_document(const NgramModel& model,
                                   std::u32string_view text);
ComplexityProfile profile_document(const NgramModel& model,
                                   std::string_view utf8_text);

// Octile bin per value; tied values share the bin of their lowest rank.
std::vector<int> octile_bins(std::span<const double> values);

}  // namespace cogsig

#endif  // COGSIG_COMPLEXITY_HPP
