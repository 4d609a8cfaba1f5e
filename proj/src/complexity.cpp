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

#include "cogsig/complexity.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "cogsig/error.hpp"
#include "cogsig/event_log.hpp"

namespace cogsig {
namespace {

constexpr std::uint32_t kStreamStart = (1u << 21) - 1;
constexpr std::uint32_t kUnknown = (1u << 21) - 2;
constexpr std::uint32_t kMaxVocab = kUnknown;

bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
         c == U'\v' || c == 0x00A0 || c == 0x2028 || c == 0x2029;
}

bool is_ascii_punct(char32_t c) {
  return c < 0x80 && std::ispunct(static_cast<int>(c));
}

}  // namespace

std::vector<Token> tokenize(std::u32string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i == text.size()) break;
    const std::size_t begin = i;
    std::u32string word;
    while (i < text.size() && !is_space(text[i])) {
      char32_t c = text[i++];
      if (is_ascii_punct(c)) continue;
      if (c >= U'A' && c <= U'Z') c = c - U'A' + U'a';
      word.push_back(c);
    }
    if (!word.empty()) tokens.push_back({to_utf8(word), begin});
  }
  return tokens;
}

std::vector<Token> tokenize(std::string_view utf8_text) {
  return tokenize(from_utf8(utf8_text));
}

NgramModel NgramModel::train(std::string_view corpus, int context_length,
                             double alpha) {
  std::vector<std::string> words;
  for (Token& token : tokenize(corpus)) words.push_back(std::move(token.word));
  return train(words, context_length, alpha);
}

NgramModel NgramModel::train(const std::vector<std::string>& words,
                             int context_length, double alpha) {
  if (context_length < 1 || context_length > 3) {
    throw Error(ErrorCode::kInvalidParameters, "context length must be 1-3");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kInvalidParameters, "alpha must be positive");
  }
  if (words.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus has no words");

  NgramModel model;
  model.context_length_ = context_length;
  model.alpha_ = alpha;
  std::vector<std::uint32_t> ids;
  ids.reserve(words.size());
  for (const std::string& w : words) {
    auto [it, inserted] =
        model.vocab_.try_emplace(w, static_cast<std::uint32_t>(model.words_.size()));
    if (inserted) {
      if (model.words_.size() >= kMaxVocab) {
        throw Error(ErrorCode::kInvalidParameters, "vocabulary too large");
      }
      model.words_.push_back(w);
    }
    ids.push_back(it->second);
  }

  std::vector<std::uint32_t> history(static_cast<std::size_t>(context_length),
                                     kStreamStart);
  for (std::uint32_t id : ids) {
    Key key = 0;
    for (std::uint32_t h : history) key = (key << 21) | h;
    ContextCounts& cc = model.counts_[key];
    ++cc.total;
    ++cc.next[id];
    history.erase(history.begin());
    history.push_back(id);
  }
  return model;
}

std::uint32_t NgramModel::id_of(std::string_view word) const {
  auto it = vocab_.find(std::string(word));
  return it == vocab_.end() ? kUnknown : it->second;
}

NgramModel::Key NgramModel::context_key(
    std::span<const std::string> context) const {
  Key key = 0;
  const auto k = static_cast<std::size_t>(context_length_);
  for (std::size_t slot = 0; slot < k; ++slot) {
    // Slot 0 is the oldest word of a full-length context.
    const std::size_t missing = k > context.size() ? k - context.size() : 0;
    std::uint32_t id = kStreamStart;
    if (slot >= missing) {
      id = id_of(context[context.size() - k + slot]);
    }
    key = (key << 21) | id;
  }
  return key;
}

double NgramModel::probability(std::string_view word,
                               std::span<const std::string> context) const {
  const double vocab = static_cast<double>(vocab_.size());
  double numer = alpha_;
  double denom = alpha_ * vocab;
  auto ctx = counts_.find(context_key(context));
  if (ctx != counts_.end()) {
    denom += static_cast<double>(ctx->second.total);
    const std::uint32_t id = id_of(word);
    if (id != kUnknown) {
      auto hit = ctx->second.next.find(id);
      if (hit != ctx->second.next.end()) numer += static_cast<double>(hit->second);
    }
  }
  return numer / denom;
}

double NgramModel::surprisal(std::string_view word,
                             std::span<const std::string> context) const {
  return -std::log2(probability(word, context));
}

std::vector<int> octile_bins(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> bins(n, 0);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || values[order[i]] != values[order[i - 1]]) rank = i;
    bins[order[i]] =
        static_cast<int>(kNumComplexityBins * rank / std::max<std::size_t>(n, 1));
  }
  return bins;
}

ComplexityProfile profile_document(const NgramModel& model,
                                   std::u32string_view text) {
  ComplexityProfile profile;
  profile.tokens = tokenize(text);
  if (profile.tokens.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "document has no words");
  }
  std::vector<std::string> history;
  std::vector<double> values;
  profile.per_word.reserve(profile.tokens.size());
  for (std::size_t i = 0; i < profile.tokens.size(); ++i) {
    const std::string& word = profile.tokens[i].word;
    const double bits = model.surprisal(word, history);
    profile.per_word.push_back({i, bits});
    values.push_back(bits);
    history.push_back(word);
    if (history.size() > static_cast<std::size_t>(model.context_length())) {
      history.erase(history.begin());
    }
  }
  profile.bins = octile_bins(values);
  return profile;
}

ComplexityProfile profile_document(const NgramModel& model,
                                   std::string_view utf8_text) {
  return profile_document(model, std::u32string_view(from_utf8(utf8_text)));
}

}  // namespace cogsig
