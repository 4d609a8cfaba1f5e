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

#include <cmath>
#include <random>

#include "cogsig/error.hpp"
#include "cogsig/synth.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace cogsig {
namespace {

std::vector<std::string> ctx(std::initializer_list<const char*> words) {
  return {words.begin(), words.end()};
}

TEST(TokenizeTest, StripsPunctuationAndLowercases) {
  const auto tokens = tokenize(std::string_view("  Hello, world!  (x) -- e.g.\nNext"));
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[0].word, "hello");
  EXPECT_EQ(tokens[0].begin, 2u);
  EXPECT_EQ(tokens[1].word, "world");
  EXPECT_EQ(tokens[2].word, "x");
  EXPECT_EQ(tokens[3].word, "eg");
  EXPECT_EQ(tokens[4].word, "next");
}

TEST(NgramModelTest, HandComputedBigram) {
  const NgramModel m = NgramModel::train("a b a b", 1, 1.0);
  EXPECT_EQ(m.vocab_size(), 2u);
  EXPECT_DOUBLE_EQ(m.probability("b", ctx({"a"})), 0.75);
  EXPECT_NEAR(m.surprisal("b", ctx({"a"})), -std::log2(0.75), 1e-12);
  EXPECT_NEAR(m.surprisal("b", ctx({"a"})), 0.415, 1e-3);
}

TEST(NgramModelTest, RepeatedWordLimit) {
  double previous = 0.0;
  for (double alpha : {1.0, 0.1, 0.001, 1e-6}) {
    const double p =
        NgramModel::train("v w w w w w w", 1, alpha).probability("w", ctx({"w"}));
    EXPECT_GT(p, previous);
    previous = p;
  }
  EXPECT_NEAR(previous, 1.0, 1e-5);
}

TEST(NgramModelTest, Errors) {
  EXPECT_THROW(NgramModel::train("", 1, 0.1), Error);
  try {
    NgramModel::train(" ... ,, ", 1, 0.1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCorpus);
  }
  for (int k : {0, 4}) {
    try {
      NgramModel::train("a b", k, 0.1);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidParameters);
    }
  }
  EXPECT_THROW(NgramModel::train("a b", 1, 0.0), Error);
}

TEST(NgramModelTest, UniformModelGivesLog2V) {
  // Every word follows every context equally often.
  std::string corpus;
  const std::vector<std::string> words = {"a", "b", "c", "d", "e", "f", "g", "h"};
  for (int rep = 0; rep < 10; ++rep) {
    for (const auto& x : words) {
      for (const auto& y : words) corpus += x + " " + y + " ";
    }
  }
  const NgramModel m = NgramModel::train(corpus, 1, 1e-9);
  for (const auto& w : words) {
    EXPECT_NEAR(m.surprisal(w, ctx({"c"})), 3.0, 0.05);
  }
  EXPECT_NEAR(m.surprisal("zzz", ctx({"qqq"})), 3.0, 1e-9);
}

TEST(NgramModelTest, MatchesBruteForceCountOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::string> stream;
    const std::size_t n = 5 + rng() % 60;
    for (std::size_t i = 0; i < n; ++i) stream.push_back(std::string(1, 'a' + rng() % 6));
    const int k = 1 + static_cast<int>(rng() % 3);
    const double alpha = 0.05 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    const NgramModel m = NgramModel::train(stream, k, alpha);
    for (int q = 0; q < 40; ++q) {
      std::vector<std::string> context;
      const std::size_t len = rng() % 4;
      for (std::size_t i = 0; i < len; ++i) {
        context.push_back(std::string(1, 'a' + rng() % 7));  // 'g' is unseen
      }
      const std::string word(1, 'a' + rng() % 7);
      // The model only looks at the last k words; so does the oracle.
      std::vector<std::string> tail = context;
      if (tail.size() > static_cast<std::size_t>(k)) tail.erase(tail.begin(), tail.end() - k);
      EXPECT_NEAR(m.probability(word, context),
                  oracle::ngram_probability(stream, k, alpha, tail, word), 1e-12);
    }
  }
}

TEST(NgramModelTest, ProbabilitiesSumToOne) {
  const NgramModel& m = reference_model();
  std::mt19937_64 rng(11);
  const auto& vocab = m.vocabulary();
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> context = {vocab[rng() % vocab.size()]};
    if (trial % 10 == 0) context = {"never-seen"};
    double sum = 0.0;
    for (const auto& w : vocab) sum += m.probability(w, context);
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(NgramModelTest, SurprisalFiniteAndNonNegative) {
  const NgramModel m = NgramModel::train("the cat sat on the mat", 2, 0.1);
  for (const char* w : {"the", "cat", "dog", ""}) {
    for (const auto& c : {ctx({}), ctx({"the"}), ctx({"on", "the"}), ctx({"x", "y", "z"})}) {
      const double s = m.surprisal(w, c);
      EXPECT_TRUE(std::isfinite(s));
      EXPECT_GE(s, 0.0);
    }
  }
}

TEST(NgramModelTest, MoreCountsLowerSurprisal) {
  std::string corpus = "x a x b x c x d ";
  double previous = NgramModel::train(corpus, 1, 0.1).surprisal("a", ctx({"x"}));
  for (int i = 0; i < 5; ++i) {
    corpus += "x a ";
    const double s = NgramModel::train(corpus, 1, 0.1).surprisal("a", ctx({"x"}));
    EXPECT_LT(s, previous);
    previous = s;
  }
}

TEST(ProfileDocumentTest, SingleWord) {
  const ComplexityProfile p = profile_document(reference_model(), std::string_view("Hello."));
  ASSERT_EQ(p.per_word.size(), 1u);
  EXPECT_EQ(p.bins, std::vector<int>{0});
}

TEST(ProfileDocumentTest, EmptyDocument) {
  try {
    profile_document(reference_model(), std::string_view(" ,. "));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyDocument);
  }
}

TEST(ProfileDocumentTest, FrequentWordRepeatedIsCheap) {
  const NgramModel m = NgramModel::train("the the the the a cat the the dog the", 1, 0.1);
  const ComplexityProfile p = profile_document(m, std::string_view("the the the the"));
  for (std::size_t i = 1; i < p.per_word.size(); ++i) {
    EXPECT_LT(p.per_word[i].surprisal_bits, 1.0);
  }
}

TEST(ProfileDocumentTest, DeterministicAndTrailingWhitespaceInvariant) {
  const std::string text = generate_text(5, 300);
  const ComplexityProfile a = profile_document(reference_model(), std::string_view(text));
  const ComplexityProfile b =
      profile_document(reference_model(), std::string_view(text + "  \n\t "));
  ASSERT_EQ(a.per_word.size(), b.per_word.size());
  for (std::size_t i = 0; i < a.per_word.size(); ++i) {
    EXPECT_EQ(a.per_word[i].surprisal_bits, b.per_word[i].surprisal_bits);
  }
  EXPECT_EQ(a.bins, b.bins);
}

TEST(OctileBinsTest, SixteenDistinctValues) {
  std::vector<double> v;
  for (int i = 0; i < 16; ++i) v.push_back(static_cast<double>((i * 7) % 16));
  const std::vector<int> bins = octile_bins(v);
  std::vector<int> per_bin(kNumComplexityBins, 0);
  for (int b : bins) ++per_bin[b];
  for (int c : per_bin) EXPECT_EQ(c, 2);
  for (std::size_t i = 0; i < v.size(); ++i) {
    EXPECT_EQ(bins[i], static_cast<int>(v[i]) / 2);
  }
}

}  // namespace
}  // namespace cogsig
