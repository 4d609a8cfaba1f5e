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

#include "cogsig/clc.hpp"

#include <cmath>
#include <random>

#include "cogsig/error.hpp"
#include "cogsig/synth.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace cogsig {
namespace {

LatencyComplexityPairs make_pairs(const std::vector<double>& pause,
                                  const std::vector<double>& complexity) {
  LatencyComplexityPairs out;
  for (std::size_t i = 0; i < pause.size(); ++i) {
    out.pairs.push_back({pause[i], complexity[i], i + 1});
  }
  return out;
}

// Types `text` one character per event. The interval before each word's
// first character is pause_for(word index); all other intervals are 120 ms.
template <typename PauseFn>
Session type_text(const std::string& text, PauseFn pause_for) {
  Session s;
  s.resolution_ms = 1;
  const std::u32string chars = from_utf8(text);
  Millis t = 0;
  int word = -1;
  bool after_space = true;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const bool space = chars[i] == U' ';
    const bool onset = after_space && !space;
    if (onset) ++word;
    if (i > 0) t += onset ? pause_for(word) : 120;
    KeystrokeEvent e;
    e.t = t;
    e.kind = EventKind::kInsert;
    e.payload = chars[i];
    e.pos = i;
    s.events.push_back(e);
    after_space = space;
  }
  return s;
}

TEST(SpearmanTest, Extremes) {
  const std::vector<double> x = {1, 2, 3, 4, 5, 6};
  const std::vector<double> up = {10, 20, 30, 40, 50, 60};
  const std::vector<double> down = {6, 5, 4, 3, 2, 1};
  EXPECT_DOUBLE_EQ(compute_clc(make_pairs(x, up)), 1.0);
  EXPECT_DOUBLE_EQ(compute_clc(make_pairs(x, down)), -1.0);
}

TEST(SpearmanTest, SwappedNeighbours) {
  // Rank differences are 1,1,1,1,0: 1 - 6*4/(5*24) = 0.8.
  const double rho = compute_clc(make_pairs({1, 2, 3, 4, 5}, {2, 1, 4, 3, 5}));
  EXPECT_NEAR(rho, 0.8, 1e-12);
  EXPECT_NEAR(rho, oracle::spearman({1, 2, 3, 4, 5}, {2, 1, 4, 3, 5}), 1e-12);
}

TEST(SpearmanTest, ConstantCoordinateGivesZero) {
  EXPECT_EQ(compute_clc(make_pairs({5, 5, 5, 5}, {1, 2, 3, 4})), 0.0);
}

TEST(SpearmanTest, Errors) {
  try {
    compute_clc(make_pairs({1}, {2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewPairs);
  }
  EXPECT_THROW(compute_clc(LatencyComplexityPairs{}), Error);
  const std::vector<double> a = {1, 2, 3};
  const std::vector<double> b = {1, 2};
  EXPECT_THROW(spearman(a, b), Error);
}

TEST(SpearmanTest, MatchesOracleOnSmallInputs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::size_t n = 2 + rng() % 11;
    std::vector<double> x(n), y(n);
    // Small value ranges force plenty of ties.
    const unsigned span = 1 + static_cast<unsigned>(rng() % 8);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<double>(rng() % span);
      y[i] = static_cast<double>(rng() % (span + 3));
    }
    const double rho = compute_clc(make_pairs(x, y));
    EXPECT_NEAR(rho, oracle::spearman(x, y), 1e-12);
    EXPECT_GE(rho, -1.0);
    EXPECT_LE(rho, 1.0);
  }
}

TEST(SpearmanTest, InvariantUnderMonotoneTransforms) {
  std::mt19937_64 rng(4);
  std::lognormal_distribution<double> pause(5.0, 0.6);
  std::normal_distribution<double> surprisal(9.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(300), y(300), fx(300), gy(300);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = std::round(pause(rng));
      y[i] = surprisal(rng);
      fx[i] = std::log(x[i] + 1.0) * 3.0 + 7.0;
      gy[i] = std::exp(y[i] / 4.0);
    }
    const double rho = compute_clc(make_pairs(x, y));
    EXPECT_NEAR(compute_clc(make_pairs(fx, gy)), rho, 1e-12);
  }
}

TEST(SpearmanTest, RankPreservingQuantizationLeavesRhoUnchanged) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x, y, qx;
    for (int i = 0; i < 200; ++i) {
      // Multiples of 5 plus jitter below 5: Q_5 keeps the order and only
      // removes the jitter, which is tied with nothing.
      const Millis base = 5 * static_cast<Millis>(rng() % 100000);
      x.push_back(static_cast<double>(base));
      qx.push_back(static_cast<double>(quantize(base + 2, 5)));
      y.push_back(static_cast<double>(rng() % 1000));
    }
    EXPECT_EQ(compute_clc(make_pairs(x, y)), compute_clc(make_pairs(qx, y)));
  }
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(classify(0.45, 1500), Verdict::kComposition);
  EXPECT_EQ(classify(0.07, 1500), Verdict::kTranscription);
  EXPECT_EQ(classify(0.45, 50), Verdict::kInconclusive);
  EXPECT_EQ(classify(0.22, 100), Verdict::kComposition);
  EXPECT_EQ(classify(0.2199, 100), Verdict::kTranscription);
  EXPECT_EQ(classify(0.9, 99), Verdict::kInconclusive);
  EXPECT_EQ(classify(0.3, 200, 0.4, 10), Verdict::kTranscription);
}

TEST(ClassifyTest, VerdictNamesRoundTrip) {
  for (Verdict v : {Verdict::kComposition, Verdict::kTranscription, Verdict::kInconclusive}) {
    EXPECT_EQ(parse_verdict(verdict_name(v)), v);
  }
  EXPECT_FALSE(parse_verdict("maybe").has_value());
}

TEST(ClassifyTest, DefaultThresholdNearEqualLikelihoodPoint) {
  const double root = equal_likelihood_threshold(kCompositionMean, kCompositionSd,
                                                 kTranscriptionMean, kTranscriptionSd);
  // Densities agree at the root.
  auto density = [](double x, double m, double s) {
    return std::exp(-0.5 * (x - m) * (x - m) / (s * s)) / s;
  };
  EXPECT_NEAR(density(root, kCompositionMean, kCompositionSd),
              density(root, kTranscriptionMean, kTranscriptionSd), 1e-9);
  EXPECT_GT(root, kTranscriptionMean);
  EXPECT_LT(root, kCompositionMean);
  EXPECT_NEAR(root, 0.2326, 5e-4);
  EXPECT_NEAR(root, kDefaultThreshold, 0.015);
}

TEST(PowerTest, FifteenHundredWordsExceedsPointNineNine) {
  const double p = power(1500, 0.35, 0.12, 0.05);
  EXPECT_GT(p, 0.99);
  const double mc = oracle::monte_carlo_power(1500, 0.35, 0.12, 0.05, 4000, 17);
  EXPECT_NEAR(p, mc, 0.01);
}

TEST(PowerTest, AtTheNullEqualsAlpha) {
  for (double rho : {-0.5, 0.0, 0.12, 0.6}) {
    for (std::size_t n : {4u, 50u, 1500u}) {
      EXPECT_NEAR(power(n, rho, rho, 0.05), 0.05, 1e-9);
      EXPECT_NEAR(power(n, rho, rho, 0.01), 0.01, 1e-9);
    }
  }
}

TEST(PowerTest, SmallSampleIsWeak) {
  const double p = power(10, 0.35, 0.12, 0.05);
  EXPECT_GT(p, 0.05);
  EXPECT_LT(p, 0.5);
  EXPECT_NEAR(p, oracle::monte_carlo_power(10, 0.35, 0.12, 0.05, 20000, 3), 0.03);
}

TEST(PowerTest, MonotoneInNAndEffect) {
  double previous = 0.0;
  for (std::size_t n = 4; n < 3000; n += 37) {
    const double p = power(n, 0.35, 0.12, 0.05);
    EXPECT_GE(p, previous);
    EXPECT_LE(p, 1.0);
    previous = p;
  }
  previous = 0.0;
  for (double rho1 = 0.12; rho1 < 0.95; rho1 += 0.01) {
    const double p = power(200, rho1, 0.12, 0.05);
    EXPECT_GE(p, previous);
    previous = p;
  }
}

TEST(PowerTest, InvalidParameters) {
  for (auto args : {std::tuple<std::size_t, double, double, double>{3, 0.35, 0.12, 0.05},
                    {100, 0.1, 0.3, 0.05},
                    {100, 1.0, 0.12, 0.05},
                    {100, 0.35, -1.0, 0.05},
                    {100, 0.35, 0.12, 0.0},
                    {100, 0.35, 0.12, 1.0}}) {
    try {
      power(std::get<0>(args), std::get<1>(args), std::get<2>(args), std::get<3>(args));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidParameters);
    }
  }
}

TEST(PairingTest, TwoWordsGiveOnePair) {
  const Session s = type_text("hello world", [](int) { return 400; });
  const ComplexityProfile profile =
      profile_document(reference_model(), std::string_view("hello world"));
  const LatencyComplexityPairs pairs = pair_latency_complexity(s, profile);
  ASSERT_EQ(pairs.n(), 1u);
  EXPECT_EQ(pairs.pairs[0].pause_ms, 400.0);
  EXPECT_EQ(pairs.pairs[0].onset_event, 6u);
  EXPECT_EQ(pairs.pairs[0].complexity, profile.per_word[1].surprisal_bits);
}

TEST(PairingTest, PausesProportionalToSurprisalGiveRhoOne) {
  const std::string text = generate_text(12, 400);
  std::string flat;
  for (char c : text) flat.push_back(c == '\n' ? ' ' : c);
  const ComplexityProfile profile = profile_document(reference_model(), std::string_view(flat));
  const Session s = type_text(flat, [&](int w) {
    return static_cast<Millis>(std::llround(100.0 * profile.per_word[w].surprisal_bits * 100.0));
  });
  const LatencyComplexityPairs pairs = pair_latency_complexity(s, profile);
  EXPECT_EQ(pairs.n(), profile.per_word.size() - 1);
  EXPECT_NEAR(compute_clc(pairs), 1.0, 1e-9);
}

TEST(PairingTest, PausesAreQuantizedAtSessionResolution) {
  Session s = type_text("aa bb cc", [](int w) { return 300 + 7 * w; });
  s.resolution_ms = 5;
  const ComplexityProfile profile =
      profile_document(reference_model(), std::string_view("aa bb cc"));
  const LatencyComplexityPairs pairs = pair_latency_complexity(s, profile);
  ASSERT_EQ(pairs.n(), 2u);
  EXPECT_EQ(pairs.pairs[0].pause_ms, 305.0);
  EXPECT_EQ(pairs.pairs[1].pause_ms, 310.0);
}

TEST(PairingTest, MismatchedProfileFailsAlignment) {
  const Session s = type_text("short text", [](int) { return 300; });
  const ComplexityProfile profile = profile_document(
      reference_model(), std::string_view("a much longer document than was typed here"));
  try {
    pair_latency_complexity(s, profile);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAlignmentFailure);
  }
}

TEST(PairingTest, PrivacyModeUsesBins) {
  const WriterProfile writer = draw_writer(77);
  const SynthConfig cfg = session_config(writer, SessionKind::kComposition, 1, 400);
  const SynthSession synth = synthesize(SessionKind::kComposition, cfg, reference_model());
  const ReconstructedText doc = reconstruct_text(synth.session);
  const ComplexityProfile profile = profile_document(reference_model(), doc.text);
  const Session priv = to_privacy_mode(synth.session, profile);
  EXPECT_TRUE(priv.privacy_mode);
  for (const auto& e : priv.events) EXPECT_FALSE(e.payload.has_value());

  const LatencyComplexityPairs full = pair_latency_complexity(synth.session, profile);
  const LatencyComplexityPairs bins = pair_latency_complexity(priv);
  ASSERT_EQ(full.n(), bins.n());
  for (std::size_t i = 0; i < full.n(); ++i) {
    EXPECT_EQ(full.pairs[i].pause_ms, bins.pairs[i].pause_ms);
    EXPECT_EQ(full.pairs[i].onset_event, bins.pairs[i].onset_event);
    EXPECT_EQ(bins.pairs[i].complexity, profile.bins[i + 1]);
  }
  // The privacy overload is also reached through the full-mode entry point.
  EXPECT_EQ(pair_latency_complexity(priv, profile).n(), bins.n());

  Session untagged = priv;
  for (auto& e : untagged.events) e.cbin.reset();
  EXPECT_THROW(pair_latency_complexity(untagged), Error);
}

TEST(ReportTest, FieldsAndInconclusiveBelowMinimum) {
  std::vector<double> x, y;
  for (int i = 0; i < 150; ++i) {
    x.push_back(i);
    y.push_back(i / 10);
  }
  const ClcReport full = make_clc_report(make_pairs(x, y));
  EXPECT_EQ(full.n, 150u);
  EXPECT_EQ(full.verdict, Verdict::kComposition);
  EXPECT_DOUBLE_EQ(full.threshold_used, kDefaultThreshold);
  EXPECT_DOUBLE_EQ(full.power_at_n, power(150, kPowerRhoComposition, kPowerRhoTranscription, 0.05));

  x.resize(60);
  y.resize(60);
  EXPECT_EQ(make_clc_report(make_pairs(x, y)).verdict, Verdict::kInconclusive);
  EXPECT_EQ(make_clc_report(make_pairs(x, y), 0.22, 50).verdict, Verdict::kComposition);
}

TEST(ClassifyTest, VerdictStableUnderFiveMillisecondQuantization) {
  int agree = 0;
  const int sessions = 100;
  for (int w = 0; w < sessions; ++w) {
    const WriterProfile writer = draw_writer(500 + static_cast<std::uint64_t>(w));
    const SessionKind kind = w % 2 == 0 ? SessionKind::kComposition : SessionKind::kTranscription;
    SynthConfig cfg = session_config(writer, kind, 1, 800);
    cfg.resolution_ms = 1;
    const SynthSession synth = synthesize(kind, cfg, reference_model());
    const ComplexityProfile profile =
        profile_document(reference_model(), reconstruct_text(synth.session).text);
    Session coarse = synth.session;
    coarse.resolution_ms = 5;
    const auto fine_pairs = pair_latency_complexity(synth.session, profile);
    const auto coarse_pairs = pair_latency_complexity(coarse, profile);
    agree += classify(compute_clc(fine_pairs), fine_pairs.n()) ==
             classify(compute_clc(coarse_pairs), coarse_pairs.n());
  }
  EXPECT_GE(static_cast<double>(agree) / sessions, 0.99);
}

}  // namespace
}  // namespace cogsig
