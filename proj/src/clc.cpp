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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/normal.hpp>

#include "cogsig/error.hpp"

namespace cogsig {
namespace {

std::vector<double> average_ranks(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && v[order[j]] == v[order[i]]) ++j;
    // Ranks i+1 .. j share their mean.
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0.0 || syy <= 0.0) return 0.0;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double log_normal_density(double x, double mean, double sd) {
  const double z = (x - mean) / sd;
  return -0.5 * z * z - std::log(sd);
}

}  // namespace

std::vector<std::size_t> word_onset_events(const ReconstructedText& doc,
                                           const ComplexityProfile& profile) {
  std::vector<std::size_t> onsets;
  onsets.reserve(profile.tokens.size());
  for (const Token& token : profile.tokens) {
    if (token.begin >= doc.origin_event.size()) {
      throw Error(ErrorCode::kAlignmentFailure,
                  "word at offset " + std::to_string(token.begin) +
                      " lies outside the reconstructed text");
    }
    onsets.push_back(doc.origin_event[token.begin]);
  }
  return onsets;
}

LatencyComplexityPairs pair_latency_complexity(const Session& session,
                                               const ComplexityProfile& profile) {
  if (session.privacy_mode) return pair_latency_complexity(session);
  const ReconstructedText doc = reconstruct_text(session);
  const std::vector<std::size_t> onsets = word_onset_events(doc, profile);
  if (profile.per_word.size() != onsets.size()) {
    throw Error(ErrorCode::kAlignmentFailure, "profile does not match text");
  }
  const auto& events = session.events;
  LatencyComplexityPairs out;
  out.pairs.reserve(onsets.size());
  for (std::size_t i = 1; i < onsets.size(); ++i) {
    const std::size_t e = onsets[i];
    if (e == 0) continue;
    const Millis pause = quantize(events[e].t - events[e - 1].t, session.resolution_ms);
    out.pairs.push_back(
        {static_cast<double>(pause), profile.per_word[i].surprisal_bits, e});
  }
  return out;
}

LatencyComplexityPairs pair_latency_complexity(const Session& session) {
  const auto& events = session.events;
  LatencyComplexityPairs out;
  bool first = true;
  bool any = false;
  for (std::size_t e = 0; e < events.size(); ++e) {
    if (!events[e].cbin) continue;
    any = true;
    if (first || e == 0) {
      first = false;
      continue;
    }
    const Millis pause = quantize(events[e].t - events[e - 1].t, session.resolution_ms);
    out.pairs.push_back(
        {static_cast<double>(pause), static_cast<double>(*events[e].cbin), e});
  }
  if (!any) {
    throw Error(ErrorCode::kAlignmentFailure,
                "privacy-mode session carries no complexity bins");
  }
  return out;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kInvalidParameters, "spearman: length mismatch");
  }
  if (x.size() < 2) throw Error(ErrorCode::kTooFewPairs, "need at least 2 pairs");
  return pearson(average_ranks(x), average_ranks(y));
}

double compute_clc(const LatencyComplexityPairs& pairs) {
  std::vector<double> pauses, complexity;
  pauses.reserve(pairs.n());
  complexity.reserve(pairs.n());
  for (const auto& p : pairs.pairs) {
    pauses.push_back(p.pause_ms);
    complexity.push_back(p.complexity);
  }
  return spearman(pauses, complexity);
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kComposition: return "composition";
    case Verdict::kTranscription: return "transcription";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::optional<Verdict> parse_verdict(std::string_view name) {
  for (Verdict v : {Verdict::kComposition, Verdict::kTranscription,
                    Verdict::kInconclusive}) {
    if (verdict_name(v) == name) return v;
  }
  return std::nullopt;
}

Verdict classify(double rho, std::size_t n, double threshold, std::size_t n_min) {
  if (n < n_min) return Verdict::kInconclusive;
  return rho >= threshold ? Verdict::kComposition : Verdict::kTranscription;
}

double equal_likelihood_threshold(double mean1, double sd1, double mean0,
                                  double sd0) {
  if (!(mean0 < mean1) || !(sd0 > 0.0) || !(sd1 > 0.0)) {
    throw Error(ErrorCode::kInvalidParameters, "need mean0 < mean1, sd > 0");
  }
  auto diff = [&](double x) {
    return log_normal_density(x, mean1, sd1) - log_normal_density(x, mean0, sd0);
  };
  double lo = mean0, hi = mean1;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (diff(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_quantile(double p) {
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

double power(std::size_t n, double rho1, double rho0, double alpha) {
  if (n < 4 || !(rho0 > -1.0) || !(rho1 < 1.0) || rho0 > rho1 ||
      !(alpha > 0.0) || !(alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidParameters,
                "power needs n >= 4, -1 < rho0 <= rho1 < 1, 0 < alpha < 1");
  }
  const double se = 1.0 / std::sqrt(static_cast<double>(n) - 3.0);
  const double shift = (std::atanh(rho1) - std::atanh(rho0)) / se;
  return 1.0 - normal_cdf(normal_quantile(1.0 - alpha) - shift);
}

ClcReport make_clc_report(const LatencyComplexityPairs& pairs, double threshold,
                          std::size_t n_min) {
  ClcReport report;
  report.n = pairs.n();
  report.rho = report.n >= 2 ? compute_clc(pairs) : 0.0;
  report.threshold_used = threshold;
  report.n_min = n_min;
  report.verdict = classify(report.rho, report.n, threshold, n_min);
  report.power_at_n = report.n >= 4 ? power(report.n, kPowerRhoComposition,
                                            kPowerRhoTranscription, 0.05)
                                    : 0.0;
  return report;
}

Session to_privacy_mode(const Session& session, const ComplexityProfile& profile) {
  const ReconstructedText doc = reconstruct_text(session);
  const std::vector<std::size_t> onsets = word_onset_events(doc, profile);
  Session out = session;
  out.privacy_mode = true;
  for (KeystrokeEvent& e : out.events) {
    e.payload.reset();
    e.cbin.reset();
  }
  for (std::size_t i = 0; i < onsets.size(); ++i) {
    out.events[onsets[i]].cbin = profile.bins[i];
  }
  return out;
}

}  // namespace cogsig
