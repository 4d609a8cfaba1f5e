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

// Cognitive Load Correlation: the rank correlation between the pause before
// each word and that word's complexity.

#ifndef COGSIG_CLC_HPP
#define COGSIG_CLC_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cogsig/complexity.hpp"
#include "cogsig/event_log.hpp"

namespace cogsig {

struct LatencyComplexityPair {
  double pause_ms = 0.0;
  double complexity = 0.0;
  // Event whose preceding interval is the pause.
  std::size_t onset_event = 0;
};

struct LatencyComplexityPairs {
  std::vector<LatencyComplexityPair> pairs;
  std::size_t n() const { return pairs.size(); }
};

// Event index of each profile word's first character.
std::vector<std::size_t> word_onset_events(const ReconstructedText& doc,
                                           const ComplexityProfile& profile);

// Full mode: replays the text and pairs each word after the first with the
// quantized interval preceding its first character. `profile` must have been
// computed on the reconstructed text.
LatencyComplexityPairs pair_latency_complexity(const Session& session,
                                               const ComplexityProfile& profile);

// Privacy mode: pairs every cbin-tagged onset after the first with its
// quantized preceding interval.
LatencyComplexityPairs pair_latency_complexity(const Session& session);

// Spearman rank correlation with average ranks for ties. Returns 0 when
// either coordinate has no rank variation.
double spearman(std::span<const double> x, std::span<const double> y);
double compute_clc(const LatencyComplexityPairs& pairs);

enum class Verdict { kComposition, kTranscription, kInconclusive };

std::string_view verdict_name(Verdict verdict);
std::optional<Verdict> parse_verdict(std::string_view name);

inline constexpr double kDefaultThreshold = 0.22;
inline constexpr std::size_t kDefaultMinPairs = 100;

// Class models behind the default threshold: composition and transcription
// CLC as normals with these means (range midpoints) and SDs.
inline constexpr double kCompositionMean = 0.45;
inline constexpr double kCompositionSd = 0.12;
inline constexpr double kTranscriptionMean = 0.07;
inline constexpr double kTranscriptionSd = 0.08;

// Effect size used to report power at a session's pair count.
inline constexpr double kPowerRhoComposition = 0.35;
inline constexpr double kPowerRhoTranscription = 0.12;

Verdict classify(double rho, std::size_t n, double threshold = kDefaultThreshold,
                 std::size_t n_min = kDefaultMinPairs);

// Point between the two means where the normal densities are equal.
double equal_likelihood_threshold(double mean1, double sd1, double mean0,
                                  double sd0);

// One-sided power to tell rho1 from rho0 with n pairs, using the Fisher
// z-transform with standard error 1/sqrt(n - 3).
double power(std::size_t n, double rho1, double rho0, double alpha);

double normal_cdf(double z);
double normal_quantile(double p);

struct ClcReport {
  double rho = 0.0;
  std::size_t n = 0;
  Verdict verdict = Verdict::kInconclusive;
  double threshold_used = kDefaultThreshold;
  std::size_t n_min = kDefaultMinPairs;
  double power_at_n = 0.0;
};

ClcReport make_clc_report(const LatencyComplexityPairs& pairs,
                          double threshold = kDefaultThreshold,
                          std::size_t n_min = kDefaultMinPairs);

// Strips payloads and tags each word onset with its complexity bin, as a
// privacy-mode collector would.
Session to_privacy_mode(const Session& session, const ComplexityProfile& profile);

}  // namespace cogsig

#endif  // COGSIG_CLC_HPP
