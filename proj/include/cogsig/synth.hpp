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

// Ground-truth session synthesis: genuine composition, mechanical
// transcription and three forgery strategies, all deterministic per seed.

#ifndef COGSIG_SYNTH_HPP
#define COGSIG_SYNTH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cogsig/complexity.hpp"
#include "cogsig/event_log.hpp"
#include "cogsig/segmentation.hpp"

namespace cogsig {

// ---------------------------------------------------------------------------
// Text

// Pseudo-English text over a fixed Zipfian vocabulary with bigram structure.
// Sentences end in '.', paragraphs are separated by a newline.
std::string generate_text(std::uint64_t seed, std::size_t words);

inline constexpr std::uint64_t kReferenceCorpusSeed = 0x5EED'C0'4B'05ull;
inline constexpr std::size_t kReferenceCorpusWords = 200'000;

// generate_text(kReferenceCorpusSeed, kReferenceCorpusWords), cached.
const std::string& reference_corpus();
// Default model trained on reference_corpus(), cached.
const NgramModel& reference_model();

// ---------------------------------------------------------------------------
// Sessions

enum class Attack { kNone, kNaiveSlowdown, kPauseMap, kRehearsedProfile };

std::string_view attack_name(Attack attack);
std::optional<Attack> parse_attack(std::string_view name);

struct SynthConfig {
  std::uint64_t seed = 1;
  std::size_t words = 1500;
  double motor_median_ms = 140.0;
  // Log-logistic shape; larger is tighter.
  double motor_shape = 15.0;
  // Log-domain coupling: the pre-word pause is multiplied by
  // exp(clc_gain * z), z the word's standardized surprisal.
  double clc_gain = 0.07;
  // Probability of a planning pause at a sentence boundary. Paragraph
  // starts always get one.
  double planning_rate = 0.6;
  // Probability of a revision episode per sentence.
  double revision_rate = 0.15;
  // Probability of a single-character typo fix per word.
  double typo_rate = 0.02;
  Attack attack = Attack::kNone;
  int resolution_ms = kDefaultResolutionMs;
  std::string writer_id = "synthetic";
  std::string session_id = "session";
};

struct GroundTruth {
  std::vector<Phase> phases;  // per event
  // Events that end a planning pause.
  std::vector<std::size_t> planning_events;
};

struct SynthSession {
  Session session;
  GroundTruth truth;
};

SynthSession synth_composition(const SynthConfig& config, std::string_view text,
                               const NgramModel& model);
SynthSession synth_transcription(const SynthConfig& config, std::string_view text,
                                 const NgramModel& model);
SynthSession synth_forgery(const SynthConfig& config, std::string_view text,
                           const NgramModel& model);

// Label file: {"session": ..., "phases": [...], "planning_events": [...]}.
std::string serialize_ground_truth(const SynthSession& synth);

// ---------------------------------------------------------------------------
// Writer populations

enum class SessionKind { kComposition, kTranscription, kForgery };

// Between-writer and between-session spread of the synthesizer parameters.
// Defaults are calibrated so that composition and transcription CLC over a
// population match N(0.45, 0.12^2) and N(0.07, 0.08^2).
struct PopulationParams {
  double motor_median_lo_ms = 110.0;
  double motor_median_hi_ms = 190.0;
  double motor_shape = 15.0;

  double composition_gain_mean = 0.088;
  double composition_gain_writer_sd = 0.03;
  double composition_gain_session_sd = 0.015;

  double transcription_gain_mean = 0.01;
  double transcription_gain_writer_sd = 0.009;
  double transcription_gain_session_sd = 0.005;

  double planning_rate_lo = 0.45;
  double planning_rate_hi = 0.8;
  double revision_rate_lo = 0.08;
  double revision_rate_hi = 0.25;
  double typo_rate = 0.02;
  double transcription_typo_rate = 0.005;
};

struct WriterProfile {
  std::string writer_id;
  std::uint64_t seed = 0;
  double motor_median_ms = 140.0;
  double motor_shape = 15.0;
  double composition_gain = 0.0;
  double transcription_gain = 0.0;
  double planning_rate = 0.0;
  double revision_rate = 0.0;
};

WriterProfile draw_writer(std::uint64_t writer_seed,
                          const PopulationParams& params = {});

// Session-level configuration for one of the writer's sessions.
SynthConfig session_config(const WriterProfile& writer, SessionKind kind,
                           std::uint64_t session_seed, std::size_t words,
                           Attack attack = Attack::kNone,
                           const PopulationParams& params = {});

// Generates the text from config.seed and dispatches on kind.
SynthSession synthesize(SessionKind kind, const SynthConfig& config,
                        const NgramModel& model);

}  // namespace cogsig

#endif  // COGSIG_SYNTH_HPP
