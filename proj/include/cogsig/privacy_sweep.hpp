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

// Privacy-utility sweep: CLC classification accuracy and IKI leakage as the
// quantization resolution grows.

#ifndef COGSIG_PRIVACY_SWEEP_HPP
#define COGSIG_PRIVACY_SWEEP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cogsig/clc.hpp"
#include "cogsig/complexity.hpp"
#include "cogsig/event_log.hpp"
#include "cogsig/synth.hpp"

namespace cogsig {

struct LabeledSession {
  Session session;
  SessionKind label = SessionKind::kComposition;
};

// Writer population for the sweep: the default population with per-writer
// motor medians spread from fast to average typists.
PopulationParams sweep_population_params();

// sessions / 2 writers, each contributing one composition and one
// transcription session (an odd count adds one more composition session).
std::vector<LabeledSession> make_population(std::size_t sessions, std::uint64_t seed,
                                            std::size_t words = 1500,
                                            const PopulationParams& params =
                                                sweep_population_params());

struct SweepRow {
  int r_ms = 1;
  // Fraction of sessions whose verdict matches the label; inconclusive
  // counts as wrong.
  double accuracy = 0.0;
  double pooled_entropy_bits = 0.0;
  double mi_proxy_bits = 0.0;
};

// r_values must be non-empty, strictly ascending and >= 1.
std::vector<SweepRow> sweep(std::span<const int> r_values,
                            std::span<const LabeledSession> population,
                            const NgramModel& model,
                            double threshold = kDefaultThreshold);

std::vector<int> parse_resolution_list(std::string_view text);

// Header r_ms,accuracy,pooled_entropy_bits,mi_proxy_bits.
std::string sweep_to_csv(std::span<const SweepRow> rows);

}  // namespace cogsig

#endif  // COGSIG_PRIVACY_SWEEP_HPP
