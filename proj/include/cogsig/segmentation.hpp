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

// Writing-phase segmentation, burst detection and revision statistics.
//
// Segments tile the interval timeline: a segment [start_event, end_event]
// owns the intervals between consecutive events in that range, so the next
// segment starts at the event where the previous one ends.

#ifndef COGSIG_SEGMENTATION_HPP
#define COGSIG_SEGMENTATION_HPP

#include <limits>
#include <string_view>
#include <vector>

#include "cogsig/event_log.hpp"

namespace cogsig {

enum class Phase { kPlanning, kTranslating, kRevising };

std::string_view phase_name(Phase phase);

struct Thresholds {
  Millis planning_ms = 1000;
  Millis burst_break_ms = 2000;
  // Shortest deletion run that counts as revision rather than a typo fix.
  std::size_t min_revision_deletions = 2;
};

struct Segment {
  Phase phase = Phase::kTranslating;
  std::size_t start_event = 0;
  std::size_t end_event = 0;
  Millis duration_ms = 0;
  double mean_iki_ms = 0.0;
};

struct Burst {
  std::size_t start_event = 0;
  std::size_t end_event = 0;
  std::size_t length_chars = 0;
  double mean_iki_ms = 0.0;
};

struct RevisionStats {
  std::size_t revision_episodes = 0;
  std::size_t deleted_chars = 0;
  std::size_t single_char_typo_fixes = 0;
  std::size_t paste_flags = 0;

  friend bool operator==(const RevisionStats&, const RevisionStats&) = default;
};

std::vector<Segment> segment_phases(const Session& session,
                                    const Thresholds& thresholds = {});

inline constexpr Millis kNoBurstBreak = std::numeric_limits<Millis>::max();

std::vector<Burst> detect_bursts(const Session& session,
                                 Millis burst_break_ms = 2000);

RevisionStats revision_stats(const Session& session,
                             std::size_t min_revision_deletions = 2);

// Aggregate per-phase view used by reports and evidence records.
struct PhaseTotals {
  std::size_t count = 0;
  Millis total_ms = 0;
};

struct PhaseSummary {
  PhaseTotals planning;
  PhaseTotals translating;
  PhaseTotals revising;
  // Coefficient of variation of planning pause durations (0 if < 2).
  double planning_pause_cv = 0.0;
};

PhaseSummary summarize_phases(const std::vector<Segment>& segments);

struct BurstSummary {
  std::size_t count = 0;
  double mean_length = 0.0;
  double length_cv = 0.0;
};

BurstSummary summarize_bursts(const std::vector<Burst>& bursts);

}  // namespace cogsig

#endif  // COGSIG_SEGMENTATION_HPP
