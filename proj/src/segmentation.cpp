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

#include "cogsig/segmentation.hpp"

#include <cmath>

#include "cogsig/error.hpp"

namespace cogsig {
namespace {

bool is_whitespace(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r';
}

// Insertions that begin a new word. Privacy-mode collectors tag word onsets
// with a complexity bin; otherwise an onset follows a whitespace insertion.
std::vector<bool> word_onsets(const Session& session) {
  std::vector<bool> onset(session.events.size(), false);
  bool after_space = true;
  for (std::size_t i = 0; i < session.events.size(); ++i) {
    const KeystrokeEvent& e = session.events[i];
    if (!is_insertion(e.kind)) continue;
    if (session.privacy_mode) {
      onset[i] = e.cbin.has_value();
      continue;
    }
    const char32_t c = e.kind == EventKind::kEnter ? U'\n' : e.payload.value_or(U' ');
    onset[i] = after_space && !is_whitespace(c);
    after_space = is_whitespace(c);
  }
  return onset;
}

double coefficient_of_variation(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  if (mean <= 0.0) return 0.0;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1)) / mean;
}

}  // namespace

std::string_view phase_name(Phase phase) {
  switch (phase) {
    case Phase::kPlanning: return "planning";
    case Phase::kTranslating: return "translating";
    case Phase::kRevising: return "revising";
  }
  return "translating";
}

std::vector<Segment> segment_phases(const Session& session,
                                    const Thresholds& thresholds) {
  const auto& events = session.events;
  const std::size_t n = events.size();
  if (n < 2) throw Error(ErrorCode::kEmptyLog, "need at least 2 events");

  auto iki = [&](std::size_t k) { return events[k + 1].t - events[k].t; };
  std::vector<Phase> label(n - 1, Phase::kTranslating);

  const std::vector<bool> onset = word_onsets(session);
  std::size_t i = 0;
  while (i < n) {
    if (!is_deletion(events[i].kind)) {
      ++i;
      continue;
    }
    const std::size_t run_start = i;
    while (i < n && is_deletion(events[i].kind)) ++i;
    const std::size_t run_len = i - run_start;
    if (run_len < thresholds.min_revision_deletions) continue;

    // Retyping extends until a planning pause, a non-insertion, or the next
    // word onset once at least as many characters as were deleted are back.
    std::size_t j = i;
    std::size_t retyped = 0;
    while (j < n && is_insertion(events[j].kind)) {
      if (iki(j - 1) >= thresholds.planning_ms) break;
      if (retyped >= run_len && onset[j]) break;
      ++retyped;
      ++j;
    }
    const std::size_t first = run_start == 0 ? 0 : run_start - 1;
    for (std::size_t k = first; k + 1 < j; ++k) label[k] = Phase::kRevising;
    i = j;
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (iki(k) >= thresholds.planning_ms) label[k] = Phase::kPlanning;
  }

  std::vector<Segment> segments;
  std::size_t k = 0;
  while (k < n - 1) {
    std::size_t end = k + 1;
    if (label[k] != Phase::kPlanning) {
      while (end < n - 1 && label[end] == label[k]) ++end;
    }
    Segment seg;
    seg.phase = label[k];
    seg.start_event = k;
    seg.end_event = end;
    seg.duration_ms = events[end].t - events[k].t;
    seg.mean_iki_ms =
        static_cast<double>(seg.duration_ms) / static_cast<double>(end - k);
    segments.push_back(seg);
    k = end;
  }
  return segments;
}

std::vector<Burst> detect_bursts(const Session& session, Millis burst_break_ms) {
  const auto& events = session.events;
  if (events.size() < 2) throw Error(ErrorCode::kEmptyLog, "need at least 2 events");

  std::vector<Burst> bursts;
  bool open = false;
  Burst current;
  auto close = [&] {
    if (!open) return;
    const Millis span = events[current.end_event].t - events[current.start_event].t;
    current.mean_iki_ms =
        current.length_chars > 1
            ? static_cast<double>(span) / static_cast<double>(current.length_chars - 1)
            : 0.0;
    bursts.push_back(current);
    open = false;
  };
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (!is_insertion(events[i].kind)) {
      close();
      continue;
    }
    if (open && current.end_event + 1 == i &&
        events[i].t - events[i - 1].t < burst_break_ms) {
      current.end_event = i;
      ++current.length_chars;
      continue;
    }
    close();
    current = Burst{i, i, 1, 0.0};
    open = true;
  }
  close();
  return bursts;
}

RevisionStats revision_stats(const Session& session,
                             std::size_t min_revision_deletions) {
  const auto& events = session.events;
  RevisionStats stats;

  std::vector<std::optional<char32_t>> removed;
  try {
    removed = deleted_characters(session);
  } catch (const Error&) {
    removed.assign(events.size(), std::nullopt);
  }

  std::size_t i = 0;
  while (i < events.size()) {
    const KeystrokeEvent& e = events[i];
    if (is_deletion(e.kind)) {
      const std::size_t run_start = i;
      while (i < events.size() && is_deletion(events[i].kind)) ++i;
      const std::size_t run_len = i - run_start;
      stats.deleted_chars += run_len;
      const bool retyped = i < events.size() && is_insertion(events[i].kind);
      if (!retyped) continue;
      if (run_len >= min_revision_deletions) {
        ++stats.revision_episodes;
      } else if (run_len == 1) {
        const KeystrokeEvent& next = events[i];
        const std::optional<char32_t> inserted =
            next.kind == EventKind::kEnter ? std::optional<char32_t>(U'\n') : next.payload;
        const std::optional<char32_t>& gone = removed[run_start];
        if (!gone || !inserted || *gone != *inserted) ++stats.single_char_typo_fixes;
      }
      continue;
    }
    if (is_insertion(e.kind)) {
      const std::size_t run_start = i;
      while (i + 1 < events.size() && is_insertion(events[i + 1].kind) &&
             events[i + 1].t == e.t) {
        ++i;
      }
      if (i - run_start + 1 >= 3) ++stats.paste_flags;
    }
    ++i;
  }
  return stats;
}

PhaseSummary summarize_phases(const std::vector<Segment>& segments) {
  PhaseSummary summary;
  std::vector<double> planning_durations;
  for (const Segment& s : segments) {
    PhaseTotals* totals = &summary.translating;
    if (s.phase == Phase::kPlanning) {
      totals = &summary.planning;
      planning_durations.push_back(static_cast<double>(s.duration_ms));
    } else if (s.phase == Phase::kRevising) {
      totals = &summary.revising;
    }
    ++totals->count;
    totals->total_ms += s.duration_ms;
  }
  summary.planning_pause_cv = coefficient_of_variation(planning_durations);
  return summary;
}

BurstSummary summarize_bursts(const std::vector<Burst>& bursts) {
  BurstSummary summary;
  summary.count = bursts.size();
  if (bursts.empty()) return summary;
  std::vector<double> lengths;
  lengths.reserve(bursts.size());
  double total = 0.0;
  for (const Burst& b : bursts) {
    lengths.push_back(static_cast<double>(b.length_chars));
    total += static_cast<double>(b.length_chars);
  }
  summary.mean_length = total / static_cast<double>(bursts.size());
  summary.length_cv = coefficient_of_variation(lengths);
  return summary;
}

}  // namespace cogsig
