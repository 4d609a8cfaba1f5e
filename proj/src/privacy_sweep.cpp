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

#include "cogsig/privacy_sweep.hpp"

#include <charconv>
#include <cstdio>

#include "cogsig/entropy_spectral.hpp"
#include "cogsig/error.hpp"
#include "cogsig/rng.hpp"

namespace cogsig {
namespace {

void validate_resolutions(std::span<const int> r_values) {
  if (r_values.empty()) {
    throw Error(ErrorCode::kInvalidResolutionList, "resolution list is empty");
  }
  for (std::size_t i = 0; i < r_values.size(); ++i) {
    if (r_values[i] < 1) {
      throw Error(ErrorCode::kInvalidResolutionList, "resolutions must be >= 1 ms");
    }
    if (i > 0 && r_values[i] <= r_values[i - 1]) {
      throw Error(ErrorCode::kInvalidResolutionList,
                  "resolutions must be strictly ascending");
    }
  }
}

// Per-session state that does not depend on r.
struct Prepared {
  std::vector<std::size_t> onsets;  // word onset events, first word excluded
  std::vector<double> complexity;
  SessionKind label;
};

}  // namespace

PopulationParams sweep_population_params() {
  PopulationParams p;
  p.motor_median_lo_ms = 60.0;
  p.motor_median_hi_ms = 120.0;
  return p;
}

std::vector<LabeledSession> make_population(std::size_t sessions, std::uint64_t seed,
                                            std::size_t words,
                                            const PopulationParams& params) {
  const NgramModel& model = reference_model();
  std::vector<LabeledSession> out;
  out.reserve(sessions);
  for (std::size_t i = 0; out.size() < sessions; ++i) {
    const WriterProfile writer = draw_writer(derive_seed(seed, i), params);
    for (SessionKind kind : {SessionKind::kComposition, SessionKind::kTranscription}) {
      if (out.size() == sessions) break;
      const SynthConfig config =
          session_config(writer, kind, 1, words, Attack::kNone, params);
      out.push_back({synthesize(kind, config, model).session, kind});
    }
  }
  return out;
}

std::vector<SweepRow> sweep(std::span<const int> r_values,
                            std::span<const LabeledSession> population,
                            const NgramModel& model, double threshold) {
  validate_resolutions(r_values);
  if (population.size() < 2) {
    throw Error(ErrorCode::kTooFewSessions, "sweep needs at least 2 sessions");
  }
  std::vector<Prepared> prepared;
  prepared.reserve(population.size());
  std::vector<WriterIkis> ikis;
  for (const LabeledSession& ls : population) {
    Prepared p;
    p.label = ls.label;
    if (ls.session.privacy_mode) {
      for (std::size_t e = 0; e < ls.session.events.size(); ++e) {
        if (!ls.session.events[e].cbin) continue;
        p.onsets.push_back(e);
        p.complexity.push_back(*ls.session.events[e].cbin);
      }
    } else {
      const ReconstructedText doc = reconstruct_text(ls.session);
      const ComplexityProfile profile =
          profile_document(model, std::u32string_view(doc.text));
      p.onsets = word_onset_events(doc, profile);
      for (const auto& w : profile.per_word) p.complexity.push_back(w.surprisal_bits);
    }
    if (!p.onsets.empty()) {
      p.onsets.erase(p.onsets.begin());
      p.complexity.erase(p.complexity.begin());
    }
    prepared.push_back(std::move(p));
    ikis.push_back({ls.session.writer_id, compute_ikis(ls.session).values});
  }

  std::vector<SweepRow> rows;
  for (int r : r_values) {
    std::size_t correct = 0;
    for (std::size_t s = 0; s < population.size(); ++s) {
      const auto& events = population[s].session.events;
      const Prepared& p = prepared[s];
      std::vector<double> pauses;
      pauses.reserve(p.onsets.size());
      for (std::size_t e : p.onsets) {
        pauses.push_back(static_cast<double>(quantize(events[e].t - events[e - 1].t, r)));
      }
      const double rho = pauses.size() >= 2 ? spearman(pauses, p.complexity) : 0.0;
      const Verdict v = classify(rho, pauses.size(), threshold);
      const Verdict expected = p.label == SessionKind::kComposition
                                   ? Verdict::kComposition
                                   : Verdict::kTranscription;
      correct += v == expected;
    }
    const LeakageEstimate leak = leakage_estimate(std::span<const WriterIkis>(ikis), r);
    rows.push_back({r, static_cast<double>(correct) / static_cast<double>(population.size()),
                    leak.pooled_entropy_bits, leak.mi_proxy_bits});
  }
  return rows;
}

std::vector<int> parse_resolution_list(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::kInvalidResolutionList,
                  "bad resolution '" + std::string(item) + "'");
    }
    out.push_back(value);
    start = comma + 1;
  }
  validate_resolutions(out);
  return out;
}

std::string sweep_to_csv(std::span<const SweepRow> rows) {
  std::string out = "r_ms,accuracy,pooled_entropy_bits,mi_proxy_bits\n";
  char line[128];
  for (const SweepRow& row : rows) {
    std::snprintf(line, sizeof line, "%d,%.4f,%.4f,%.4f\n", row.r_ms, row.accuracy,
                  row.pooled_entropy_bits, row.mi_proxy_bits);
    out += line;
  }
  return out;
}

}  // namespace cogsig
