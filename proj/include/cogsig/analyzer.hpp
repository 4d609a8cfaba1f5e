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

// Single-session analysis pipeline: quantize, segment, pair, correlate and
// summarize. The result is what the `analyze` report carries and what
// evidence records are built from.

#ifndef COGSIG_ANALYZER_HPP
#define COGSIG_ANALYZER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cogsig/clc.hpp"
#include "cogsig/complexity.hpp"
#include "cogsig/entropy_spectral.hpp"
#include "cogsig/event_log.hpp"
#include "cogsig/segmentation.hpp"

namespace cogsig {

inline constexpr std::string_view kReportSchema = "cogsig-report-v1";

struct AnalysisOptions {
  Thresholds thresholds;
  double clc_threshold = kDefaultThreshold;
  std::size_t n_min = kDefaultMinPairs;
};

struct SessionAnalysis {
  std::string writer_id;
  std::string session_id;
  int resolution_ms = kDefaultResolutionMs;
  bool privacy_mode = false;
  std::size_t event_count = 0;
  std::size_t word_count = 0;

  std::vector<Segment> segments;
  PhaseSummary phases;
  std::vector<Burst> bursts;
  BurstSummary burst_summary;
  RevisionStats revisions;

  ClcReport clc;

  IkiHistogram histogram;
  double entropy_bits = 0.0;
  // Absent when the within-burst series is shorter than kMinSpectralLength
  // or has no variation.
  std::optional<double> spectral_slope;
};

// Runs the full pipeline on `session` quantized at its own resolution.
// Full-mode sessions need `model`; privacy-mode sessions use their cbin tags
// and ignore it.
SessionAnalysis analyze_session(const Session& session, const NgramModel* model,
                                const AnalysisOptions& options = {});

// Report JSON (schema cogsig-report-v1), pretty-printed.
std::string report_to_json(const SessionAnalysis& analysis);

// Reads back the aggregate fields of a report. Segment and burst lists are
// not restored.
SessionAnalysis report_from_json(std::string_view json);

}  // namespace cogsig

#endif  // COGSIG_ANALYZER_HPP
