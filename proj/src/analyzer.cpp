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

#include "cogsig/analyzer.hpp"

#include <algorithm>

#include "cogsig/error.hpp"
#include "json.hpp"

namespace cogsig {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<double> within_burst_ikis(const Session& session,
                                      const std::vector<Burst>& bursts) {
  std::vector<double> series;
  for (const Burst& b : bursts) {
    for (std::size_t e = b.start_event + 1; e <= b.end_event; ++e) {
      series.push_back(
          static_cast<double>(session.events[e].t - session.events[e - 1].t));
    }
  }
  return series;
}

ordered_json totals_json(const PhaseTotals& t) {
  return {{"count", t.count}, {"total_ms", t.total_ms}};
}

PhaseTotals totals_from(const json& j) {
  return {j.at("count").get<std::size_t>(), j.at("total_ms").get<Millis>()};
}

}  // namespace

SessionAnalysis analyze_session(const Session& raw, const NgramModel* model,
                                const AnalysisOptions& options) {
  const Session session = quantize_session(raw, raw.resolution_ms);
  SessionAnalysis a;
  a.writer_id = session.writer_id;
  a.session_id = session.session_id;
  a.resolution_ms = session.resolution_ms;
  a.privacy_mode = session.privacy_mode;
  a.event_count = session.events.size();

  a.segments = segment_phases(session, options.thresholds);
  a.phases = summarize_phases(a.segments);
  a.bursts = detect_bursts(session, options.thresholds.burst_break_ms);
  a.burst_summary = summarize_bursts(a.bursts);
  a.revisions = revision_stats(session, options.thresholds.min_revision_deletions);

  LatencyComplexityPairs pairs;
  if (session.privacy_mode) {
    pairs = pair_latency_complexity(session);
    a.word_count = static_cast<std::size_t>(
        std::count_if(session.events.begin(), session.events.end(),
                      [](const KeystrokeEvent& e) { return e.cbin.has_value(); }));
  } else {
    if (model == nullptr) {
      throw Error(ErrorCode::kInvalidParameters,
                  "full-mode analysis needs a complexity model");
    }
    const ReconstructedText doc = reconstruct_text(session);
    const ComplexityProfile profile =
        profile_document(*model, std::u32string_view(doc.text));
    a.word_count = profile.tokens.size();
    pairs = pair_latency_complexity(session, profile);
  }
  a.clc = make_clc_report(pairs, options.clc_threshold, options.n_min);

  const IkiSeries ikis = compute_ikis(session);
  a.histogram = make_histogram(ikis.values,
                               std::max(kDefaultResolutionMs, session.resolution_ms));
  a.entropy_bits = iki_entropy(a.histogram);

  const std::vector<double> series = within_burst_ikis(session, a.bursts);
  if (series.size() >= kMinSpectralLength) {
    try {
      a.spectral_slope = spectral_slope(series);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegenerateSeries) throw;
    }
  }
  return a;
}

std::string report_to_json(const SessionAnalysis& a) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["writer"] = a.writer_id;
  j["session"] = a.session_id;
  j["resolution_ms"] = a.resolution_ms;
  j["privacy_mode"] = a.privacy_mode;
  j["event_count"] = a.event_count;
  j["word_count"] = a.word_count;
  j["clc"] = {{"rho", a.clc.rho},
              {"n", a.clc.n},
              {"verdict", verdict_name(a.clc.verdict)},
              {"threshold_used", a.clc.threshold_used},
              {"n_min", a.clc.n_min},
              {"power_at_n", a.clc.power_at_n}};
  j["phase_summary"] = {{"planning", totals_json(a.phases.planning)},
                        {"translating", totals_json(a.phases.translating)},
                        {"revising", totals_json(a.phases.revising)},
                        {"planning_pause_cv", a.phases.planning_pause_cv}};
  ordered_json segments = ordered_json::array();
  for (const Segment& s : a.segments) {
    segments.push_back({{"phase", phase_name(s.phase)},
                        {"start_event", s.start_event},
                        {"end_event", s.end_event},
                        {"duration_ms", s.duration_ms},
                        {"mean_iki_ms", s.mean_iki_ms}});
  }
  j["segments"] = std::move(segments);
  j["burst_summary"] = {{"count", a.burst_summary.count},
                        {"mean_length", a.burst_summary.mean_length},
                        {"length_cv", a.burst_summary.length_cv}};
  j["revision_summary"] = {{"revision_episodes", a.revisions.revision_episodes},
                           {"deleted_chars", a.revisions.deleted_chars},
                           {"single_char_typo_fixes", a.revisions.single_char_typo_fixes},
                           {"paste_flags", a.revisions.paste_flags}};
  ordered_json counts = ordered_json::object();
  for (const auto& [bin, count] : a.histogram.counts) counts[std::to_string(bin)] = count;
  j["iki_histogram"] = {{"bin_width_ms", a.histogram.bin_width_ms},
                        {"total", a.histogram.total},
                        {"counts", std::move(counts)}};
  j["entropy_bits"] = a.entropy_bits;
  j["spectral_slope"] =
      a.spectral_slope ? ordered_json(*a.spectral_slope) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

SessionAnalysis report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedRecord, std::string("report: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != kReportSchema) {
      throw Error(ErrorCode::kMalformedRecord, "report: unsupported schema");
    }
    SessionAnalysis a;
    a.writer_id = j.at("writer").get<std::string>();
    a.session_id = j.at("session").get<std::string>();
    a.resolution_ms = j.at("resolution_ms").get<int>();
    a.privacy_mode = j.at("privacy_mode").get<bool>();
    a.event_count = j.at("event_count").get<std::size_t>();
    a.word_count = j.at("word_count").get<std::size_t>();

    const json& clc = j.at("clc");
    a.clc.rho = clc.at("rho").get<double>();
    a.clc.n = clc.at("n").get<std::size_t>();
    const auto verdict = parse_verdict(clc.at("verdict").get<std::string>());
    if (!verdict) throw Error(ErrorCode::kMalformedRecord, "report: unknown verdict");
    a.clc.verdict = *verdict;
    a.clc.threshold_used = clc.at("threshold_used").get<double>();
    a.clc.n_min = clc.at("n_min").get<std::size_t>();
    a.clc.power_at_n = clc.at("power_at_n").get<double>();

    const json& ph = j.at("phase_summary");
    a.phases.planning = totals_from(ph.at("planning"));
    a.phases.translating = totals_from(ph.at("translating"));
    a.phases.revising = totals_from(ph.at("revising"));
    a.phases.planning_pause_cv = ph.at("planning_pause_cv").get<double>();

    const json& bs = j.at("burst_summary");
    a.burst_summary.count = bs.at("count").get<std::size_t>();
    a.burst_summary.mean_length = bs.at("mean_length").get<double>();
    a.burst_summary.length_cv = bs.at("length_cv").get<double>();

    const json& rs = j.at("revision_summary");
    a.revisions.revision_episodes = rs.at("revision_episodes").get<std::size_t>();
    a.revisions.deleted_chars = rs.at("deleted_chars").get<std::size_t>();
    a.revisions.single_char_typo_fixes = rs.at("single_char_typo_fixes").get<std::size_t>();
    a.revisions.paste_flags = rs.at("paste_flags").get<std::size_t>();

    const json& h = j.at("iki_histogram");
    a.histogram.bin_width_ms = h.at("bin_width_ms").get<int>();
    for (const auto& [bin, count] : h.at("counts").items()) {
      const auto c = count.get<std::uint64_t>();
      a.histogram.counts[std::stoll(bin)] = c;
      a.histogram.total += c;
    }
    if (a.histogram.total != h.at("total").get<std::uint64_t>()) {
      throw Error(ErrorCode::kMalformedRecord, "report: histogram total mismatch");
    }
    a.entropy_bits = j.at("entropy_bits").get<double>();
    if (!j.at("spectral_slope").is_null()) {
      a.spectral_slope = j.at("spectral_slope").get<double>();
    }
    return a;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedRecord, std::string("report: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kMalformedRecord, "report: bad histogram bin");
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::kMalformedRecord, "report: bad histogram bin");
  }
}

}  // namespace cogsig
