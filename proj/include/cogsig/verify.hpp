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

// Evidence records, hash commitments, personal baselines and multi-session
// consistency checks.

#ifndef COGSIG_VERIFY_HPP
#define COGSIG_VERIFY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cogsig/analyzer.hpp"
#include "cogsig/clc.hpp"
#include "cogsig/segmentation.hpp"
#include "cogsig/synth.hpp"
#include "json.hpp"

namespace cogsig {

inline constexpr std::string_view kEvidenceSchema = "cogsig-evidence-v1";
inline constexpr std::string_view kBaselineSchema = "cogsig-baseline-v1";
inline constexpr std::string_view kDefaultCreatedAt = "1970-01-01T00:00:00Z";

using Salt = std::array<std::uint8_t, 16>;
using Digest = std::array<std::uint8_t, 32>;

std::string to_hex(std::span<const std::uint8_t> bytes);
Salt parse_salt_hex(std::string_view hex);
Digest parse_digest_hex(std::string_view hex);

Digest sha256(std::string_view data);

struct EvidenceRecord {
  std::string writer_id;
  std::string session_id;
  std::size_t word_count = 0;
  double clc_rounded = 0.0;
  Verdict verdict = Verdict::kInconclusive;
  std::size_t pair_count = 0;
  int histogram_bin_ms = kDefaultResolutionMs;
  std::map<std::int64_t, std::uint64_t> iki_histogram;
  PhaseSummary phases;
  RevisionStats revisions;
  BurstSummary bursts;
  Salt salt{};
  std::string created_at{kDefaultCreatedAt};

  // Revision episodes per 100 words.
  double revision_rate() const;
};

// Rounds rho to 2 decimals and every other derived float to 4. Throws
// IncompleteAnalysis when the analysis has no words, pairs or intervals.
EvidenceRecord build_evidence(const SessionAnalysis& analysis, const Salt& salt,
                              std::string_view created_at = kDefaultCreatedAt);

nlohmann::json evidence_to_json(const EvidenceRecord& record);
EvidenceRecord evidence_from_json(const nlohmann::json& j);
EvidenceRecord parse_evidence(std::string_view text);

// True when `j` has exactly the evidence fields, no arrays anywhere and no
// strings other than identifiers, verdict, salt, schema and timestamp.
bool is_content_free(const nlohmann::json& j);

// Sorted keys, no insignificant whitespace, UTF-8, numbers in shortest
// round-trip form. Throws SerializationFailure on non-finite numbers.
std::string canonical_json(const nlohmann::json& j);
std::string canonical_serialization(const EvidenceRecord& record);

Digest commit(const EvidenceRecord& record);
bool verify_commitment(const EvidenceRecord& record, const Digest& digest);

// ---------------------------------------------------------------------------
// Baselines and consistency

struct BaselineProfile {
  std::string writer_id;
  std::size_t sessions_observed = 0;
  double clc_mean = 0.0;
  double clc_variance = 0.0;
  double burst_length_mean = 0.0;
  double burst_length_variance = 0.0;
  double revision_rate_mean = 0.0;
  double revision_rate_variance = 0.0;
};

inline constexpr std::size_t kMinEnrollmentSessions = 3;

// Needs at least 3 records from one writer. Variances are sample variances.
BaselineProfile calibrate_baseline(std::span<const EvidenceRecord> records);

std::string baseline_to_json(const BaselineProfile& baseline);
BaselineProfile parse_baseline(std::string_view text);

struct VarianceInterval {
  double lo = 0.0;
  double hi = 0.0;
};

struct PopulationNorms {
  // Pooled within-writer variance of the rounded CLC.
  double clc_within_writer_variance = 0.0;
  // Acceptance interval for s^2 / clc_within_writer_variance with k records,
  // stored for k = 2, 3, ...; larger k reuse the last entry.
  std::vector<VarianceInterval> variance_ratio;
  // Floors on the k-record means of these per-session statistics.
  double min_revision_rate = 0.0;
  double min_burst_length_cv = 0.0;
  double min_planning_pause_cv = 0.0;
  // Largest tolerated |z| of the CLC mean against an enrolled baseline.
  double max_baseline_drift_z = 3.5;

  const VarianceInterval& interval_for(std::size_t k) const;
};

inline constexpr std::size_t kNormCalibrationWriters = 150;
inline constexpr std::size_t kNormCalibrationSessions = 10;
inline constexpr std::uint64_t kNormCalibrationSeed = 0xCA11B;

// Norms calibrated on the synthetic genuine-composition population.
const PopulationNorms& default_population_norms();

struct NormCalibration {
  // Two-sided tail mass of the variance-ratio interval.
  double variance_tail = 0.02;
  // Lower quantile of the two-record means used as each floor.
  double floor_quantile = 0.005;
  std::size_t max_sessions = 10;
  double max_baseline_drift_z = 3.5;
};

// `writers` holds the genuine records of each writer, in session order.
PopulationNorms calibrate_population_norms(
    const std::vector<std::vector<EvidenceRecord>>& writers,
    const NormCalibration& calibration = {});

struct ConsistencyResult {
  bool flagged = false;
  std::size_t sessions = 0;
  double clc_mean = 0.0;
  double clc_variance = 0.0;
  double variance_ratio = 0.0;
  VarianceInterval interval;
  double revision_rate = 0.0;
  double burst_length_cv = 0.0;
  double planning_pause_cv = 0.0;
  std::optional<double> baseline_drift_z;
  // Names of the components that flagged.
  std::vector<std::string> reasons;
};

ConsistencyResult consistency_check(std::span<const EvidenceRecord> records,
                                    const BaselineProfile* baseline,
                                    const PopulationNorms& norms = default_population_norms());

std::string consistency_to_json(const ConsistencyResult& result);

// Synthesizes `sessions` sessions for each of `writers` writers and returns
// their evidence records. Writer w uses writer seed derive_seed(seed, w).
std::vector<std::vector<EvidenceRecord>> simulate_writer_records(
    std::size_t writers, std::size_t sessions, std::uint64_t seed, SessionKind kind,
    Attack attack = Attack::kNone, std::size_t words = 1500,
    const PopulationParams& params = {});

}  // namespace cogsig

#endif  // COGSIG_VERIFY_HPP
