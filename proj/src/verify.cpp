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

#include "cogsig/verify.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "cogsig/error.hpp"
#include "cogsig/rng.hpp"

namespace cogsig {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

double round_to(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double r = std::round(x * scale) / scale;
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

template <std::size_t N>
std::array<std::uint8_t, N> parse_hex(std::string_view hex, std::string_view what) {
  if (hex.size() != 2 * N) {
    throw Error(ErrorCode::kInvalidParameters,
                std::string(what) + " must be " + std::to_string(2 * N) + " hex digits");
  }
  std::array<std::uint8_t, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorCode::kInvalidParameters, std::string(what) + " is not hex");
    }
    out[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return out;
}

void write_canonical(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::null:
      out += "null";
      return;
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      return;
    case json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      return;
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kSerializationFailure, "non-finite number");
      }
      if (v == 0.0) {
        out += '0';
        return;
      }
      char buf[32];
      const auto res = std::to_chars(buf, buf + sizeof buf, v);
      out.append(buf, res.ptr);
      return;
    }
    case json::value_t::string:
      try {
        out += j.dump();
      } catch (const json::type_error& e) {
        throw Error(ErrorCode::kSerializationFailure, e.what());
      }
      return;
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const json& item : j) {
        if (!first) out += ',';
        first = false;
        write_canonical(item, out);
      }
      out += ']';
      return;
    }
    case json::value_t::object: {
      // json objects are std::map-backed, so iteration is in byte order.
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        write_canonical(json(key), out);
        out += ':';
        write_canonical(value, out);
      }
      out += '}';
      return;
    }
    case json::value_t::binary:
    case json::value_t::discarded:
      break;
  }
  throw Error(ErrorCode::kSerializationFailure, "unsupported JSON value");
}

json totals_json(const PhaseTotals& t) {
  return {{"count", t.count}, {"total_ms", t.total_ms}};
}

// Non-negative JSON integer; 12.0 is rejected rather than read as 12.
std::uint64_t natural(const json& v) {
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw Error(ErrorCode::kMalformedRecord, "evidence: expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

PhaseTotals totals_from(const json& j) {
  return {natural(j.at("count")), static_cast<Millis>(natural(j.at("total_ms")))};
}

bool has_exact_keys(const json& j, std::initializer_list<std::string_view> keys) {
  if (!j.is_object() || j.size() != keys.size()) return false;
  for (std::string_view k : keys) {
    if (!j.contains(k)) return false;
  }
  return true;
}

double sample_variance(const std::vector<double>& v, double mean) {
  if (v.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return ss / static_cast<double>(v.size() - 1);
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

// Empirical quantile with linear interpolation between order statistics.
double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto i = static_cast<std::size_t>(std::floor(pos));
  const std::size_t j = std::min(i + 1, v.size() - 1);
  return v[i] + (pos - static_cast<double>(i)) * (v[j] - v[i]);
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (std::uint8_t b : bytes) {
    out += kDigits[b >> 4];
    out += kDigits[b & 0xF];
  }
  return out;
}

Salt parse_salt_hex(std::string_view hex) { return parse_hex<16>(hex, "salt"); }

Digest parse_digest_hex(std::string_view hex) { return parse_hex<32>(hex, "digest"); }

Digest sha256(std::string_view data) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != out.size()) {
    throw Error(ErrorCode::kSerializationFailure, "SHA-256 failed");
  }
  return out;
}

double EvidenceRecord::revision_rate() const {
  return word_count == 0 ? 0.0
                         : 100.0 * static_cast<double>(revisions.revision_episodes) /
                               static_cast<double>(word_count);
}

EvidenceRecord build_evidence(const SessionAnalysis& analysis, const Salt& salt,
                              std::string_view created_at) {
  if (analysis.word_count == 0 || analysis.clc.n == 0 || analysis.histogram.total == 0 ||
      !std::isfinite(analysis.clc.rho)) {
    throw Error(ErrorCode::kIncompleteAnalysis,
                "analysis has no words, pairs or intervals");
  }
  EvidenceRecord r;
  r.writer_id = analysis.writer_id;
  r.session_id = analysis.session_id;
  r.word_count = analysis.word_count;
  r.clc_rounded = round_to(analysis.clc.rho, 2);
  r.verdict = analysis.clc.verdict;
  r.pair_count = analysis.clc.n;
  r.histogram_bin_ms = analysis.histogram.bin_width_ms;
  r.iki_histogram = analysis.histogram.counts;
  r.phases = analysis.phases;
  r.phases.planning_pause_cv = round_to(r.phases.planning_pause_cv, 4);
  r.revisions = analysis.revisions;
  r.bursts = analysis.burst_summary;
  r.bursts.mean_length = round_to(r.bursts.mean_length, 4);
  r.bursts.length_cv = round_to(r.bursts.length_cv, 4);
  r.salt = salt;
  r.created_at = created_at;
  return r;
}

json evidence_to_json(const EvidenceRecord& r) {
  json counts = json::object();
  for (const auto& [bin, count] : r.iki_histogram) counts[std::to_string(bin)] = count;
  json j;
  j["schema"] = kEvidenceSchema;
  j["writer"] = r.writer_id;
  j["session"] = r.session_id;
  j["word_count"] = r.word_count;
  j["clc_rounded"] = r.clc_rounded;
  j["verdict"] = verdict_name(r.verdict);
  j["pair_count"] = r.pair_count;
  j["iki_histogram"] = {{"bin_width_ms", r.histogram_bin_ms}, {"counts", counts}};
  j["phase_summary"] = {{"planning", totals_json(r.phases.planning)},
                        {"translating", totals_json(r.phases.translating)},
                        {"revising", totals_json(r.phases.revising)},
                        {"planning_pause_cv", r.phases.planning_pause_cv}};
  j["revision_summary"] = {{"revision_episodes", r.revisions.revision_episodes},
                           {"deleted_chars", r.revisions.deleted_chars},
                           {"single_char_typo_fixes", r.revisions.single_char_typo_fixes},
                           {"paste_flags", r.revisions.paste_flags}};
  j["burst_summary"] = {{"count", r.bursts.count},
                        {"mean_length", r.bursts.mean_length},
                        {"length_cv", r.bursts.length_cv}};
  j["salt"] = to_hex(r.salt);
  j["created_at"] = r.created_at;
  return j;
}

EvidenceRecord evidence_from_json(const json& j) {
  if (!is_content_free(j)) {
    throw Error(ErrorCode::kMalformedRecord, "evidence: unexpected or missing fields");
  }
  try {
    if (j.at("schema").get<std::string>() != kEvidenceSchema) {
      throw Error(ErrorCode::kMalformedRecord, "evidence: unsupported schema");
    }
    EvidenceRecord r;
    r.writer_id = j.at("writer").get<std::string>();
    r.session_id = j.at("session").get<std::string>();
    r.word_count = natural(j.at("word_count"));
    r.clc_rounded = j.at("clc_rounded").get<double>();
    const auto verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (!verdict) throw Error(ErrorCode::kMalformedRecord, "evidence: unknown verdict");
    r.verdict = *verdict;
    r.pair_count = natural(j.at("pair_count"));
    const json& h = j.at("iki_histogram");
    r.histogram_bin_ms = static_cast<int>(natural(h.at("bin_width_ms")));
    for (const auto& [bin, count] : h.at("counts").items()) {
      std::int64_t b = 0;
      const auto res = std::from_chars(bin.data(), bin.data() + bin.size(), b);
      if (res.ec != std::errc() || res.ptr != bin.data() + bin.size() ||
          std::to_string(b) != bin) {
        throw Error(ErrorCode::kMalformedRecord, "evidence: bad histogram bin");
      }
      r.iki_histogram[b] = natural(count);
    }
    const json& ph = j.at("phase_summary");
    r.phases.planning = totals_from(ph.at("planning"));
    r.phases.translating = totals_from(ph.at("translating"));
    r.phases.revising = totals_from(ph.at("revising"));
    r.phases.planning_pause_cv = ph.at("planning_pause_cv").get<double>();
    const json& rs = j.at("revision_summary");
    r.revisions.revision_episodes = natural(rs.at("revision_episodes"));
    r.revisions.deleted_chars = natural(rs.at("deleted_chars"));
    r.revisions.single_char_typo_fixes = natural(rs.at("single_char_typo_fixes"));
    r.revisions.paste_flags = natural(rs.at("paste_flags"));
    const json& bs = j.at("burst_summary");
    r.bursts.count = natural(bs.at("count"));
    r.bursts.mean_length = bs.at("mean_length").get<double>();
    r.bursts.length_cv = bs.at("length_cv").get<double>();
    const std::string salt = j.at("salt").get<std::string>();
    r.salt = parse_salt_hex(salt);
    if (to_hex(r.salt) != salt) {
      throw Error(ErrorCode::kMalformedRecord, "evidence: salt must be lowercase hex");
    }
    r.created_at = j.at("created_at").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedRecord, std::string("evidence: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidParameters) {
      throw Error(ErrorCode::kMalformedRecord, std::string("evidence: ") + e.what());
    }
    throw;
  }
}

EvidenceRecord parse_evidence(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedRecord, std::string("evidence: ") + e.what());
  }
  return evidence_from_json(j);
}

bool is_content_free(const json& j) {
  if (!has_exact_keys(j, {"schema", "writer", "session", "word_count", "clc_rounded",
                          "verdict", "pair_count", "iki_histogram", "phase_summary",
                          "revision_summary", "burst_summary", "salt", "created_at"})) {
    return false;
  }
  static const std::set<std::string> kStringFields = {"schema", "writer", "session",
                                                      "verdict", "salt", "created_at"};
  for (const auto& [key, value] : j.items()) {
    if (value.is_string() != (kStringFields.count(key) > 0)) return false;
  }
  const json& h = j["iki_histogram"];
  const json& ph = j["phase_summary"];
  if (!has_exact_keys(h, {"bin_width_ms", "counts"}) || !h["counts"].is_object() ||
      !has_exact_keys(ph, {"planning", "translating", "revising", "planning_pause_cv"}) ||
      !has_exact_keys(j["revision_summary"], {"revision_episodes", "deleted_chars",
                                              "single_char_typo_fixes", "paste_flags"}) ||
      !has_exact_keys(j["burst_summary"], {"count", "mean_length", "length_cv"})) {
    return false;
  }
  for (const char* phase : {"planning", "translating", "revising"}) {
    if (!has_exact_keys(ph[phase], {"count", "total_ms"})) return false;
  }
  // Below the top level only numbers may appear as leaves.
  for (const char* key : {"iki_histogram", "phase_summary", "revision_summary",
                          "burst_summary"}) {
    for (const auto& item : j[key].flatten()) {
      if (!item.is_number()) return false;
    }
  }
  return true;
}

std::string canonical_json(const json& j) {
  std::string out;
  write_canonical(j, out);
  return out;
}

std::string canonical_serialization(const EvidenceRecord& record) {
  return canonical_json(evidence_to_json(record));
}

Digest commit(const EvidenceRecord& record) {
  return sha256(canonical_serialization(record));
}

bool verify_commitment(const EvidenceRecord& record, const Digest& digest) {
  return commit(record) == digest;
}

// ---------------------------------------------------------------------------

BaselineProfile calibrate_baseline(std::span<const EvidenceRecord> records) {
  if (records.size() < kMinEnrollmentSessions) {
    throw Error(ErrorCode::kTooFewSessions, "baseline needs at least 3 sessions");
  }
  BaselineProfile b;
  b.writer_id = records.front().writer_id;
  b.sessions_observed = records.size();
  std::vector<double> clc, burst, rate;
  for (const EvidenceRecord& r : records) {
    if (r.writer_id != b.writer_id) {
      throw Error(ErrorCode::kInvalidParameters, "baseline records span several writers");
    }
    clc.push_back(r.clc_rounded);
    burst.push_back(r.bursts.mean_length);
    rate.push_back(r.revision_rate());
  }
  b.clc_mean = mean_of(clc);
  b.clc_variance = sample_variance(clc, b.clc_mean);
  b.burst_length_mean = mean_of(burst);
  b.burst_length_variance = sample_variance(burst, b.burst_length_mean);
  b.revision_rate_mean = mean_of(rate);
  b.revision_rate_variance = sample_variance(rate, b.revision_rate_mean);
  return b;
}

std::string baseline_to_json(const BaselineProfile& b) {
  ordered_json j;
  j["schema"] = kBaselineSchema;
  j["writer"] = b.writer_id;
  j["sessions_observed"] = b.sessions_observed;
  j["clc_mean"] = b.clc_mean;
  j["clc_variance"] = b.clc_variance;
  j["burst_length_mean"] = b.burst_length_mean;
  j["burst_length_variance"] = b.burst_length_variance;
  j["revision_rate_mean"] = b.revision_rate_mean;
  j["revision_rate_variance"] = b.revision_rate_variance;
  return j.dump(2) + "\n";
}

BaselineProfile parse_baseline(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("schema").get<std::string>() != kBaselineSchema) {
      throw Error(ErrorCode::kMalformedRecord, "baseline: unsupported schema");
    }
    BaselineProfile b;
    b.writer_id = j.at("writer").get<std::string>();
    b.sessions_observed = j.at("sessions_observed").get<std::size_t>();
    b.clc_mean = j.at("clc_mean").get<double>();
    b.clc_variance = j.at("clc_variance").get<double>();
    b.burst_length_mean = j.at("burst_length_mean").get<double>();
    b.burst_length_variance = j.at("burst_length_variance").get<double>();
    b.revision_rate_mean = j.at("revision_rate_mean").get<double>();
    b.revision_rate_variance = j.at("revision_rate_variance").get<double>();
    if (b.sessions_observed < 1 || b.clc_variance < 0.0 ||
        b.burst_length_variance < 0.0 || b.revision_rate_variance < 0.0) {
      throw Error(ErrorCode::kMalformedRecord, "baseline: invalid statistics");
    }
    return b;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedRecord, std::string("baseline: ") + e.what());
  }
}

const VarianceInterval& PopulationNorms::interval_for(std::size_t k) const {
  if (variance_ratio.empty() || k < 2) {
    throw Error(ErrorCode::kInvalidParameters, "no variance interval for k");
  }
  return variance_ratio[std::min(k - 2, variance_ratio.size() - 1)];
}

const PopulationNorms& default_population_norms() {
  // calibrate_population_norms on simulate_writer_records(
  //     kNormCalibrationWriters, kNormCalibrationSessions,
  //     kNormCalibrationSeed, SessionKind::kComposition) with default settings.
  static const PopulationNorms norms = [] {
    PopulationNorms n;
    n.clc_within_writer_variance = 0.0035465;
    n.variance_ratio = {{0.0, 8.81151},       {0.00939895, 6.11928},
                        {0.0258471, 5.04181}, {0.0478218, 4.35218},
                        {0.0721463, 4.21486}, {0.0791794, 3.98432},
                        {0.0800589, 3.83176}, {0.0914831, 3.55619},
                        {0.11973, 3.55398}};
    n.min_revision_rate = 0.424833;
    n.min_burst_length_cv = 0.776392;
    n.min_planning_pause_cv = 0.340457;
    return n;
  }();
  return norms;
}

PopulationNorms calibrate_population_norms(
    const std::vector<std::vector<EvidenceRecord>>& writers,
    const NormCalibration& calibration) {
  if (calibration.max_sessions < 2 || !(calibration.variance_tail > 0.0) ||
      !(calibration.variance_tail < 1.0) || !(calibration.floor_quantile > 0.0) ||
      !(calibration.floor_quantile < 1.0)) {
    throw Error(ErrorCode::kInvalidParameters, "invalid norm calibration settings");
  }
  PopulationNorms norms;
  norms.max_baseline_drift_z = calibration.max_baseline_drift_z;

  double pooled_ss = 0.0;
  std::size_t pooled_df = 0;
  std::size_t longest = 0;
  for (const auto& records : writers) {
    longest = std::max(longest, records.size());
    if (records.size() < 2) continue;
    std::vector<double> clc;
    for (const auto& r : records) clc.push_back(r.clc_rounded);
    pooled_ss += sample_variance(clc, mean_of(clc)) * static_cast<double>(clc.size() - 1);
    pooled_df += clc.size() - 1;
  }
  if (pooled_df == 0) {
    throw Error(ErrorCode::kTooFewSessions, "calibration needs writers with >= 2 sessions");
  }
  norms.clc_within_writer_variance = pooled_ss / static_cast<double>(pooled_df);

  // Contiguous windows of k records from each writer.
  const std::size_t max_k = std::min(calibration.max_sessions, longest);
  std::vector<double> revision, burst_cv, plan_cv;
  for (std::size_t k = 2; k <= max_k; ++k) {
    std::vector<double> ratios;
    for (const auto& records : writers) {
      for (std::size_t start = 0; start + k <= records.size(); ++start) {
        std::vector<double> clc;
        double rev = 0.0, bcv = 0.0, pcv = 0.0;
        for (std::size_t i = start; i < start + k; ++i) {
          clc.push_back(records[i].clc_rounded);
          rev += records[i].revision_rate();
          bcv += records[i].bursts.length_cv;
          pcv += records[i].phases.planning_pause_cv;
        }
        ratios.push_back(sample_variance(clc, mean_of(clc)) /
                         norms.clc_within_writer_variance);
        if (k == 2) {
          revision.push_back(rev / 2.0);
          burst_cv.push_back(bcv / 2.0);
          plan_cv.push_back(pcv / 2.0);
        }
      }
    }
    norms.variance_ratio.push_back(
        {quantile(ratios, calibration.variance_tail / 2.0),
         quantile(ratios, 1.0 - calibration.variance_tail / 2.0)});
  }
  norms.min_revision_rate = quantile(revision, calibration.floor_quantile);
  norms.min_burst_length_cv = quantile(burst_cv, calibration.floor_quantile);
  norms.min_planning_pause_cv = quantile(plan_cv, calibration.floor_quantile);
  return norms;
}

ConsistencyResult consistency_check(std::span<const EvidenceRecord> records,
                                    const BaselineProfile* baseline,
                                    const PopulationNorms& norms) {
  if (records.size() < 2) {
    throw Error(ErrorCode::kTooFewSessions, "consistency check needs at least 2 records");
  }
  const std::string& writer = records.front().writer_id;
  for (const EvidenceRecord& r : records) {
    if (r.writer_id != writer) {
      throw Error(ErrorCode::kInvalidParameters, "records span several writers");
    }
  }
  if (baseline != nullptr && baseline->writer_id != writer) {
    throw Error(ErrorCode::kInvalidParameters, "baseline belongs to another writer");
  }
  ConsistencyResult out;
  const std::size_t k = records.size();
  out.sessions = k;
  std::vector<double> clc;
  for (const EvidenceRecord& r : records) {
    clc.push_back(r.clc_rounded);
    out.revision_rate += r.revision_rate();
    out.burst_length_cv += r.bursts.length_cv;
    out.planning_pause_cv += r.phases.planning_pause_cv;
  }
  out.revision_rate /= static_cast<double>(k);
  out.burst_length_cv /= static_cast<double>(k);
  out.planning_pause_cv /= static_cast<double>(k);
  out.clc_mean = mean_of(clc);
  out.clc_variance = sample_variance(clc, out.clc_mean);
  out.variance_ratio = out.clc_variance / norms.clc_within_writer_variance;
  out.interval = norms.interval_for(k);

  if (out.variance_ratio < out.interval.lo) out.reasons.push_back("clc_variance_low");
  if (out.variance_ratio > out.interval.hi) out.reasons.push_back("clc_variance_high");
  if (out.revision_rate < norms.min_revision_rate) {
    out.reasons.push_back("revision_rate_low");
  }
  if (out.burst_length_cv < norms.min_burst_length_cv) {
    out.reasons.push_back("burst_uniformity");
  }
  if (out.planning_pause_cv < norms.min_planning_pause_cv) {
    out.reasons.push_back("pause_regularity");
  }
  if (baseline != nullptr) {
    const double var = norms.clc_within_writer_variance;
    const double se = std::sqrt(var / static_cast<double>(k) +
                                var / static_cast<double>(baseline->sessions_observed));
    out.baseline_drift_z = (out.clc_mean - baseline->clc_mean) / se;
    if (std::abs(*out.baseline_drift_z) > norms.max_baseline_drift_z) {
      out.reasons.push_back("baseline_drift");
    }
  }
  out.flagged = !out.reasons.empty();
  return out;
}

std::string consistency_to_json(const ConsistencyResult& r) {
  ordered_json j;
  j["result"] = r.flagged ? "flag" : "pass";
  j["sessions"] = r.sessions;
  j["clc_mean"] = r.clc_mean;
  j["clc_variance"] = r.clc_variance;
  j["variance_ratio"] = r.variance_ratio;
  j["variance_interval"] = {r.interval.lo, r.interval.hi};
  j["revision_rate_per_100_words"] = r.revision_rate;
  j["burst_length_cv"] = r.burst_length_cv;
  j["planning_pause_cv"] = r.planning_pause_cv;
  j["baseline_drift_z"] =
      r.baseline_drift_z ? ordered_json(*r.baseline_drift_z) : ordered_json(nullptr);
  j["reasons"] = r.reasons;
  return j.dump(2) + "\n";
}

std::vector<std::vector<EvidenceRecord>> simulate_writer_records(
    std::size_t writers, std::size_t sessions, std::uint64_t seed, SessionKind kind,
    Attack attack, std::size_t words, const PopulationParams& params) {
  const NgramModel& model = reference_model();
  std::vector<std::vector<EvidenceRecord>> out(writers);
  for (std::size_t w = 0; w < writers; ++w) {
    const WriterProfile writer = draw_writer(derive_seed(seed, w), params);
    for (std::size_t s = 0; s < sessions; ++s) {
      const SynthConfig config = session_config(writer, kind, s + 1, words, attack, params);
      const SessionAnalysis analysis =
          analyze_session(synthesize(kind, config, model).session, &model);
      Rng rng(derive_seed(config.seed, 0x5A17));
      Salt salt;
      for (auto& b : salt) b = static_cast<std::uint8_t>(rng.next() & 0xFF);
      out[w].push_back(build_evidence(analysis, salt));
    }
  }
  return out;
}

}  // namespace cogsig
