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

#ifndef COGSIG_ENTROPY_SPECTRAL_HPP
#define COGSIG_ENTROPY_SPECTRAL_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cogsig/event_log.hpp"

namespace cogsig {

// Population IKI entropy reported for a large transcription dataset at full
// clock resolution. Used as a reference constant only.
inline constexpr double kPopulationEntropyBits = 4.12;

struct IkiHistogram {
  int bin_width_ms = kDefaultResolutionMs;
  // bin index = quantize(iki, bin_width_ms) / bin_width_ms
  std::map<std::int64_t, std::uint64_t> counts;
  std::uint64_t total = 0;

  void add(Millis iki);
  void merge(const IkiHistogram& other);
};

IkiHistogram make_histogram(std::span<const Millis> ikis, int bin_width_ms);

double plugin_entropy(const IkiHistogram& hist);

// Plug-in Shannon entropy plus the Miller-Madow term (K - 1) / (2 N ln 2).
double iki_entropy(const IkiHistogram& hist);

struct LeakageEstimate {
  int resolution_ms = 1;
  double pooled_entropy_bits = 0.0;
  double mean_within_writer_bits = 0.0;
  // pooled - mean within-writer
  double mi_proxy_bits = 0.0;
};

// Sessions are grouped by writer id for the within-writer term.
LeakageEstimate leakage_estimate(std::span<const Session> sessions,
                                 int resolution_ms);

struct WriterIkis {
  std::string writer_id;
  std::vector<Millis> ikis;
};

LeakageEstimate leakage_estimate(std::span<const WriterIkis> writers,
                                 int resolution_ms);

inline constexpr std::size_t kSpectralWindow = 128;
inline constexpr std::size_t kMinSpectralLength = 256;

// Log-log slope of the Welch-averaged periodogram over the middle decade of
// frequencies: 128-sample windows, 50% overlap, per-window mean removal,
// rectangular taper.
double spectral_slope(std::span<const double> series);

}  // namespace cogsig

#endif  // COGSIG_ENTROPY_SPECTRAL_HPP
