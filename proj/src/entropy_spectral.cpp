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

#include "cogsig/entropy_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "cogsig/error.hpp"

namespace cogsig {

void IkiHistogram::add(Millis iki) {
  ++counts[quantize(iki, bin_width_ms) / bin_width_ms];
  ++total;
}

void IkiHistogram::merge(const IkiHistogram& other) {
  if (other.bin_width_ms != bin_width_ms) {
    throw Error(ErrorCode::kInvalidParameters, "histogram bin widths differ");
  }
  for (const auto& [bin, count] : other.counts) counts[bin] += count;
  total += other.total;
}

IkiHistogram make_histogram(std::span<const Millis> ikis, int bin_width_ms) {
  IkiHistogram hist;
  hist.bin_width_ms = bin_width_ms;
  for (Millis v : ikis) hist.add(v);
  return hist;
}

double plugin_entropy(const IkiHistogram& hist) {
  if (hist.total == 0) throw Error(ErrorCode::kEmptyHistogram, "empty histogram");
  const auto n = static_cast<double>(hist.total);
  double h = 0.0;
  for (const auto& [bin, count] : hist.counts) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / n;
    h -= p * std::log2(p);
  }
  return h;
}

double iki_entropy(const IkiHistogram& hist) {
  const double h = plugin_entropy(hist);
  std::size_t occupied = 0;
  for (const auto& [bin, count] : hist.counts) occupied += count > 0;
  const auto n = static_cast<double>(hist.total);
  return h + static_cast<double>(occupied - 1) / (2.0 * n * std::numbers::ln2);
}

LeakageEstimate leakage_estimate(std::span<const WriterIkis> writers,
                                 int resolution_ms) {
  if (resolution_ms < 1) {
    throw Error(ErrorCode::kInvalidResolution, "resolution must be at least 1 ms");
  }
  std::unordered_map<std::string, IkiHistogram> per_writer;
  std::vector<std::string> order;
  IkiHistogram pooled;
  pooled.bin_width_ms = resolution_ms;
  std::size_t groups = 0;
  for (const WriterIkis& w : writers) {
    ++groups;
    auto [it, inserted] = per_writer.try_emplace(w.writer_id);
    if (inserted) {
      it->second.bin_width_ms = resolution_ms;
      order.push_back(w.writer_id);
    }
    for (Millis v : w.ikis) {
      it->second.add(v);
      pooled.add(v);
    }
  }
  if (groups < 2) throw Error(ErrorCode::kTooFewSessions, "need at least 2 sessions");

  LeakageEstimate est;
  est.resolution_ms = resolution_ms;
  est.pooled_entropy_bits = iki_entropy(pooled);
  double within = 0.0;
  for (const std::string& id : order) within += iki_entropy(per_writer[id]);
  est.mean_within_writer_bits = within / static_cast<double>(order.size());
  est.mi_proxy_bits = est.pooled_entropy_bits - est.mean_within_writer_bits;
  return est;
}

LeakageEstimate leakage_estimate(std::span<const Session> sessions,
                                 int resolution_ms) {
  std::vector<WriterIkis> writers;
  writers.reserve(sessions.size());
  for (const Session& s : sessions) {
    writers.push_back({s.writer_id, s.events.size() >= 2 ? compute_ikis(s).values
                                                          : std::vector<Millis>{}});
  }
  return leakage_estimate(writers, resolution_ms);
}

double spectral_slope(std::span<const double> series) {
  if (series.size() < kMinSpectralLength) {
    throw Error(ErrorCode::kSeriesTooShort,
                "spectral slope needs at least 256 samples");
  }
  constexpr std::size_t w = kSpectralWindow;
  constexpr std::size_t half = w / 2;
  constexpr double two_pi = 2.0 * std::numbers::pi;

  std::vector<double> cos_table(w), sin_table(w);
  for (std::size_t i = 0; i < w; ++i) {
    cos_table[i] = std::cos(two_pi * static_cast<double>(i) / w);
    sin_table[i] = std::sin(two_pi * static_cast<double>(i) / w);
  }

  std::vector<double> power(half + 1, 0.0);
  std::vector<double> segment(w);
  std::size_t windows = 0;
  for (std::size_t start = 0; start + w <= series.size(); start += half) {
    double mean = 0.0;
    for (std::size_t i = 0; i < w; ++i) mean += series[start + i];
    mean /= static_cast<double>(w);
    for (std::size_t i = 0; i < w; ++i) segment[i] = series[start + i] - mean;
    for (std::size_t k = 1; k <= half; ++k) {
      double re = 0.0, im = 0.0;
      for (std::size_t i = 0; i < w; ++i) {
        const std::size_t idx = (k * i) % w;
        re += segment[i] * cos_table[idx];
        im -= segment[i] * sin_table[idx];
      }
      power[k] += re * re + im * im;
    }
    ++windows;
  }

  // Middle decade of [1/w, 1/2] in log frequency.
  const double lo_f = std::log10(1.0 / w);
  const double hi_f = std::log10(0.5);
  const double center = 0.5 * (lo_f + hi_f);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t used = 0;
  double total_power = 0.0;
  for (std::size_t k = 1; k <= half; ++k) total_power += power[k];
  double scale = 0.0;
  for (double v : series) scale = std::max(scale, std::abs(v));
  const double noise_floor = 1e-24 * scale * scale * w * w * static_cast<double>(windows);
  if (!(total_power > noise_floor)) {
    throw Error(ErrorCode::kDegenerateSeries, "series has no variation");
  }
  for (std::size_t k = 1; k <= half; ++k) {
    const double lf = std::log10(static_cast<double>(k) / w);
    if (lf < center - 0.5 || lf > center + 0.5) continue;
    if (!(power[k] > 0.0)) {
      throw Error(ErrorCode::kDegenerateSeries, "zero power inside the fit band");
    }
    const double lp = std::log10(power[k] / static_cast<double>(windows));
    sx += lf;
    sy += lp;
    sxx += lf * lf;
    sxy += lf * lp;
    ++used;
  }
  const auto n = static_cast<double>(used);
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace cogsig
