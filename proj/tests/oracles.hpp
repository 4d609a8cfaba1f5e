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

// Independent reference implementations used by the tests. None of these
// share code with the library beyond the public data types.

#ifndef COGSIG_TESTS_ORACLES_HPP
#define COGSIG_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cogsig/event_log.hpp"

namespace cogsig::oracle {

// Add-alpha bigram-or-longer probability by scanning the token stream.
// Context positions before the stream start are the empty string.
inline double ngram_probability(const std::vector<std::string>& stream, int k,
                                double alpha, const std::vector<std::string>& context,
                                const std::string& word) {
  std::map<std::string, int> vocab;
  for (const auto& w : stream) vocab[w] = 1;
  const auto v = static_cast<double>(vocab.size());
  auto ctx_at = [&](std::size_t i, int j) -> std::string {
    // j-th word before position i (1-based).
    return i >= static_cast<std::size_t>(j) ? stream[i - j] : std::string();
  };
  double c_ctx = 0.0, c_ctx_w = 0.0;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    bool match = true;
    for (int j = 1; j <= k; ++j) {
      const std::string want = context.size() >= static_cast<std::size_t>(j)
                                   ? context[context.size() - j]
                                   : std::string();
      if (ctx_at(i, j) != want) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    c_ctx += 1.0;
    if (stream[i] == word) c_ctx_w += 1.0;
  }
  if (c_ctx == 0.0) return 1.0 / v;
  return (c_ctx_w + alpha) / (c_ctx + alpha * v);
}

// Spearman rho as the Pearson correlation of mid-ranks, with ranks found by
// counting (O(n^2)).
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  auto ranks = [n](const std::vector<double>& v) {
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
      double less = 0.0, equal = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        less += v[j] < v[i];
        equal += v[j] == v[i];
      }
      r[i] = less + (equal + 1.0) / 2.0;
    }
    return r;
  };
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

// Plug-in entropy of raw counts plus (K - 1) / (2 N ln 2).
inline double miller_madow(const std::vector<double>& counts) {
  double n = 0.0, k = 0.0;
  for (double c : counts) {
    n += c;
    k += c > 0.0;
  }
  double h = 0.0;
  for (double c : counts) {
    if (c > 0.0) h -= (c / n) * std::log(c / n) / std::log(2.0);
  }
  return h + (k - 1.0) / (2.0 * n * std::log(2.0));
}

// Series with power spectrum proportional to f^-beta, built by summing
// sinusoids with random phases at every Fourier frequency.
inline std::vector<double> power_law_series(std::size_t n, double beta,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 1; k <= n / 2; ++k) {
    const double f = static_cast<double>(k) / static_cast<double>(n);
    const double amp = std::pow(f, -beta / 2.0);
    const double ph = phase(rng);
    for (std::size_t t = 0; t < n; ++t) {
      out[t] += amp * std::cos(2.0 * std::numbers::pi * f * static_cast<double>(t) + ph);
    }
  }
  return out;
}

// Replays edits on a plain std::u32string.
inline std::u32string replay(const Session& s) {
  std::u32string text;
  for (const auto& e : s.events) {
    switch (e.kind) {
      case EventKind::kInsert:
        text.insert(text.begin() + static_cast<std::ptrdiff_t>(e.pos), *e.payload);
        break;
      case EventKind::kEnter:
        text.insert(text.begin() + static_cast<std::ptrdiff_t>(e.pos), U'\n');
        break;
      case EventKind::kBackspace:
        text.erase(e.pos - 1, 1);
        break;
      case EventKind::kDelete:
        text.erase(e.pos, 1);
        break;
      case EventKind::kCursorMove:
        break;
    }
  }
  return text;
}

// One-sided Fisher-z test power by simulation: bivariate normal samples
// with correlation rho1, rejecting when atanh(r) exceeds
// atanh(rho0) + z_{1-alpha} / sqrt(n - 3).
inline double monte_carlo_power(std::size_t n, double rho1, double rho0, double alpha,
                                std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  // Critical value by bisection on the standard normal CDF.
  double lo = 0.0, hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (0.5 * std::erfc(-mid / std::sqrt(2.0)) < 1.0 - alpha ? lo : hi) = mid;
  }
  const double crit = std::atanh(rho0) + lo / std::sqrt(static_cast<double>(n) - 3.0);
  const double c = std::sqrt(1.0 - rho1 * rho1);
  std::size_t rejections = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = normal(rng);
      const double y = rho1 * x + c * normal(rng);
      sx += x;
      sy += y;
      sxx += x * x;
      syy += y * y;
      sxy += x * y;
    }
    const double m = static_cast<double>(n);
    const double r = (sxy - sx * sy / m) /
                     std::sqrt((sxx - sx * sx / m) * (syy - sy * sy / m));
    rejections += std::atanh(r) > crit;
  }
  return static_cast<double>(rejections) / static_cast<double>(trials);
}

// Accuracy of the likelihood-ratio rule between two equally likely normal
// classes, by simulation.
inline double bayes_accuracy(double mean1, double sd1, double mean0, double sd0,
                             std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto log_density = [](double x, double m, double s) {
    const double z = (x - m) / s;
    return -0.5 * z * z - std::log(s);
  };
  std::size_t correct = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double a = mean1 + sd1 * normal(rng);
    correct += log_density(a, mean1, sd1) >= log_density(a, mean0, sd0);
    const double b = mean0 + sd0 * normal(rng);
    correct += log_density(b, mean0, sd0) > log_density(b, mean1, sd1);
  }
  return static_cast<double>(correct) / (2.0 * static_cast<double>(samples));
}

}  // namespace cogsig::oracle

#endif  // COGSIG_TESTS_ORACLES_HPP
