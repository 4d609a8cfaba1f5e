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

// Seed-stable random numbers. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; every distribution is implemented here
// so results do not depend on the standard library's distribution code.

#ifndef COGSIG_RNG_HPP
#define COGSIG_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace cogsig {

// splitmix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix_seed(mix_seed(seed) ^ (stream * 0xD1B54A32D192ED03ull));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(
                    static_cast<unsigned __int128>(engine_()) * span >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller, one variate per call.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  double lognormal(double median, double sigma) {
    return median * std::exp(sigma * normal());
  }

  // Log-logistic by inversion: median * (u / (1 - u))^(1 / shape).
  double loglogistic(double median, double shape) {
    const double u = uniform();
    return median * std::pow(u / (1.0 - u), 1.0 / shape);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cogsig

#endif  // COGSIG_RNG_HPP
