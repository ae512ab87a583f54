// Copyright 2026 The dpts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace dpts::random {

// Stream tags for deriving independent substreams from one master seed.
// Every consumer of randomness owns a (tag, index) pair, so adding or
// reordering parallel work never changes the draws another consumer sees.
inline constexpr std::uint64_t kSubsampleStream = 0x73756273616d70ULL;
inline constexpr std::uint64_t kNoiseStream = 0x6e6f697365ULL;
inline constexpr std::uint64_t kRepeatStream = 0x726570656174ULL;
inline constexpr std::uint64_t kSynthStream = 0x73796e7468ULL;
inline constexpr std::uint64_t kCellStream = 0x63656c6cULL;
inline constexpr std::uint64_t kTraceStream = 0x7472616365ULL;

std::uint64_t splitmix64(std::uint64_t state);

/// Counter-based substream derivation: mixes (master, tag, index) into a
/// fresh seed. Collision-free for practical purposes and stable across
/// platforms and thread counts.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_tag,
                          std::uint64_t index = 0);

/// Deterministic random stream. Gaussian draws use Box-Muller on explicit
/// uniforms so the sequence is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in (0, 1); safe as a log() argument.
  double uniform_open();
  bool bernoulli(double p);
  /// Standard normal draw.
  double gaussian();

 private:
  std::mt19937_64 engine_;
};

/// Injection point for the additive noise of a mechanism. Production code
/// uses SeededNoise; tests may substitute ZeroNoise to freeze the pipeline.
class NoiseSource {
 public:
  virtual ~NoiseSource() = default;
  /// One draw from N(0, sigma^2).
  virtual double sample(double sigma) = 0;
};

class SeededNoise final : public NoiseSource {
 public:
  explicit SeededNoise(std::uint64_t seed) : rng_(seed) {}
  double sample(double sigma) override { return sigma * rng_.gaussian(); }

 private:
  Rng rng_;
};

class ZeroNoise final : public NoiseSource {
 public:
  double sample(double /*sigma*/) override { return 0.0; }
};

}  // namespace dpts::random
