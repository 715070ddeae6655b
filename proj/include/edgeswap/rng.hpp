// Copyright 2026 The edgeswap Authors.
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

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <random>

namespace edgeswap {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Source of the random choices made by samplers and couplings.
///
/// Every randomized routine in the library pulls its randomness through this
/// interface, one call per decision, in a documented order. Simulation uses
/// `Rng`; exact-law tests substitute a source that walks every branch.
class DrawSource {
 public:
  virtual ~DrawSource() = default;
  /// Uniform integer in [0, n). n must be positive.
  virtual std::size_t uniform_index(std::size_t n) = 0;
  /// True with probability p, p in [0, 1].
  virtual bool bernoulli(const Rational& p) = 0;
};

/// Seeded, splittable pseudo-random generator (mt19937_64 underneath).
///
/// `split(k)` derives an independent child stream from the construction seed
/// and k, so parallel tasks get reproducible streams regardless of scheduling.
class Rng final : public DrawSource {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {
    std::seed_seq seq{lo(seed), hi(seed), lo(stream), hi(stream)};
    engine_.seed(seq);
  }

  std::uint64_t seed() const noexcept { return seed_; }

  Rng split(std::uint64_t k) const {
    // Child streams hash (seed, stream, k) through seed_seq again.
    std::seed_seq seq{lo(seed_), hi(seed_), lo(stream_), hi(stream_), lo(k), hi(k), 0x5eedu};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return Rng(seed_, (std::uint64_t{out[1]} << 32) | out[0]);
  }

  std::size_t uniform_index(std::size_t n) override {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

  bool bernoulli(const Rational& p) override { return uniform01() < p.get_d(); }

  double uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  static std::uint32_t lo(std::uint64_t v) { return static_cast<std::uint32_t>(v); }
  static std::uint32_t hi(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace edgeswap
