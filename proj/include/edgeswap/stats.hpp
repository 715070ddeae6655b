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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "edgeswap/chain.hpp"
#include "edgeswap/graph.hpp"
#include "edgeswap/rng.hpp"
#include "edgeswap/tree.hpp"

namespace edgeswap {

/// Exact probability law over a fixed, sorted universe of trees.
struct TreeDistribution {
  std::vector<TreeKey> support;
  std::vector<Rational> mass;

  static TreeDistribution uniform(std::vector<TreeKey> support);
  /// Empirical law: counts[i] / sum(counts).
  static TreeDistribution from_counts(std::vector<TreeKey> support, std::span<const std::uint64_t> counts);
  static TreeDistribution point(std::vector<TreeKey> support, std::size_t index);
};

/// Half the L1 distance. Throws ContractError on different universes.
Rational variation_distance(const TreeDistribution& a, const TreeDistribution& b);

/// Half the L1 distance between two count histograms, each normalized by its total.
double histogram_distance(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// |t1 \ t2| for canonical keys. Throws ContractError on a size mismatch.
std::size_t edge_distance(std::span<const EdgeId> t1, std::span<const EdgeId> t2);

using TreeSampler = std::function<TreeKey(DrawSource&)>;

struct SimpleVDConfig {
  int references = 20;
  double tolerance = 0.05;  // stop once the two histograms agree this well
  double floor = 0.1;       // distances below are reported as "< floor"
  std::uint64_t initial_samples = 1000;
  std::uint64_t max_samples = 10'000'000;
  Variant variant = Variant::fast;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// A reference tree with its stationary edge-distance histogram.
struct SimpleVDReference {
  TreeKey tree;
  std::vector<std::uint64_t> pi;
  bool capped = false;
};

struct ReferenceVD {
  int index = 0;
  double simple_vd = 0.0;
  std::uint64_t samples = 0;  // per histogram for the chain side
  bool capped = false;
};

struct VDEstimate {
  std::uint64_t t = 0;
  double epsilon_hat = 0.0;
  bool below_floor = false;
  bool capped = false;
  std::vector<ReferenceVD> per_reference;
};

/// Draws the random-walk reference trees and their stationary histograms.
std::vector<SimpleVDReference> prepare_references(const Graph& g, const Rng& rng, const SimpleVDConfig& cfg);

/// Edge-distance-histogram estimate of the distance to uniform after t
/// chain steps from the initial tree; the maximum over the references.
VDEstimate estimate_simple_vd(const Graph& g, std::uint64_t t, const Rng& rng, const SimpleVDConfig& cfg,
                              const std::vector<SimpleVDReference>& refs);
VDEstimate estimate_simple_vd(const Graph& g, std::uint64_t t, const Rng& rng, const SimpleVDConfig& cfg = {});

/// CSV columns: graph_id,V,E,t,reference,simple_vd,epsilon_hat,samples,capped
std::string vd_estimate_csv(const std::string& graph_id, const Graph& g, const VDEstimate& est, double floor,
                            bool header = true);

/// Draws `samples` trees and returns the exact variation distance of their
/// empirical law to uniform over all spanning trees of g.
/// Throws TooLarge when the trees cannot be enumerated.
double exact_empirical_vd(const Graph& g, const TreeSampler& sampler, std::uint64_t samples, DrawSource& draws);

/// Same, against a precomputed support (sorted) to avoid re-enumeration.
double exact_empirical_vd(const std::vector<TreeKey>& support, const TreeSampler& sampler, std::uint64_t samples,
                          DrawSource& draws);

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
};

/// Pearson goodness of fit of observed counts to expected probabilities.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed, std::span<const double> expected);

/// Index of `key` in a sorted support; throws ContractError if absent.
std::size_t support_index(const std::vector<TreeKey>& support, const TreeKey& key);

}  // namespace edgeswap
