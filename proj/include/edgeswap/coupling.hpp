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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgeswap/chain.hpp"

namespace edgeswap {

// Coupling of two edge-swap chains X and Y whose trees differ in one edge.
//
// Notation used throughout: e_x is the edge in X's tree but not Y's, e_y the
// reverse. X inserts i_x and removes o_x; Y inserts i_y and removes o_y.
// Cx and Cy are the cycles closed by the inserted edge in each tree,
// I = Cx ∩ Cy, Ex = Cx \ I, Ey = Cy \ I, and Ce is the cycle closed by e_y in
// X's tree. U_y is the uncertainty set: edges of Ce \ {e_x} that are equally
// likely to be e_y. All edge sets below are sorted edge-index vectors.

enum class CouplingMode { markovian, non_markovian, optimistic };

std::string_view to_string(CouplingMode mode);
CouplingMode parse_coupling_mode(std::string_view name);

/// Which branch of the case table produced a coupled move.
enum class CouplingCase {
  mirror,           // distance 0: Y copies X
  loop,             // X inserted a tree edge, both stay
  swap,             // i_x = e_y, o_x = e_x: the chains trade states
  exchange,         // i_x = e_y, o_x != e_x: coalesce
  eq_coalesce,      // o_x = e_x (and the |Cx| < |Cy| reductions to it)
  eq_common,        // o_y = o_x on the shared part of the cycles
  eq_uy,            // o_y = e_y, Y's exclusive edge becomes o_x
  eq_uncommon,      // o_y = s_y on Ey: distance 2
  sm_uncommon,      // |Cx| < |Cy|, o_x = e_x, B fails, s_y outside U_y
  sm_common_uy,     // |Cx| < |Cy|, o_x on I, B fails, s_y in U_y
  sm_common_uncommon,  // |Cx| < |Cy|, o_x on I, B fails, s_y outside U_y: distance 2
  big_uncommon,     // |Cx| > |Cy|, B* succeeds, o_y on I: distance 2
};

std::string_view to_string(CouplingCase c);

struct CycleDecomposition {
  std::vector<EdgeId> cx, cy, common, ex_only, ey_only, ce;
  EdgeId ex = -1, ey = -1, ix = -1;
  /// e_x is not on Cx, so Cx = Cy = I and Ex, Ey are empty.
  bool trivial = false;
};

/// Decomposes the cycles for insertion of i_x into trees at distance 1.
/// Throws ContractError unless the trees are at distance exactly 1 and i_x is
/// outside both. Every partition property is checked before returning.
CycleDecomposition decompose(ChainState& x, ChainState& y, EdgeId ix);

struct BernoulliParams {
  Rational p, p_star, p_prime;
};

/// Success probabilities of B, B* and B'. p_star and p_prime are only
/// meaningful for cx > cy (they are reported as 0 and 1 otherwise).
/// Throws ContractError when the sizes are inconsistent.
BernoulliParams bernoulli_params(std::size_t cx, std::size_t cy, std::size_t ex, std::size_t ey,
                                 std::size_t i);

/// One adjacent pair along a coupling path.
struct LinkState {
  EdgeId ex = -1;
  EdgeId ey = -1;
  std::vector<EdgeId> uy;  // sorted, contains ey
};

/// Y's answer to a given X move.
struct CoupledMove {
  CouplingCase kind = CouplingCase::mirror;
  StepRecord y_move;
  int distance = 0;
  /// distance 1: the link x'→y'. distance 2: the link x'→z'.
  LinkState near;
  /// distance 2 only: the link z'→y'.
  LinkState far;
  /// distance 2 only: z' = X's tree with i_x in and e_x out.
  StepRecord z_from_x;
};

/// Chooses Y's move given X's proposed move. Trees are read, not modified.
/// Extra draws follow X's: B, s_y, B*, s_i, B' in the order the case reaches
/// them. Optimistic mode takes every "s_y in U_y" test as true and B* as
/// false, without drawing either.
CoupledMove couple(ChainState& x, ChainState& y, const LinkState& link, const StepRecord& x_move,
                   DrawSource& draws, CouplingMode mode);

struct CoupledState {
  ChainState x;
  ChainState y;
  LinkState link;  // meaningful while distance == 1
  int distance = 0;
  CouplingMode mode = CouplingMode::markovian;
};

/// Builds a coupled state from two trees at distance at most 1, with
/// U_y = {e_y}. Throws ContractError at larger distance.
CoupledState make_coupled_state(const Graph& g, const TreeKey& x, const TreeKey& y, CouplingMode mode);

struct CoupledStepOutcome {
  CouplingCase kind;
  int distance;
  std::vector<EdgeId> uy;
  std::optional<std::vector<EdgeId>> uz;
};

/// Advances both chains one step. X draws its move first (edge, then path
/// index), then the coupling draws. Throws ContractError when the state is
/// already at distance 2; the new trees are kept in that case too.
CoupledStepOutcome coupled_step(CoupledState& s, DrawSource& draws, Variant variant = Variant::fast);

struct MixingRun {
  int repeat = 0;
  std::uint64_t steps = 0;          // coupled steps simulated
  std::optional<std::uint64_t> t_prime;  // empty when the cap was hit
  std::size_t initial_links = 0;
  std::size_t distance_two_events = 0;
};

/// Estimated (not proven) mixing time from path-coupling simulation.
struct MixingEstimate {
  CouplingMode mode = CouplingMode::optimistic;
  std::uint64_t cap = 0;
  std::vector<MixingRun> runs;
  /// ceil of the second largest t'·ln V; empty when fewer than two runs
  /// converged below the cap.
  std::optional<std::uint64_t> tau_hat;
};

/// Default watchdog: 200·(V^1.3 + E) coupled steps.
std::uint64_t default_coupling_cap(const Graph& g, double exponent = 1.3);

/// Path-coupling estimate over the fast chain. A path of ⌈e·ln V⌉ fast steps
/// from the initial tree is coupled link by link until it shrinks to
/// ⌈ln V⌉ links. Repeats run on separate threads with split streams.
MixingEstimate path_coupling_estimate(const Graph& g, const Rng& rng, CouplingMode mode,
                                      std::optional<std::uint64_t> cap = std::nullopt, int repeats = 4);

/// CSV with columns graph_id,V,E,mode,repeat,t_prime,tau_hat.
std::string mixing_estimate_csv(const std::string& graph_id, const Graph& g, const MixingEstimate& est,
                                bool header = true);

/// Closed-form mixing bound for the cycle graph on V vertices.
/// fast: log 4 / log(V-1); slow: (V-1) times that.
double cycle_mixing_bound(long vertex_count, Variant variant);

/// Closed-form bound for n cycles of size at least m joined by bridges:
/// log(4n) / log(n(m-1) / (n(m-1) - (m-2))). The slow variant substitutes
/// the edge count E for n and therefore needs `edge_count`.
double bridged_cycles_bound(long n, long m, Variant variant, std::optional<long> edge_count = std::nullopt);

}  // namespace edgeswap
