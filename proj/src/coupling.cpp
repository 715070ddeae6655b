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

#include "edgeswap/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>
#include <sstream>
#include <thread>

#include "edgeswap/error.hpp"

namespace edgeswap {

namespace {

using EdgeSet = std::vector<EdgeId>;

bool contains(const EdgeSet& s, EdgeId e) { return std::binary_search(s.begin(), s.end(), e); }

EdgeSet sorted(EdgeSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

EdgeSet set_and(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet set_minus(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet set_or(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet without(const EdgeSet& a, EdgeId e) { return set_minus(a, EdgeSet{e}); }

CycleDecomposition decompose_link(ChainState& x, ChainState& y, EdgeId ex, EdgeId ey, EdgeId ix, bool with_ce) {
  CycleDecomposition d;
  d.ex = ex;
  d.ey = ey;
  d.ix = ix;
  d.cx = sorted(x.cycle_of(ix));
  d.cy = sorted(y.cycle_of(ix));
  d.trivial = !contains(d.cx, ex);
  d.common = set_and(d.cx, d.cy);
  d.ex_only = set_minus(d.cx, d.common);
  d.ey_only = set_minus(d.cy, d.common);
  if (with_ce) d.ce = sorted(x.cycle_of(ey));

  if (d.cx.size() < 3 || d.cy.size() < 3) throw ContractError("cycle shorter than 3 in a simple graph");
  if (d.trivial) {
    if (d.cx != d.cy) throw ContractError("e_x off Cx but Cx != Cy");
  } else {
    if (!contains(d.ex_only, ex) || !contains(d.ey_only, ey) || !contains(d.common, ix))
      throw ContractError("cycle partition misses e_x, e_y or i_x");
    if (with_ce && set_or(d.ex_only, d.ey_only) != d.ce) throw ContractError("Ex and Ey do not partition Ce");
  }
  return d;
}

}  // namespace

std::string_view to_string(CouplingMode mode) {
  switch (mode) {
    case CouplingMode::markovian: return "markovian";
    case CouplingMode::non_markovian: return "non_markovian";
    case CouplingMode::optimistic: return "optimistic";
  }
  return "?";
}

CouplingMode parse_coupling_mode(std::string_view name) {
  if (name == "markovian") return CouplingMode::markovian;
  if (name == "non_markovian" || name == "non-markovian") return CouplingMode::non_markovian;
  if (name == "optimistic") return CouplingMode::optimistic;
  throw InvalidSpec("unknown coupling mode '" + std::string(name) +
                    "' (expected markovian|non_markovian|optimistic)");
}

std::string_view to_string(CouplingCase c) {
  switch (c) {
    case CouplingCase::mirror: return "mirror";
    case CouplingCase::loop: return "loop";
    case CouplingCase::swap: return "swap";
    case CouplingCase::exchange: return "exchange";
    case CouplingCase::eq_coalesce: return "eq_coalesce";
    case CouplingCase::eq_common: return "eq_common";
    case CouplingCase::eq_uy: return "eq_uy";
    case CouplingCase::eq_uncommon: return "eq_uncommon";
    case CouplingCase::sm_uncommon: return "sm_uncommon";
    case CouplingCase::sm_common_uy: return "sm_common_uy";
    case CouplingCase::sm_common_uncommon: return "sm_common_uncommon";
    case CouplingCase::big_uncommon: return "big_uncommon";
  }
  return "?";
}

CycleDecomposition decompose(ChainState& x, ChainState& y, EdgeId ix) {
  TreeKey kx = x.tree_key(), ky = y.tree_key();
  EdgeSet only_x = set_minus(kx, ky), only_y = set_minus(ky, kx);
  if (only_x.size() != 1) throw ContractError("decompose needs trees at distance 1");
  if (x.in_tree(ix) || y.in_tree(ix)) throw ContractError("i_x must lie outside both trees");
  return decompose_link(x, y, only_x[0], only_y[0], ix, true);
}

BernoulliParams bernoulli_params(std::size_t cx, std::size_t cy, std::size_t ex, std::size_t ey, std::size_t i) {
  if (cx < 3 || cy < 3 || i < 1 || cx != ex + i || cy != ey + i || (ex == 0) != (ey == 0))
    throw ContractError("inconsistent cycle sizes");
  BernoulliParams b{1, 0, 1};
  if (cx <= cy) {
    b.p = Rational(static_cast<long>(cx - 1), static_cast<long>(cy - 1));
    b.p.canonicalize();
    return b;
  }
  const Rational cx1(static_cast<long>(cx - 1)), cy1(static_cast<long>(cy - 1));
  b.p_star = (1 / cy1 - 1 / cx1) * cx1 * Rational(static_cast<long>(i - 1)) / Rational(static_cast<long>(ex - 1));
  const Rational q = 1 - b.p_star;
  if (q <= 0) throw ContractError("p* reached 1");
  b.p_prime = 1 - cx1 * Rational(static_cast<long>(ey - 1)) / (cy1 * Rational(static_cast<long>(ex - 1)) * q);
  b.p_star.canonicalize();
  b.p_prime.canonicalize();
  return b;
}

CoupledMove couple(ChainState& x, ChainState& y, const LinkState& link, const StepRecord& x_move,
                   DrawSource& draws, CouplingMode mode) {
  const bool tracked = mode == CouplingMode::non_markovian;
  const EdgeId ex = link.ex, ey = link.ey;
  if (tracked && !contains(link.uy, ey)) throw ContractError("U_y must contain e_y");
  auto u_or_single = [&](EdgeSet u, EdgeId e) { return tracked ? std::move(u) : EdgeSet{e}; };

  CoupledMove m;
  if (!x_move.swapped()) {
    m.kind = CouplingCase::loop;
    m.distance = 1;
    m.near = link;
    return m;
  }
  const EdgeId ix = *x_move.inserted, ox = *x_move.removed;

  if (ix == ey) {
    m.y_move = StepRecord{ex, std::nullopt, x_move.cycle_length};
    if (ox == ex) {
      // Cx is Ce here, so U_y' = Ce minus the new e_x (= e_y).
      m.kind = CouplingCase::swap;
      m.y_move.removed = ey;
      m.distance = 1;
      m.near = {ey, ex, tracked ? without(sorted(x.cycle_of(ey)), ey) : EdgeSet{ex}};
    } else {
      m.kind = CouplingCase::exchange;
      m.y_move.removed = ox;
      m.distance = 0;
    }
    return m;
  }

  CycleDecomposition d = decompose_link(x, y, ex, ey, ix, false);
  const std::size_t cx = d.cx.size(), cy = d.cy.size();
  m.y_move = StepRecord{ix, std::nullopt, cy};

  auto coalesce = [&](CouplingCase kind) {
    m.kind = kind;
    m.y_move.removed = ey;
    m.distance = 0;
  };
  auto eq_common = [&](EdgeSet uy) {
    m.kind = CouplingCase::eq_common;
    m.y_move.removed = ox;
    m.distance = 1;
    m.near = {ex, ey, u_or_single(std::move(uy), ey)};
  };
  auto eq_uy = [&](CouplingCase kind, EdgeSet uy) {
    m.kind = kind;
    m.y_move.removed = ey;
    m.distance = 1;
    m.near = {ex, ox, u_or_single(std::move(uy), ox)};
  };
  auto split = [&](CouplingCase kind, EdgeId oy, EdgeSet uz) {
    m.kind = kind;
    m.y_move.removed = oy;
    m.distance = 2;
    m.near = {ex, ox, u_or_single(std::move(uz), ox)};
    m.far = {oy, ey, u_or_single(without(set_and(link.uy, d.ey_only), oy), ey)};
    m.z_from_x = StepRecord{ix, ex, cx};
  };
  // Draws s_y from Ey \ {e_y} and reports whether it lies in U_y.
  EdgeId sy = -1;
  auto sy_in_u = [&]() {
    if (mode == CouplingMode::optimistic) return true;
    EdgeSet pool = without(d.ey_only, ey);
    sy = pool[draws.uniform_index(pool.size())];
    return contains(link.uy, sy);
  };

  if (d.trivial) {
    // o_x may lie on Ce; the new Ce' is then Ce xor Cx.
    EdgeSet uy = link.uy;
    if (tracked && contains(sorted(x.cycle_of(ey)), ox)) uy = set_minus(uy, d.cx);
    eq_common(std::move(uy));
    return m;
  }

  enum class Where { oex, common, excl };
  const Where where = ox == ex ? Where::oex : contains(d.common, ox) ? Where::common : Where::excl;
  const EdgeSet ex_rest = without(d.ex_only, ex);

  auto exclusive_branch = [&]() {
    if (sy_in_u())
      eq_uy(CouplingCase::eq_uy, ex_rest);
    else
      split(CouplingCase::eq_uncommon, sy, ex_rest);
  };

  if (cx == cy) {
    if (where == Where::oex) coalesce(CouplingCase::eq_coalesce);
    else if (where == Where::common) eq_common(link.uy);
    else exclusive_branch();
    return m;
  }

  const BernoulliParams b = bernoulli_params(cx, cy, d.ex_only.size(), d.ey_only.size(), d.common.size());
  if (cx < cy) {
    if (where == Where::excl) {
      exclusive_branch();
    } else if (where == Where::oex) {
      if (draws.bernoulli(b.p) || sy_in_u()) {
        coalesce(CouplingCase::eq_coalesce);
      } else {
        m.kind = CouplingCase::sm_uncommon;
        m.y_move.removed = sy;
        m.distance = 1;
        m.near = {sy, ey, u_or_single(without(set_and(link.uy, d.cy), sy), ey)};
      }
    } else {
      if (draws.bernoulli(b.p))
        eq_common(link.uy);
      else if (sy_in_u())
        eq_uy(CouplingCase::sm_common_uy, without(d.common, ix));
      else
        split(CouplingCase::sm_common_uncommon, sy, without(d.common, ix));
    }
    return m;
  }

  // cx > cy
  if (where == Where::oex) {
    coalesce(CouplingCase::eq_coalesce);
  } else if (where == Where::common) {
    eq_common(link.uy);
  } else if (mode != CouplingMode::optimistic && draws.bernoulli(b.p_star)) {
    EdgeSet pool = without(d.common, ix);
    split(CouplingCase::big_uncommon, pool[draws.uniform_index(pool.size())], ex_rest);
  } else if (mode == CouplingMode::optimistic || draws.bernoulli(b.p_prime)) {
    eq_uy(CouplingCase::eq_uy, ex_rest);
  } else {
    exclusive_branch();
  }
  return m;
}

CoupledState make_coupled_state(const Graph& g, const TreeKey& x, const TreeKey& y, CouplingMode mode) {
  TreeKey kx = make_key(x), ky = make_key(y);
  EdgeSet only_x = set_minus(kx, ky), only_y = set_minus(ky, kx);
  if (only_x.size() > 1) throw ContractError("coupled trees must be at distance at most 1");
  CoupledState s{ChainState(g, kx), ChainState(g, ky), {}, static_cast<int>(only_x.size()), mode};
  if (s.distance == 1) s.link = {only_x[0], only_y[0], {only_y[0]}};
  return s;
}

CoupledStepOutcome coupled_step(CoupledState& s, DrawSource& draws, Variant variant) {
  if (s.distance > 1) throw ContractError("coupled_step called at distance 2");
  const StepRecord xm = s.x.propose(draws, variant);
  if (s.distance == 0) {
    s.x.apply(xm);
    s.y.apply(xm);
    return {CouplingCase::mirror, 0, {}, std::nullopt};
  }
  CoupledMove m = couple(s.x, s.y, s.link, xm, draws, s.mode);
  s.x.apply(xm);
  s.y.apply(m.y_move);
  s.distance = m.distance;
  if (m.distance == 2) {
    s.link = m.far;
    return {m.kind, 2, m.far.uy, m.near.uy};
  }
  s.link = m.near;
  return {m.kind, m.distance, m.distance == 1 ? m.near.uy : EdgeSet{}, std::nullopt};
}

std::uint64_t default_coupling_cap(const Graph& g, double exponent) {
  return static_cast<std::uint64_t>(
      std::ceil(200.0 * (std::pow(static_cast<double>(g.vertex_count()), exponent) + g.edge_count())));
}

namespace {

MixingRun run_path_coupling(const Graph& g, Rng rng, CouplingMode mode, std::uint64_t cap, int repeat) {
  const double ln_v = std::log(static_cast<double>(g.vertex_count()));
  const auto initial = static_cast<std::size_t>(std::ceil(std::numbers::e * ln_v));
  const auto target = static_cast<std::size_t>(std::ceil(ln_v));

  std::vector<ChainState> states{initial_tree(g)};
  std::vector<LinkState> links;
  for (std::size_t k = 0; k < initial; ++k) {
    ChainState next = states.back();
    StepRecord r = next.step(rng, Variant::fast);
    if (!r.swapped()) break;  // g is a tree
    links.push_back({*r.removed, *r.inserted, {*r.inserted}});
    states.push_back(std::move(next));
  }

  MixingRun run;
  run.repeat = repeat;
  run.initial_links = links.size();
  while (links.size() > target) {
    if (run.steps >= cap) return run;
    ++run.steps;
    std::vector<StepRecord> moves(states.size());
    std::vector<CoupledMove> coupled(links.size());
    moves[0] = states[0].propose(rng, Variant::fast);
    for (std::size_t j = 0; j < links.size(); ++j) {
      coupled[j] = couple(states[j], states[j + 1], links[j], moves[j], rng, mode);
      moves[j + 1] = coupled[j].y_move;
    }
    std::vector<std::optional<ChainState>> middle(links.size());
    for (std::size_t j = 0; j < links.size(); ++j) {
      if (coupled[j].distance == 2) {
        middle[j].emplace(states[j]);
        middle[j]->apply(coupled[j].z_from_x);
        ++run.distance_two_events;
      }
    }
    for (std::size_t j = 0; j < states.size(); ++j) states[j].apply(moves[j]);

    std::vector<ChainState> next_states;
    std::vector<LinkState> next_links;
    next_states.push_back(std::move(states[0]));
    for (std::size_t j = 0; j < links.size(); ++j) {
      CoupledMove& c = coupled[j];
      if (c.distance == 0) continue;
      next_links.push_back(std::move(c.near));
      if (c.distance == 2) {
        next_states.push_back(std::move(*middle[j]));
        next_links.push_back(std::move(c.far));
      }
      next_states.push_back(std::move(states[j + 1]));
    }
    states = std::move(next_states);
    links = std::move(next_links);
  }
  run.t_prime = run.steps;
  return run;
}

}  // namespace

MixingEstimate path_coupling_estimate(const Graph& g, const Rng& rng, CouplingMode mode,
                                      std::optional<std::uint64_t> cap, int repeats) {
  if (repeats < 2) throw InvalidSpec("path coupling needs at least 2 repeats");
  MixingEstimate est;
  est.mode = mode;
  est.cap = cap.value_or(default_coupling_cap(g));
  est.runs.resize(static_cast<std::size_t>(repeats));
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(est.runs.size());
  for (int r = 0; r < repeats; ++r) {
    workers.emplace_back([&, r] {
      try {
        est.runs[r] = run_path_coupling(g, rng.split(static_cast<std::uint64_t>(r)), mode, est.cap, r);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  const double ln_v = std::log(static_cast<double>(g.vertex_count()));
  std::vector<double> scaled;
  for (const auto& run : est.runs)
    if (run.t_prime) scaled.push_back(static_cast<double>(*run.t_prime) * ln_v);
  // A diverged run counts as the largest value, so two or more leave no estimate.
  const std::size_t diverged = est.runs.size() - scaled.size();
  if (diverged == 0 && scaled.size() >= 2) {
    std::sort(scaled.rbegin(), scaled.rend());
    est.tau_hat = static_cast<std::uint64_t>(std::ceil(scaled[1]));
  } else if (diverged == 1 && !scaled.empty()) {
    est.tau_hat = static_cast<std::uint64_t>(std::ceil(*std::max_element(scaled.begin(), scaled.end())));
  }
  return est;
}

std::string mixing_estimate_csv(const std::string& graph_id, const Graph& g, const MixingEstimate& est,
                                bool header) {
  std::ostringstream out;
  if (header) out << "graph_id,V,E,mode,repeat,t_prime,tau_hat\n";
  const std::string tau = est.tau_hat ? std::to_string(*est.tau_hat) : "NA";
  for (const auto& run : est.runs) {
    out << graph_id << ',' << g.vertex_count() << ',' << g.edge_count() << ',' << to_string(est.mode) << ','
        << run.repeat << ',' << (run.t_prime ? std::to_string(*run.t_prime) : "diverged") << ',' << tau << '\n';
  }
  return out.str();
}

double cycle_mixing_bound(long vertex_count, Variant variant) {
  if (vertex_count < 4) throw InvalidSpec("cycle bound needs V >= 4");
  const double fast = std::log(4.0) / std::log(static_cast<double>(vertex_count - 1));
  return variant == Variant::fast ? fast : static_cast<double>(vertex_count - 1) * fast;
}

double bridged_cycles_bound(long n, long m, Variant variant, std::optional<long> edge_count) {
  if (n < 1 || m < 3) throw InvalidSpec("bridged-cycles bound needs n >= 1 and m >= 3");
  if (variant == Variant::slow) {
    if (!edge_count || *edge_count < 1) throw InvalidSpec("slow bridged-cycles bound needs the edge count");
    n = *edge_count;
  }
  const double nm = static_cast<double>(n) * static_cast<double>(m - 1);
  return std::log(4.0 * static_cast<double>(n)) / std::log(nm / (nm - static_cast<double>(m - 2)));
}

}  // namespace edgeswap
