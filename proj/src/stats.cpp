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

#include "edgeswap/stats.hpp"

#include <algorithm>
#include <atomic>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "edgeswap/baselines.hpp"
#include "edgeswap/counting.hpp"
#include "edgeswap/error.hpp"

namespace edgeswap {

TreeDistribution TreeDistribution::uniform(std::vector<TreeKey> support) {
  TreeDistribution d;
  const auto n = static_cast<long>(support.size());
  d.support = std::move(support);
  d.mass.assign(d.support.size(), Rational(1, n));
  return d;
}

TreeDistribution TreeDistribution::from_counts(std::vector<TreeKey> support, std::span<const std::uint64_t> counts) {
  if (counts.size() != support.size()) throw ContractError("counts and support differ in size");
  const BigInt total(std::to_string(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0})));
  if (total == 0) throw ContractError("empty sample");
  TreeDistribution d;
  d.support = std::move(support);
  for (auto c : counts) {
    Rational q(BigInt(std::to_string(c)), total);
    q.canonicalize();
    d.mass.push_back(q);
  }
  return d;
}

TreeDistribution TreeDistribution::point(std::vector<TreeKey> support, std::size_t index) {
  TreeDistribution d;
  d.mass.assign(support.size(), 0);
  d.mass.at(index) = 1;
  d.support = std::move(support);
  return d;
}

Rational variation_distance(const TreeDistribution& a, const TreeDistribution& b) {
  if (a.support != b.support) throw ContractError("distributions live on different universes");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.mass.size(); ++i) sum += abs(a.mass[i] - b.mass[i]);
  sum /= 2;
  return sum;
}

double histogram_distance(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  if (a.size() != b.size()) throw ContractError("histograms differ in size");
  const double na = static_cast<double>(std::accumulate(a.begin(), a.end(), std::uint64_t{0}));
  const double nb = static_cast<double>(std::accumulate(b.begin(), b.end(), std::uint64_t{0}));
  double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(static_cast<double>(a[i]) / na - static_cast<double>(b[i]) / nb);
  return sum / 2;
}

std::size_t edge_distance(std::span<const EdgeId> t1, std::span<const EdgeId> t2) {
  if (t1.size() != t2.size()) throw ContractError("trees of different sizes");
  std::size_t shared = 0;
  for (std::size_t i = 0, j = 0; i < t1.size() && j < t2.size();) {
    if (t1[i] < t2[j]) ++i;
    else if (t2[j] < t1[i]) ++j;
    else ++shared, ++i, ++j;
  }
  return t1.size() - shared;
}

std::size_t support_index(const std::vector<TreeKey>& support, const TreeKey& key) {
  auto it = std::lower_bound(support.begin(), support.end(), key);
  if (it == support.end() || *it != key) throw ContractError("sampled tree is not in the support");
  return static_cast<std::size_t>(it - support.begin());
}

namespace {

// Runs f(0..n-1) over a small worker pool; results are index-addressed by f.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F f) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct HistogramPair {
  std::vector<std::uint64_t> first, second;
  std::uint64_t samples = 0;
  bool capped = false;
};

// Grows two independent edge-distance histograms, doubling the sample count,
// until they agree within the tolerance or the cap is reached.
HistogramPair converge_pair(const Graph& g, const TreeKey& ref, const TreeSampler& sampler, Rng& rng,
                            const SimpleVDConfig& cfg) {
  HistogramPair h;
  h.first.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  h.second.assign(h.first.size(), 0);
  std::uint64_t batch = std::max<std::uint64_t>(1, cfg.initial_samples);
  while (true) {
    for (std::uint64_t k = 0; k < batch; ++k) {
      ++h.first[edge_distance(sampler(rng), ref)];
      ++h.second[edge_distance(sampler(rng), ref)];
    }
    h.samples += batch;
    if (histogram_distance(h.first, h.second) < cfg.tolerance) return h;
    if (h.samples >= cfg.max_samples) {
      h.capped = true;
      return h;
    }
    batch = std::min(h.samples, cfg.max_samples - h.samples);
  }
}

}  // namespace

std::vector<SimpleVDReference> prepare_references(const Graph& g, const Rng& rng, const SimpleVDConfig& cfg) {
  std::vector<SimpleVDReference> refs(static_cast<std::size_t>(cfg.references));
  for (std::size_t k = 0; k < refs.size(); ++k) {
    Rng r = rng.split(k);
    refs[k].tree = aldous_broder(g, r);
  }
  const TreeSampler walk = [&g](DrawSource& d) { return aldous_broder(g, d); };
  parallel_for(refs.size(), cfg.threads, [&](std::size_t k) {
    Rng r = rng.split(1000 + k);
    HistogramPair h = converge_pair(g, refs[k].tree, walk, r, cfg);
    refs[k].pi = std::move(h.first);
    refs[k].capped = h.capped;
  });
  return refs;
}

VDEstimate estimate_simple_vd(const Graph& g, std::uint64_t t, const Rng& rng, const SimpleVDConfig& cfg,
                              const std::vector<SimpleVDReference>& refs) {
  VDEstimate est;
  est.t = t;
  est.per_reference.resize(refs.size());
  const TreeSampler chain = [start = initial_tree(g), t, v = cfg.variant](DrawSource& d) {
    return sample_tree(start, t, d, v);
  };
  parallel_for(refs.size(), cfg.threads, [&](std::size_t k) {
    Rng r = rng.split(2000 + k);
    HistogramPair h = converge_pair(g, refs[k].tree, chain, r, cfg);
    est.per_reference[k] = {static_cast<int>(k), histogram_distance(refs[k].pi, h.first), h.samples,
                            h.capped || refs[k].capped};
  });
  for (const auto& r : est.per_reference) {
    est.epsilon_hat = std::max(est.epsilon_hat, r.simple_vd);
    est.capped = est.capped || r.capped;
  }
  est.below_floor = est.epsilon_hat < cfg.floor;
  return est;
}

VDEstimate estimate_simple_vd(const Graph& g, std::uint64_t t, const Rng& rng, const SimpleVDConfig& cfg) {
  return estimate_simple_vd(g, t, rng, cfg, prepare_references(g, rng, cfg));
}

std::string vd_estimate_csv(const std::string& graph_id, const Graph& g, const VDEstimate& est, double floor,
                            bool header) {
  std::ostringstream out;
  out.precision(6);
  if (header) out << "graph_id,V,E,t,reference,simple_vd,epsilon_hat,samples,capped\n";
  std::ostringstream eps;
  eps.precision(6);
  if (est.below_floor)
    eps << '<' << floor;
  else
    eps << est.epsilon_hat;
  for (const auto& r : est.per_reference) {
    out << graph_id << ',' << g.vertex_count() << ',' << g.edge_count() << ',' << est.t << ',' << r.index << ','
        << r.simple_vd << ',' << eps.str() << ',' << r.samples << ',' << (r.capped ? 1 : 0) << '\n';
  }
  return out.str();
}

double exact_empirical_vd(const std::vector<TreeKey>& support, const TreeSampler& sampler, std::uint64_t samples,
                          DrawSource& draws) {
  if (samples == 0) throw ContractError("need at least one sample");
  std::vector<std::uint64_t> counts(support.size(), 0);
  for (std::uint64_t s = 0; s < samples; ++s) ++counts[support_index(support, sampler(draws))];
  // sum |c/N - 1/K| / 2 = sum |cK - N| / (2NK), exactly.
  const BigInt n(std::to_string(samples)), k(std::to_string(support.size()));
  BigInt num = 0;
  for (auto c : counts) num += abs(BigInt(std::to_string(c)) * k - n);
  Rational vd(num, 2 * n * k);
  vd.canonicalize();
  return vd.get_d();
}

double exact_empirical_vd(const Graph& g, const TreeSampler& sampler, std::uint64_t samples, DrawSource& draws) {
  return exact_empirical_vd(enumerate_spanning_trees(g), sampler, samples, draws);
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed, std::span<const double> expected) {
  if (observed.size() != expected.size() || observed.size() < 2) throw ContractError("chi-square needs matching bins");
  const double n = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  ChiSquareResult r;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = n * expected[i];
    if (e <= 0) throw ContractError("chi-square bin with zero expectation");
    const double d = static_cast<double>(observed[i]) - e;
    r.statistic += d * d / e;
  }
  r.dof = observed.size() - 1;
  boost::math::chi_squared dist(static_cast<double>(r.dof));
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

}  // namespace edgeswap
