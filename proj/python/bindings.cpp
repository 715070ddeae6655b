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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edgeswap/baselines.hpp"
#include "edgeswap/chain.hpp"
#include "edgeswap/cli.hpp"
#include "edgeswap/counting.hpp"
#include "edgeswap/coupling.hpp"
#include "edgeswap/error.hpp"
#include "edgeswap/stats.hpp"

namespace py = pybind11;
using namespace edgeswap;

namespace {

// Exact rationals cross the boundary as (numerator, denominator) strings;
// the Python side rebuilds them as fractions.Fraction.
std::pair<std::string, std::string> rational_parts(const Rational& q) {
  return {q.get_num().get_str(), q.get_den().get_str()};
}

TopologySpec make_spec(const std::string& kind, int n, int rows, int cols, double p, int steps) {
  switch (parse_topology_kind(kind)) {
    case TopologyKind::cycle: return TopologySpec::cycle(n);
    case TopologyKind::ladder: return TopologySpec::ladder(n);
    case TopologyKind::complete: return TopologySpec::complete(n);
    case TopologyKind::biK: return TopologySpec::bi_complete(n);
    case TopologyKind::torus: return TopologySpec::torus(rows, cols);
    case TopologyKind::dmp: return TopologySpec::dmp(p, steps);
  }
  throw InvalidSpec("unknown topology");
}

TreeSampler sampler_by_name(const std::string& name, const Graph& g, std::uint64_t steps, Variant v) {
  if (name == "edge-swap")
    return [start = initial_tree(g), steps, v](DrawSource& d) { return sample_tree(start, steps, d, v); };
  if (name == "aldous-broder") return [&g](DrawSource& d) { return aldous_broder(g, d); };
  if (name == "wilson") return [&g](DrawSource& d) { return wilson(g, d); };
  if (name == "biased-union-find") return [&g](DrawSource& d) { return biased_union_find(g, d); };
  throw InvalidSpec("unknown sampler '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_edgeswap, m) {
  m.doc() = "Uniform spanning tree sampling with the edge-swap chain";
  m.attr("__version__") = version_string();

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidSpec>(m, "InvalidSpec", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ContractError>(m, "ContractError", base.ptr());
  py::register_exception<TooLarge>(m, "TooLarge", base.ptr());

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"), py::arg("stream") = 0)
      .def("split", &Rng::split, py::arg("k"))
      .def("uniform_index", &Rng::uniform_index, py::arg("n"));

  py::class_<Graph>(m, "Graph")
      .def(py::init<Vertex, std::vector<std::pair<Vertex, Vertex>>>(), py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<Vertex, Vertex>> out;
             for (auto e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("degree", &Graph::degree)
      .def("find_edge", &Graph::find_edge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph V=" + std::to_string(g.vertex_count()) + " E=" + std::to_string(g.edge_count()) + ">";
      });

  m.def(
      "generate",
      [](const std::string& kind, int n, int rows, int cols, double p, int steps, std::uint64_t seed) {
        return generate(make_spec(kind, n, rows, cols, p, steps), seed);
      },
      py::arg("kind"), py::arg("n") = 0, py::arg("rows") = 0, py::arg("cols") = 0, py::arg("p") = 0.5,
      py::arg("steps") = 0, py::arg("seed") = 0);
  m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
  m.def("serialize_edge_list", &serialize_edge_list, py::arg("graph"));

  m.def("kirchhoff_count", [](const Graph& g) { return kirchhoff_count(g).get_str(); }, py::arg("graph"));
  m.def("enumerate_spanning_trees", [](const Graph& g) { return enumerate_spanning_trees(g); }, py::arg("graph"));
  m.def("is_spanning_tree", [](const Graph& g, const TreeKey& t) { return is_spanning_tree(g, t); },
        py::arg("graph"), py::arg("tree"));
  m.def("edge_distance", [](const TreeKey& a, const TreeKey& b) { return edge_distance(make_key(a), make_key(b)); },
        py::arg("a"), py::arg("b"));

  m.def(
      "initial_tree", [](const Graph& g) { return initial_tree(g).tree_key(); }, py::arg("graph"));
  m.def(
      "sample_tree",
      [](const Graph& g, std::uint64_t steps, Rng& rng, const std::string& variant) {
        return sample_tree(g, steps, rng, parse_variant(variant));
      },
      py::arg("graph"), py::arg("steps"), py::arg("rng"), py::arg("variant") = "fast");
  m.def("aldous_broder", [](const Graph& g, Rng& r) { return aldous_broder(g, r); }, py::arg("graph"),
        py::arg("rng"));
  m.def("wilson", [](const Graph& g, Rng& r) { return wilson(g, r); }, py::arg("graph"), py::arg("rng"));
  m.def("biased_union_find", [](const Graph& g, Rng& r) { return biased_union_find(g, r); }, py::arg("graph"),
        py::arg("rng"));

  m.def(
      "transition_matrix",
      [](const Graph& g, const std::string& variant) {
        TransitionMatrix tm = transition_matrix(g, parse_variant(variant));
        std::vector<std::vector<std::tuple<std::size_t, std::string, std::string>>> rows;
        for (const auto& row : tm.rows) {
          auto& out = rows.emplace_back();
          for (const auto& [j, q] : row) {
            auto [num, den] = rational_parts(q);
            out.emplace_back(j, num, den);
          }
        }
        return py::make_tuple(tm.states, rows);
      },
      py::arg("graph"), py::arg("variant") = "slow");

  m.def(
      "path_coupling_estimate",
      [](const Graph& g, std::uint64_t seed, const std::string& mode, std::optional<std::uint64_t> cap) {
        MixingEstimate est;
        {
          py::gil_scoped_release release;
          est = path_coupling_estimate(g, Rng(seed), parse_coupling_mode(mode), cap);
        }
        py::list runs;
        for (const auto& r : est.runs) {
          py::dict d;
          d["repeat"] = r.repeat;
          d["steps"] = r.steps;
          d["t_prime"] = r.t_prime;
          runs.append(d);
        }
        py::dict out;
        out["tau_hat"] = est.tau_hat;
        out["cap"] = est.cap;
        out["runs"] = runs;
        return out;
      },
      py::arg("graph"), py::arg("seed"), py::arg("mode") = "optimistic", py::arg("cap") = py::none());

  m.def(
      "cycle_mixing_bound",
      [](long v, const std::string& variant) { return cycle_mixing_bound(v, parse_variant(variant)); },
      py::arg("vertex_count"), py::arg("variant") = "fast");
  m.def(
      "bridged_cycles_bound",
      [](long n, long mm, const std::string& variant, std::optional<long> e) {
        return bridged_cycles_bound(n, mm, parse_variant(variant), e);
      },
      py::arg("n"), py::arg("m"), py::arg("variant") = "fast", py::arg("edge_count") = py::none());
  m.def(
      "bernoulli_params",
      [](std::size_t cx, std::size_t cy, std::size_t ex, std::size_t ey, std::size_t i) {
        BernoulliParams b = bernoulli_params(cx, cy, ex, ey, i);
        return py::make_tuple(rational_parts(b.p), rational_parts(b.p_star), rational_parts(b.p_prime));
      },
      py::arg("cx"), py::arg("cy"), py::arg("ex"), py::arg("ey"), py::arg("i"));

  m.def(
      "exact_empirical_vd",
      [](const Graph& g, const std::string& sampler, std::uint64_t samples, std::uint64_t seed,
         std::uint64_t steps, const std::string& variant) {
        py::gil_scoped_release release;
        Rng rng(seed);
        return exact_empirical_vd(g, sampler_by_name(sampler, g, steps, parse_variant(variant)), samples, rng);
      },
      py::arg("graph"), py::arg("sampler"), py::arg("samples"), py::arg("seed"), py::arg("steps") = 0,
      py::arg("variant") = "fast");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
