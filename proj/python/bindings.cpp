#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>
#include <pybind11/operators.h>

#include "rlroute/centrality.hpp"
#include "rlroute/error.hpp"
#include "rlroute/experiment.hpp"
#include "rlroute/generators.hpp"
#include "rlroute/rl.hpp"
#include "rlroute/routing.hpp"
#include "rlroute/simulation.hpp"

namespace py = pybind11;
using namespace rlroute;

namespace {

WeightParams make_params(double rho, double gamma, double beta, double alpha) {
  WeightParams p;
  p.rho = rho;
  p.gamma_exponent = gamma;
  p.beta = beta;
  p.alpha_exponent = alpha;
  return p;
}

NodeStats make_stats(const Graph& g, std::optional<std::vector<double>> betweenness) {
  if (!betweenness) return NodeStats::zeros(g.node_count());
  return NodeStats{std::move(*betweenness)};
}

const Method& find_method(const ExperimentSpec& spec, const std::string& name) {
  for (const auto& m : spec.methods) {
    if (m.name == name) return m;
  }
  throw py::key_error("no method named " + name);
}

void define_graph(py::module_& m) {
  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("node_count"), py::arg("edges"))
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, NodeId v) {
        auto nb = g.neighbors(v);
        return std::vector<NodeId>(nb.begin(), nb.end());
      })
      .def("has_edge", &Graph::has_edge)
      .def("edges", &Graph::edges)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.node_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("barabasi_albert", &generate_barabasi_albert, py::arg("n"), py::arg("m"), py::arg("seed"));
  m.def("watts_strogatz", &generate_watts_strogatz, py::arg("n"), py::arg("k"), py::arg("p_rewire"),
        py::arg("seed"));
  m.def("erdos_renyi", &generate_erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("is_connected", &is_connected);
  m.def("betweenness_centrality", &betweenness_centrality);
}

void define_routing(py::module_& m) {
  py::enum_<WeightStrategy>(m, "WeightStrategy")
      .value("HOP_COUNT", WeightStrategy::HopCount)
      .value("EFFICIENT_PATH", WeightStrategy::EfficientPath)
      .value("BETWEENNESS_EDGE", WeightStrategy::BetweennessEdge)
      .value("DEGREE_BETWEENNESS_EDGE", WeightStrategy::DegreeBetweennessEdge)
      .value("ECHAGUE_CONGESTION", WeightStrategy::EchagueCongestion)
      .value("PROPOSED_CONGESTION", WeightStrategy::ProposedCongestion);

  m.def("node_congestion", &node_congestion_proposed, py::arg("rho"), py::arg("degree"),
        py::arg("effective_betweenness"), py::arg("n"));
  m.def("node_congestion_echague", &node_congestion_echague, py::arg("rho"),
        py::arg("effective_betweenness"), py::arg("n"));
  m.def("node_weight", &node_weight, py::arg("congestion"), py::arg("gamma_exponent"));

  m.def(
      "link_weight",
      [](const Graph& g, WeightStrategy strategy, NodeId i, NodeId j,
         std::optional<std::vector<double>> betweenness, double rho, double gamma, double beta,
         double alpha) {
        return link_weight(g, strategy, make_params(rho, gamma, beta, alpha),
                           make_stats(g, std::move(betweenness)), i, j);
      },
      py::arg("graph"), py::arg("strategy"), py::arg("i"), py::arg("j"),
      py::arg("betweenness") = py::none(), py::arg("rho") = 0.0, py::arg("gamma_exponent") = 1.0,
      py::arg("beta") = 1.0, py::arg("alpha_exponent") = 1.0);

  py::class_<Route>(m, "Route")
      .def_readonly("nodes", &Route::nodes)
      .def_readonly("cost", &Route::cost);

  m.def(
      "least_weight_path",
      [](const Graph& g, WeightStrategy strategy, NodeId src, NodeId dst,
         std::optional<std::vector<double>> betweenness, double rho, double gamma, double beta,
         double alpha) {
        return least_weight_path(g, strategy, make_params(rho, gamma, beta, alpha),
                                 make_stats(g, std::move(betweenness)), src, dst);
      },
      py::arg("graph"), py::arg("strategy"), py::arg("source"), py::arg("destination"),
      py::arg("betweenness") = py::none(), py::arg("rho") = 0.0, py::arg("gamma_exponent") = 1.0,
      py::arg("beta") = 1.0, py::arg("alpha_exponent") = 1.0);

  py::class_<RoutingTable>(m, "RoutingTable")
      .def_property_readonly("node_count", &RoutingTable::node_count)
      .def("next_hop", &RoutingTable::next_hop)
      .def("path_cost", &RoutingTable::path_cost)
      .def("walk", &RoutingTable::walk)
      .def(py::self == py::self);

  m.def(
      "full_table_rebuild",
      [](const Graph& g, WeightStrategy strategy, std::optional<std::vector<double>> betweenness,
         double rho, double gamma, double beta, double alpha) {
        return full_table_rebuild(g, strategy, make_params(rho, gamma, beta, alpha),
                                  make_stats(g, std::move(betweenness)));
      },
      py::arg("graph"), py::arg("strategy"), py::arg("betweenness") = py::none(),
      py::arg("rho") = 0.0, py::arg("gamma_exponent") = 1.0, py::arg("beta") = 1.0,
      py::arg("alpha_exponent") = 1.0);
}

void define_rl(py::module_& m) {
  py::class_<Rng>(m, "Rng").def(py::init<std::uint64_t>(), py::arg("seed"));

  py::class_<QTable>(m, "QTable")
      .def(py::init<std::size_t>(), py::arg("node_count"))
      .def("__call__", &QTable::operator())
      .def("set", &QTable::set)
      .def("greedy_action", &QTable::greedy_action)
      .def("max_value", &QTable::max_value)
      .def_property_readonly("values", [](const QTable& q) {
        auto v = q.values();
        return std::vector<double>(v.begin(), v.end());
      });

  m.def("select_update_action", &select_update_action, py::arg("q"), py::arg("state"),
        py::arg("epsilon"), py::arg("rng"));
  m.def(
      "reward_for_route",
      [](const std::vector<double>& w) { return reward_for_route(std::span<const double>(w)); },
      py::arg("link_weights"));
  m.def(
      "q_update",
      [](QTable& q, NodeId state, NodeId action, double reward, NodeId next_state,
         double learning_rate, double discount) {
        RLParams p;
        p.learning_rate = learning_rate;
        p.discount = discount;
        q_update(q, state, action, reward, next_state, p);
      },
      py::arg("q"), py::arg("state"), py::arg("action"), py::arg("reward"), py::arg("next_state"),
      py::arg("learning_rate") = 0.5, py::arg("discount") = 0.8);
}

void define_experiment(py::module_& m) {
  py::enum_<UpdatePolicy>(m, "UpdatePolicy")
      .value("NONE", UpdatePolicy::None)
      .value("FULL_REBUILD", UpdatePolicy::FullRebuild)
      .value("RANDOM_ONE_PER_NODE", UpdatePolicy::RandomOnePerNode)
      .value("RL_ONE_PER_NODE", UpdatePolicy::RLOnePerNode);
  py::enum_<TrafficPattern>(m, "TrafficPattern")
      .value("BERNOULLI", TrafficPattern::BernoulliRandom)
      .value("POISSON", TrafficPattern::Poisson);
  py::enum_<TopologyModel>(m, "TopologyModel")
      .value("BARABASI_ALBERT", TopologyModel::BarabasiAlbert)
      .value("WATTS_STROGATZ", TopologyModel::WattsStrogatz)
      .value("ERDOS_RENYI", TopologyModel::ErdosRenyi)
      .value("EDGE_LIST", TopologyModel::EdgeList);

  py::class_<MetricsSample>(m, "MetricsSample")
      .def_readonly("window_start", &MetricsSample::window_start)
      .def_readonly("rho", &MetricsSample::rho)
      .def_readonly("avg_path_length", &MetricsSample::avg_path_length)
      .def_readonly("max_betweenness", &MetricsSample::max_betweenness)
      .def_readonly("throughput_pct", &MetricsSample::throughput_pct)
      .def_readonly("max_node_congestion", &MetricsSample::max_node_congestion)
      .def_readonly("in_flight", &MetricsSample::in_flight)
      .def_readonly("dropped_ttl", &MetricsSample::dropped_ttl)
      .def_readonly("generated_in_window", &MetricsSample::generated_in_window)
      .def_readonly("generated_total", &MetricsSample::generated_total)
      .def_readonly("delivered_total", &MetricsSample::delivered_total);

  py::class_<ExperimentSpec>(m, "ExperimentSpec")
      .def_readwrite("name", &ExperimentSpec::name)
      .def_readwrite("repeats", &ExperimentSpec::repeats)
      .def_readwrite("seed", &ExperimentSpec::seed)
      .def_property_readonly("methods",
                             [](const ExperimentSpec& s) {
                               std::vector<std::string> names;
                               for (const auto& m : s.methods) names.push_back(m.name);
                               return names;
                             })
      .def_property(
          "total_steps", [](const ExperimentSpec& s) { return s.sim.total_steps; },
          [](ExperimentSpec& s, std::int64_t v) { s.sim.total_steps = v; })
      .def_property(
          "gamma_exponent", [](const ExperimentSpec& s) { return s.sim.weights.gamma_exponent; },
          [](ExperimentSpec& s, double v) { s.sim.weights.gamma_exponent = v; })
      .def_property(
          "node_count", [](const ExperimentSpec& s) { return s.sim.topology.n; },
          [](ExperimentSpec& s, std::size_t v) { s.sim.topology.n = v; })
      .def("validate", &ExperimentSpec::validate)
      .def("to_json", &write_spec)
      .def(py::self == py::self);

  m.def("parse_spec", [](const std::string& text) { return parse_spec(text); });
  m.def("load_spec", &load_spec);
  m.def("builtin_presets", &builtin_presets);
  m.def("find_preset", [](const std::string& name) { return find_preset(name); });

  m.def(
      "run_simulation",
      [](const ExperimentSpec& spec, const std::string& method, std::uint64_t seed) {
        const SimConfig config = spec.run_config(find_method(spec, method), seed);
        py::gil_scoped_release release;
        return run_simulation(config).samples;
      },
      py::arg("spec"), py::arg("method"), py::arg("seed"));

  py::class_<ComparisonReport>(m, "ComparisonReport")
      .def_readonly("methods", &ComparisonReport::methods)
      .def_readonly("ratios", &ComparisonReport::ratios)
      .def("median", [](const ComparisonReport& r, const std::string& method,
                        const std::string& metric) {
        return r.per_method.at(method).at(metric).median;
      })
      .def("iqr", [](const ComparisonReport& r, const std::string& method,
                     const std::string& metric) { return r.per_method.at(method).at(metric).iqr; })
      .def("to_table", &ComparisonReport::to_table)
      .def("to_json", [](const ComparisonReport& r, const ExperimentSpec& spec) {
        return r.to_json(spec).dump(2);
      });

  m.def(
      "run_suite",
      [](const ExperimentSpec& spec, std::optional<std::filesystem::path> outdir, unsigned jobs) {
        SuiteOptions options;
        options.outdir = std::move(outdir);
        options.jobs = jobs;
        py::gil_scoped_release release;
        return run_suite(spec, options).report;
      },
      py::arg("spec"), py::arg("outdir") = py::none(), py::arg("jobs") = 1);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Congestion-aware routing simulator";

  py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnreachableDestination>(m, "UnreachableDestination", PyExc_RuntimeError);
  py::register_exception<GenerationFailure>(m, "GenerationFailure", PyExc_RuntimeError);
  py::register_exception<SuiteFailure>(m, "SuiteFailure", PyExc_RuntimeError);

  define_graph(m);
  define_routing(m);
  define_rl(m);
  define_experiment(m);
}
