#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "rlroute/error.hpp"
#include "rlroute/experiment.hpp"

namespace rlroute {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string_view to_string(TopologyModel m) {
  switch (m) {
    case TopologyModel::BarabasiAlbert: return "barabasi_albert";
    case TopologyModel::WattsStrogatz: return "watts_strogatz";
    case TopologyModel::ErdosRenyi: return "erdos_renyi";
    case TopologyModel::EdgeList: return "edge_list";
  }
  return "unknown";
}

std::optional<TopologyModel> parse_topology_model(std::string_view name) {
  for (auto m : {TopologyModel::BarabasiAlbert, TopologyModel::WattsStrogatz,
                 TopologyModel::ErdosRenyi, TopologyModel::EdgeList}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

// Reads one JSON object, remembering which keys were consumed so leftovers
// can be reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ValidationError(where(), "expected an object");
  }

  bool has(const char* key) const { return j_.contains(key); }

  const json* child(const char* key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  std::string field(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

  void read(const char* key, double& out) {
    if (const json* v = child(key)) {
      if (!v->is_number()) throw ValidationError(field(key), "expected a number");
      out = v->get<double>();
    }
  }

  void read(const char* key, std::int64_t& out) {
    if (const json* v = child(key)) {
      if (!v->is_number_integer()) throw ValidationError(field(key), "expected an integer");
      out = v->get<std::int64_t>();
    }
  }

  void read(const char* key, int& out) {
    std::int64_t wide = out;
    read(key, wide);
    out = static_cast<int>(wide);
  }

  void read(const char* key, std::size_t& out) {
    if (const json* v = child(key)) {
      if (!v->is_number_unsigned()) throw ValidationError(field(key), "expected a non-negative integer");
      out = v->get<std::size_t>();
    }
  }

  void read_seed(const char* key, std::uint64_t& out) {
    if (const json* v = child(key)) {
      if (!v->is_number_unsigned()) throw ValidationError(field(key), "expected a non-negative integer");
      out = v->get<std::uint64_t>();
    }
  }

  void read(const char* key, std::string& out) {
    if (const json* v = child(key)) {
      if (!v->is_string()) throw ValidationError(field(key), "expected a string");
      out = v->get<std::string>();
    }
  }

  template <class Enum, class Parser>
  void read_enum(const char* key, Enum& out, Parser parse) {
    std::string name;
    if (!has(key)) {
      seen_.insert(key);
      return;
    }
    read(key, name);
    auto parsed = parse(name);
    if (!parsed) throw ValidationError(field(key), "unknown value \"" + name + "\"");
    out = *parsed;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.contains(it.key())) throw ValidationError(field(it.key().c_str()), "unknown key");
    }
  }

 private:
  std::string where() const { return path_.empty() ? "<root>" : path_; }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

TopologySpec read_topology(const json& j, const std::string& path) {
  ObjectReader r(j, path);
  TopologySpec t;
  r.read_enum("model", t.model, parse_topology_model);
  r.read("n", t.n);
  r.read("m", t.m);
  r.read("k", t.k);
  r.read("p_rewire", t.p_rewire);
  r.read("p", t.p);
  r.read("path", t.edge_list_path);
  r.finish();
  return t;
}

SimConfig read_sim(const json& j) {
  ObjectReader r(j, "sim");
  SimConfig sim;
  if (const json* t = r.child("topology")) sim.topology = read_topology(*t, "sim.topology");
  r.read_enum("strategy", sim.strategy, parse_weight_strategy);
  r.read_enum("update_policy", sim.update_policy, parse_update_policy);
  if (const json* w = r.child("weights")) {
    ObjectReader wr(*w, "sim.weights");
    wr.read("gamma_exponent", sim.weights.gamma_exponent);
    wr.read("beta", sim.weights.beta);
    wr.read("alpha_exponent", sim.weights.alpha_exponent);
    wr.finish();
  }
  if (const json* rl = r.child("rl")) {
    ObjectReader rr(*rl, "sim.rl");
    rr.read("learning_rate", sim.rl.learning_rate);
    rr.read("discount", sim.rl.discount);
    rr.read("epsilon", sim.rl.epsilon);
    rr.read("epsilon_decay_steps", sim.rl.epsilon_decay_steps);
    rr.finish();
  }
  if (const json* tr = r.child("traffic")) {
    ObjectReader tr_r(*tr, "sim.traffic");
    tr_r.read_enum("pattern", sim.traffic.pattern, parse_traffic_pattern);
    tr_r.read("rho_initial", sim.traffic.rho_initial);
    tr_r.read("rho_increment", sim.traffic.rho_increment);
    tr_r.read("increment_period", sim.traffic.increment_period);
    tr_r.read("rho_max", sim.traffic.rho_max);
    tr_r.finish();
  }
  r.read("total_steps", sim.total_steps);
  r.read("metric_window", sim.metric_window);
  r.read("ttl", sim.ttl);
  r.read("buffer_capacity", sim.buffer_capacity);
  r.read("drain_steps", sim.drain_steps);
  r.finish();
  return sim;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + end, '\n'));
}

}  // namespace

SimConfig ExperimentSpec::run_config(const Method& method, std::uint64_t run_seed) const {
  SimConfig c = sim;
  c.strategy = method.strategy;
  c.update_policy = method.update_policy;
  c.topology_seed = run_seed;
  c.traffic.seed = run_seed;
  c.rl.seed = run_seed;
  return c;
}

bool ExperimentSpec::operator==(const ExperimentSpec& other) const {
  // Per-run seeds inside `sim` are derived from `seed` and are not part of
  // the experiment's identity.
  auto strip = [](SimConfig c) {
    c.topology_seed = 0;
    c.traffic.seed = 0;
    c.rl.seed = 0;
    return c;
  };
  return name == other.name && repeats == other.repeats && seed == other.seed &&
         methods == other.methods && strip(sim) == strip(other.sim);
}

void ExperimentSpec::validate() const {
  if (name.empty()) throw ValidationError("name", "must not be empty");
  if (name.find_first_of("/\\") != std::string::npos) {
    throw ValidationError("name", "must not contain path separators");
  }
  if (repeats < 1) throw ValidationError("repeats", "must be >= 1");
  if (methods.empty()) throw ValidationError("methods", "must list at least one method");
  std::set<std::string> names;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    const std::string field = "methods[" + std::to_string(i) + "].name";
    if (methods[i].name.empty()) throw ValidationError(field, "must not be empty");
    if (methods[i].name.find_first_of("/\\") != std::string::npos) {
      throw ValidationError(field, "must not contain path separators");
    }
    if (!names.insert(methods[i].name).second) throw ValidationError(field, "duplicate method name");
  }
  try {
    sim.validate();
  } catch (const ValidationError& e) {
    throw ValidationError("sim." + e.field(), e.message());
  }
  const auto& t = sim.topology;
  switch (t.model) {
    case TopologyModel::BarabasiAlbert:
      if (t.m < 1 || t.n <= t.m) throw ValidationError("sim.topology.m", "requires n > m >= 1");
      break;
    case TopologyModel::WattsStrogatz:
      if (t.k < 2 || t.k % 2 != 0 || t.k >= t.n) {
        throw ValidationError("sim.topology.k", "requires an even k with 2 <= k < n");
      }
      if (!(t.p_rewire >= 0.0 && t.p_rewire <= 1.0)) {
        throw ValidationError("sim.topology.p_rewire", "must lie in [0, 1]");
      }
      break;
    case TopologyModel::ErdosRenyi:
      if (t.n < 2) throw ValidationError("sim.topology.n", "must be >= 2");
      if (!(t.p >= 0.0 && t.p <= 1.0)) throw ValidationError("sim.topology.p", "must lie in [0, 1]");
      break;
    case TopologyModel::EdgeList:
      if (t.edge_list_path.empty()) throw ValidationError("sim.topology.path", "must be set");
      break;
  }
  if (t.model != TopologyModel::EdgeList && sim.ttl != 0 &&
      sim.ttl < static_cast<std::int64_t>(t.n)) {
    throw ValidationError("sim.ttl", "must be >= the node count");
  }
}

ExperimentSpec parse_spec(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
  }

  ObjectReader r(root, "");
  std::int64_t version = -1;
  r.read("schema_version", version);
  if (version != kSpecSchemaVersion) {
    throw ValidationError("schema_version", "expected " + std::to_string(kSpecSchemaVersion));
  }
  ExperimentSpec spec;
  r.read("name", spec.name);
  r.read("repeats", spec.repeats);
  r.read_seed("seed", spec.seed);
  if (const json* s = r.child("sim")) spec.sim = read_sim(*s);
  if (const json* ms = r.child("methods")) {
    if (!ms->is_array()) throw ValidationError("methods", "expected an array");
    for (std::size_t i = 0; i < ms->size(); ++i) {
      ObjectReader mr((*ms)[i], "methods[" + std::to_string(i) + "]");
      Method m;
      mr.read("name", m.name);
      mr.read_enum("strategy", m.strategy, parse_weight_strategy);
      mr.read_enum("update_policy", m.update_policy, parse_update_policy);
      mr.finish();
      spec.methods.push_back(std::move(m));
    }
  }
  r.finish();
  spec.sim.topology_seed = spec.seed;
  spec.sim.traffic.seed = spec.seed;
  spec.sim.rl.seed = spec.seed;
  spec.validate();
  return spec;
}

ExperimentSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

ordered_json spec_to_json(const ExperimentSpec& spec) {
  const SimConfig& s = spec.sim;
  ordered_json topology = {{"model", to_string(s.topology.model)}, {"n", s.topology.n}};
  switch (s.topology.model) {
    case TopologyModel::BarabasiAlbert: topology["m"] = s.topology.m; break;
    case TopologyModel::WattsStrogatz:
      topology["k"] = s.topology.k;
      topology["p_rewire"] = s.topology.p_rewire;
      break;
    case TopologyModel::ErdosRenyi: topology["p"] = s.topology.p; break;
    case TopologyModel::EdgeList: topology["path"] = s.topology.edge_list_path; break;
  }

  ordered_json methods = ordered_json::array();
  for (const auto& m : spec.methods) {
    methods.push_back({{"name", m.name},
                       {"strategy", to_string(m.strategy)},
                       {"update_policy", to_string(m.update_policy)}});
  }

  return {
      {"schema_version", kSpecSchemaVersion},
      {"name", spec.name},
      {"repeats", spec.repeats},
      {"seed", spec.seed},
      {"sim",
       {{"topology", topology},
        {"strategy", to_string(s.strategy)},
        {"update_policy", to_string(s.update_policy)},
        {"weights",
         {{"gamma_exponent", s.weights.gamma_exponent},
          {"beta", s.weights.beta},
          {"alpha_exponent", s.weights.alpha_exponent}}},
        {"rl",
         {{"learning_rate", s.rl.learning_rate},
          {"discount", s.rl.discount},
          {"epsilon", s.rl.epsilon},
          {"epsilon_decay_steps", s.rl.epsilon_decay_steps}}},
        {"traffic",
         {{"pattern", to_string(s.traffic.pattern)},
          {"rho_initial", s.traffic.rho_initial},
          {"rho_increment", s.traffic.rho_increment},
          {"increment_period", s.traffic.increment_period},
          {"rho_max", s.traffic.rho_max}}},
        {"total_steps", s.total_steps},
        {"metric_window", s.metric_window},
        {"ttl", s.ttl},
        {"buffer_capacity", s.buffer_capacity},
        {"drain_steps", s.drain_steps}}},
      {"methods", methods},
  };
}

std::string write_spec(const ExperimentSpec& spec) { return spec_to_json(spec).dump(2) + "\n"; }

}  // namespace rlroute
