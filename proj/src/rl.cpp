#include "rlroute/rl.hpp"

#include <iomanip>
#include <ostream>

#include "rlroute/error.hpp"

namespace rlroute {

void RLParams::validate() const {
  if (!(learning_rate > 0.0 && learning_rate <= 1.0)) {
    throw ValidationError("learning_rate", "must lie in (0, 1]");
  }
  if (!(discount >= 0.0 && discount < 1.0)) {
    throw ValidationError("discount", "must lie in [0, 1)");
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw ValidationError("epsilon", "must lie in [0, 1]");
  }
  if (epsilon_decay_steps < 0) {
    throw ValidationError("epsilon_decay_steps", "must be >= 0");
  }
}

double RLParams::epsilon_at(std::int64_t t) const {
  if (epsilon_decay_steps <= 0) return epsilon;
  if (t >= epsilon_decay_steps) return 0.0;
  return epsilon * (1.0 - static_cast<double>(t) / static_cast<double>(epsilon_decay_steps));
}

void QTable::set(NodeId state, NodeId action, double value) {
  if (state == action) throw InvalidParameter("a node never routes to itself");
  values_[index(state, action)] = value;
}

NodeId QTable::greedy_action(NodeId state) const {
  NodeId best = -1;
  double best_value = 0.0;
  for (NodeId a = 0; static_cast<std::size_t>(a) < n_; ++a) {
    if (a == state) continue;
    const double v = values_[index(state, a)];
    if (best < 0 || v > best_value) {
      best = a;
      best_value = v;
    }
  }
  return best;
}

double QTable::max_value(NodeId state) const {
  const NodeId a = greedy_action(state);
  return a < 0 ? 0.0 : values_[index(state, a)];
}

NodeId select_update_action(const QTable& q, NodeId state, double epsilon, Rng& rng) {
  const std::size_t n = q.node_count();
  if (n < 2) throw InvalidParameter("action selection needs at least two nodes");
  if (rng.uniform01() < epsilon) {
    const auto pick = static_cast<NodeId>(rng.below(n - 1));
    return pick >= state ? pick + 1 : pick;
  }
  return q.greedy_action(state);
}

double reward_for_route(std::span<const double> link_weights) {
  if (link_weights.empty()) throw EmptyPath("reward requires a route with at least one link");
  double sum = 0.0;
  for (double w : link_weights) {
    if (!(w >= 1.0)) throw InvalidParameter("reward link weights must be >= 1");
    sum += 1.0 / w;
  }
  return sum / static_cast<double>(link_weights.size());
}

double reward_for_route(const LinkWeights& weights, std::span<const NodeId> path) {
  if (path.size() < 2) throw EmptyPath("reward requires a route with at least one link");
  std::vector<double> w;
  w.reserve(path.size() - 1);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) w.push_back(weights(path[i], path[i + 1]));
  return reward_for_route(w);
}

void q_update(QTable& q, NodeId state, NodeId action, double reward, NodeId next_state,
              const RLParams& params) {
  const double current = q(state, action);
  const double target = reward + params.discount * q.max_value(next_state);
  q.set(state, action, current + params.learning_rate * (target - current));
}

RlStepResult rl_step(QTable& q, RoutingTable& table, const Graph& g, const LinkWeights& weights,
                     const RLParams& params, double epsilon, Rng& rng) {
  const std::size_t n = g.node_count();
  RlStepResult result;
  result.destinations.resize(n);
  result.rewards.resize(n);

  // A node's choice reads only its own Q row, which only its own update
  // writes, so choosing every action up front matches the sequential order.
  std::vector<RouteRequest> requests(n);
  for (NodeId s = 0; static_cast<std::size_t>(s) < n; ++s) {
    const NodeId d = select_update_action(q, s, epsilon, rng);
    result.destinations[s] = d;
    requests[s] = {s, d};
  }
  result.routes = update_routes(table, g, weights, requests);

  for (NodeId s = 0; static_cast<std::size_t>(s) < n; ++s) {
    const NodeId d = result.destinations[s];
    const double reward = reward_for_route(weights, result.routes[s].nodes);
    result.rewards[s] = reward;
    q_update(q, s, d, reward, d, params);
  }
  return result;
}

void write_qtable_csv(std::ostream& out, const QTable& q) {
  out << "state,action,q\n";
  const auto n = static_cast<NodeId>(q.node_count());
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId a = 0; a < n; ++a) {
      if (s != a && q(s, a) != 0.0) out << s << ',' << a << ',' << q(s, a) << '\n';
    }
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace rlroute
