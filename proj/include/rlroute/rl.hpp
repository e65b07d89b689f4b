#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rlroute/graph.hpp"
#include "rlroute/random.hpp"
#include "rlroute/routing.hpp"

namespace rlroute {

struct RLParams {
  double learning_rate = 0.5;
  double discount = 0.8;
  double epsilon = 0.1;
  // 0 keeps epsilon constant; otherwise epsilon falls linearly to 0 over
  // this many steps.
  std::int64_t epsilon_decay_steps = 0;
  std::uint64_t seed = 1;

  void validate() const;  // throws ValidationError
  double epsilon_at(std::int64_t t) const;

  bool operator==(const RLParams&) const = default;
};

// Action values over (state node, destination) pairs, dense n x n with the
// diagonal never written. All entries start at zero.
class QTable {
 public:
  QTable() = default;
  explicit QTable(std::size_t node_count) : n_(node_count), values_(node_count * node_count, 0.0) {}

  std::size_t node_count() const noexcept { return n_; }
  double operator()(NodeId state, NodeId action) const { return values_[index(state, action)]; }
  void set(NodeId state, NodeId action, double value);

  // Highest value over actions != state; ties to the lowest destination id.
  NodeId greedy_action(NodeId state) const;
  double max_value(NodeId state) const;

  std::span<const double> values() const noexcept { return values_; }
  bool operator==(const QTable&) const = default;

 private:
  std::size_t index(NodeId s, NodeId a) const { return static_cast<std::size_t>(s) * n_ + a; }

  std::size_t n_ = 0;
  std::vector<double> values_;
};

// Epsilon-greedy: with probability epsilon a uniform destination != state,
// otherwise the greedy action. Exactly one coin is drawn per call, plus one
// index draw when exploring.
NodeId select_update_action(const QTable& q, NodeId state, double epsilon, Rng& rng);

// Mean over the path's links of 1 / w. Weights must be >= 1, so the result
// lies in (0, 1]. Throws EmptyPath when there are no links.
double reward_for_route(std::span<const double> link_weights);
double reward_for_route(const LinkWeights& weights, std::span<const NodeId> path);

// Q(s,a) += lr * (r + discount * max_a' Q(s',a') - Q(s,a)), with a' ranging
// over destinations other than s'.
void q_update(QTable& q, NodeId state, NodeId action, double reward, NodeId next_state,
              const RLParams& params);

struct RlStepResult {
  std::vector<NodeId> destinations;  // chosen action per node
  std::vector<double> rewards;
  std::vector<Route> routes;
};

// One learning round against a frozen weight snapshot: every node, in
// ascending id, picks a destination, refreshes that single route, is rewarded
// by the new route's reciprocal weights and updates Q with next_state equal
// to the chosen destination.
RlStepResult rl_step(QTable& q, RoutingTable& table, const Graph& g, const LinkWeights& weights,
                     const RLParams& params, double epsilon, Rng& rng);

// CSV "state,action,q", one row per nonzero entry in (state, action) order.
void write_qtable_csv(std::ostream& out, const QTable& q);

}  // namespace rlroute
