#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rlroute/graph.hpp"
#include "rlroute/random.hpp"

namespace rlroute {

enum class TrafficPattern { BernoulliRandom, Poisson };

std::string_view to_string(TrafficPattern p);
std::optional<TrafficPattern> parse_traffic_pattern(std::string_view name);

// Stepwise generation-rate schedule:
//   rho(t) = min(rho_initial + rho_increment * floor(t / increment_period), rho_max)
struct TrafficConfig {
  TrafficPattern pattern = TrafficPattern::BernoulliRandom;
  double rho_initial = 0.0;
  double rho_increment = 0.001;
  std::int64_t increment_period = 100;
  double rho_max = 0.99;
  std::uint64_t seed = 1;

  void validate() const;  // throws ValidationError
  bool operator==(const TrafficConfig&) const = default;
};

double rho_at(const TrafficConfig& config, std::int64_t t);

struct Packet {
  std::int64_t id = 0;
  NodeId source = 0;
  NodeId destination = 0;
  std::int64_t created_at = 0;
  std::int32_t hops_taken = 0;
  NodeId current_node = 0;
};

// New packets for time t. Sources are visited in ascending id; a Bernoulli
// source emits one packet with probability rho, a Poisson source emits
// Poisson(rho) packets. Destinations are uniform over the other nodes.
// Ids are taken from next_id, which is advanced.
std::vector<Packet> generate_packets(const Graph& g, double rho, TrafficPattern pattern,
                                     std::int64_t t, Rng& rng, std::int64_t& next_id);

}  // namespace rlroute
