#include "rlroute/traffic.hpp"

#include <algorithm>
#include <cmath>

#include "rlroute/error.hpp"

namespace rlroute {

std::string_view to_string(TrafficPattern p) {
  return p == TrafficPattern::Poisson ? "poisson" : "bernoulli";
}

std::optional<TrafficPattern> parse_traffic_pattern(std::string_view name) {
  if (name == "bernoulli") return TrafficPattern::BernoulliRandom;
  if (name == "poisson") return TrafficPattern::Poisson;
  return std::nullopt;
}

void TrafficConfig::validate() const {
  if (!(rho_max >= 0.0 && rho_max < 1.0)) throw ValidationError("rho_max", "must lie in [0, 1)");
  if (!(rho_initial >= 0.0 && rho_initial <= rho_max)) {
    throw ValidationError("rho_initial", "must lie in [0, rho_max]");
  }
  if (!(rho_increment >= 0.0) || !std::isfinite(rho_increment)) {
    throw ValidationError("rho_increment", "must be a finite value >= 0");
  }
  if (increment_period < 1) throw ValidationError("increment_period", "must be >= 1");
}

double rho_at(const TrafficConfig& config, std::int64_t t) {
  const auto periods = static_cast<double>(t / config.increment_period);
  return std::min(config.rho_initial + config.rho_increment * periods, config.rho_max);
}

std::vector<Packet> generate_packets(const Graph& g, double rho, TrafficPattern pattern,
                                     std::int64_t t, Rng& rng, std::int64_t& next_id) {
  std::vector<Packet> packets;
  const std::size_t n = g.node_count();
  if (!(rho > 0.0) || n < 2) return packets;
  for (NodeId s = 0; static_cast<std::size_t>(s) < n; ++s) {
    const std::uint32_t count =
        pattern == TrafficPattern::BernoulliRandom ? (rng.bernoulli(rho) ? 1u : 0u) : rng.poisson(rho);
    for (std::uint32_t i = 0; i < count; ++i) {
      auto d = static_cast<NodeId>(rng.below(n - 1));
      if (d >= s) ++d;
      packets.push_back({next_id++, s, d, t, 0, s});
    }
  }
  return packets;
}

}  // namespace rlroute
