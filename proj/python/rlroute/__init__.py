"""Congestion-aware routing simulator with reinforcement-learned route refresh."""

from ._core import (
    ComparisonReport,
    ExperimentSpec,
    GenerationFailure,
    Graph,
    InvalidParameter,
    MetricsSample,
    ParseError,
    QTable,
    Rng,
    Route,
    RoutingTable,
    SuiteFailure,
    TopologyModel,
    TrafficPattern,
    UnreachableDestination,
    UpdatePolicy,
    ValidationError,
    WeightStrategy,
    barabasi_albert,
    betweenness_centrality,
    builtin_presets,
    erdos_renyi,
    find_preset,
    full_table_rebuild,
    is_connected,
    least_weight_path,
    link_weight,
    load_spec,
    node_congestion,
    node_congestion_echague,
    node_weight,
    parse_spec,
    q_update,
    reward_for_route,
    run_simulation,
    run_suite,
    select_update_action,
    watts_strogatz,
)

__all__ = [name for name in dir() if not name.startswith("_")]
