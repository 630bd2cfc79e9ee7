"""Exact betweenness centrality via graph partitioning."""

from ._skelbc import (
    Graph,
    Partition,
    all_pairs_betweenness,
    auto_partition,
    brandes,
    gen_cycle,
    gen_erdos_renyi,
    gen_path,
    gen_planted_partition,
    gen_star,
    load_graph,
    load_partition,
    oracle_betweenness,
    parse_graph,
    parse_partition,
    partition_assignments,
    refine_with_targets,
    sample_targets,
    skeleton_betweenness,
    skeleton_edge_list,
)

__all__ = [
    "Graph",
    "Partition",
    "all_pairs_betweenness",
    "auto_partition",
    "brandes",
    "gen_cycle",
    "gen_erdos_renyi",
    "gen_path",
    "gen_planted_partition",
    "gen_star",
    "load_graph",
    "load_partition",
    "oracle_betweenness",
    "parse_graph",
    "parse_partition",
    "partition_assignments",
    "refine_with_targets",
    "sample_targets",
    "skeleton_betweenness",
    "skeleton_edge_list",
]
