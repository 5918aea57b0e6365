"""Time graphs, exact LP feasibility, useless-edge pruning and conjecture
search campaigns.

The heavy lifting lives in the compiled ``_core`` extension; reports come
back as plain dicts mirroring the CLI's JSON output (rationals are "p/q"
strings, edges are ``[from_city, to_city, layer]`` triples).
"""

from ._core import (
    CertificateError,
    Digraph,
    FormatError,
    InstanceTooLarge,
    StaleDiscrepancy,
    TimeGraph,
    classify_graph,
    enumerate_htps,
    fixture_graph,
    fixture_names,
    hampath_oracle,
    is_hamiltonian,
    is_useless,
    prune,
    prune_single_pass,
    random_digraph,
    random_subgraph,
    reduce_hampath,
    run_campaign,
    solve_lp,
    validate_edge,
)

__all__ = [
    "CertificateError",
    "Digraph",
    "FormatError",
    "InstanceTooLarge",
    "StaleDiscrepancy",
    "TimeGraph",
    "classify_graph",
    "enumerate_htps",
    "fixture_graph",
    "fixture_names",
    "hampath_oracle",
    "is_hamiltonian",
    "is_useless",
    "prune",
    "prune_single_pass",
    "random_digraph",
    "random_subgraph",
    "reduce_hampath",
    "run_campaign",
    "solve_lp",
    "validate_edge",
]
