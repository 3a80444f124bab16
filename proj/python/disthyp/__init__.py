"""Distributional hypergraph partitioning toolkit.

Thin Python layer over the C++ core: hypergraph structures, instance
generators, QAOA statevector training, the semidefinite relaxation with
hyperplane rounding, and the exact small-instance game solver.
"""

from ._disthyp import (  # noqa: F401
    AggregateMode,
    AggregateQuadratics,
    AnsatzParams,
    BruteResult,
    Direction,
    EdgeQuadratics,
    Evaluation,
    GameCertificate,
    Graph,
    Hypergraph,
    HypergraphFormat,
    KarloffSpec,
    PoissonSpec,
    QuadraticFamily,
    ResourceError,
    SdpOptions,
    SdpResult,
    SpinDistribution,
    StochasticIncidence,
    TrainConfig,
    TrainResult,
    aggregate_quadratics,
    autocorrelation_of,
    brute_force_max_quadratic,
    brute_force_min_quadratic,
    build_family,
    clique_expansion,
    cliques_to_hypergraph,
    edge_quadratics,
    evaluate,
    exact_minimax,
    factorize_elliptope,
    family_pairs,
    karloff_clique_hypergraph,
    karloff_graph,
    lambda_max,
    maximal_cliques,
    poisson_hypergraph,
    read_benson,
    read_hypergraph,
    rounding_autocorrelation,
    run_ansatz,
    sample_hyperplane,
    solve_sdp,
    train,
    write_hypergraph,
    zz_expectations,
)

__all__ = [name for name in dir() if not name.startswith("_")]
