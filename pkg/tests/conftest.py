"""Shared fixtures: the hand-built golden graphs and the generated corpus.

The corpus is the fixed family the property suites run over: one
partition per (rank, depth, seed) combination with ranks 1..3 and depths
0..3, all valid by construction.
"""

import pytest

from cosetpart.partition import PartitionSpec, generate_partition, _kernel_graph
from cosetpart.schreier import coset, from_permutations, subgroup_coset

CORPUS_KEYS = [
    (rank, depth, seed)
    for rank in (1, 2, 3)
    for depth in (0, 1, 2, 3)
    for seed in (1, 2)
]


@pytest.fixture(scope="session")
def corpus():
    return {key: generate_partition(*key) for key in CORPUS_KEYS}


@pytest.fixture(scope="session")
def fig1_graph():
    # both generators advance the 4-cycle H -> Ha -> Ha^2 -> Ha^3 -> H
    return from_permutations(2, [(2, 3, 4, 1), (2, 3, 4, 1)])


@pytest.fixture(scope="session")
def mod2_graph():
    # kernel of F_2 ->> Z/2 (both generators to the nontrivial element)
    return from_permutations(2, [(2, 1), (2, 1)])


@pytest.fixture(scope="session")
def s3_kernel_graph():
    # kernel of F_2 ->> S_3 with a -> (1 2), b -> (1 2 3): index 6, aperiodic
    return _kernel_graph(2, ((1, 0, 2), (1, 2, 0)))


@pytest.fixture(scope="session")
def mod2_partition(mod2_graph):
    return PartitionSpec(2, (subgroup_coset(mod2_graph), coset(mod2_graph, (1,))))


@pytest.fixture(scope="session")
def fig1_transversal_partition(fig1_graph):
    members = tuple(coset(fig1_graph, (1,) * r) for r in range(4))
    return PartitionSpec(2, members)


@pytest.fixture(scope="session")
def graph_family(fig1_graph, mod2_graph, s3_kernel_graph):
    """Small zoo of structurally different graphs for invariant sweeps."""
    from cosetpart.partition import z_to_schreier

    return {
        "trivial_f2": from_permutations(2, [(1,), (1,)]),
        "fig1": fig1_graph,
        "mod2": mod2_graph,
        "s3_kernel": s3_kernel_graph,
        "cycle3_z": z_to_schreier(3, 0)[0],
        "cycle5_z": z_to_schreier(5, 0)[0],
        "mod4_f3": from_permutations(3, [(2, 3, 4, 1), (2, 3, 4, 1), (2, 3, 4, 1)]),
    }
