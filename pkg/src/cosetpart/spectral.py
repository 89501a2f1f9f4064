"""Transition matrices over the positive alphabet and their exact spectra.

The transition matrix A of a Schreier graph counts positive-letter edges
between cosets; rows and columns all sum to the rank n, the digraph is
strongly connected, and n is the Perron-Frobenius eigenvalue.  The
characteristic data is kept exact: q(z) = det(I - zA) as an integer
polynomial, computed by the Faddeev-LeVerrier recurrence (all divisions
are exact over the integers).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .poly import IntPolynomial
from .schreier import SchreierGraph

Matrix = tuple[tuple[int, ...], ...]


def transition_matrix(graph: SchreierGraph) -> Matrix:
    """a_ij = number of generators stepping vertex i to vertex j."""
    d = graph.d
    rows = [[0] * d for _ in range(d)]
    for perm in graph.action:
        for v, w in enumerate(perm, start=1):
            rows[v - 1][w - 1] += 1
    return tuple(tuple(r) for r in rows)


def is_irreducible(matrix: Matrix) -> bool:
    """True iff the digraph of nonzero entries is strongly connected."""
    d = len(matrix)
    fwd = [[j for j in range(d) if matrix[i][j]] for i in range(d)]
    bwd = [[j for j in range(d) if matrix[j][i]] for i in range(d)]
    for adj in (fwd, bwd):
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        if len(seen) != d:
            return False
    return True


def _digraph_period(succ: list[list[int]]) -> int:
    # gcd over all edges u->v of level(u) + 1 - level(v), levels by BFS
    # from vertex 0; equals the gcd of all closed-walk lengths when the
    # digraph is strongly connected.
    level = {0: 0}
    queue = deque([0])
    order = [0]
    while queue:
        u = queue.popleft()
        for v in succ[u]:
            if v not in level:
                level[v] = level[u] + 1
                order.append(v)
                queue.append(v)
    g = 0
    for u in order:
        for v in succ[u]:
            g = math.gcd(g, level[u] + 1 - level[v])
    return g


def period(graph: SchreierGraph) -> int:
    """Period of the transition matrix: gcd of all closed-walk lengths."""
    succ = [[] for _ in range(graph.d)]
    for perm in graph.action:
        for v, w in enumerate(perm, start=1):
            succ[v - 1].append(w - 1)
    return _digraph_period(succ)


@dataclass(frozen=True)
class SpectralSummary:
    """Exact characteristic data of a transition matrix."""

    period: int
    reciprocal_charpoly: IntPolynomial  # q(z) = det(I - zA), q(0) = 1
    zero_multiplicity: int  # algebraic multiplicity of eigenvalue 0


def _reciprocal_charpoly(matrix: Matrix) -> IntPolynomial:
    # Faddeev-LeVerrier: M_k = A(M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k.
    # det(lambda I - A) = lambda^d + c_1 lambda^(d-1) + ... + c_d, hence
    # det(I - zA) = 1 + c_1 z + ... + c_d z^d.
    d = len(matrix)
    coeffs = [1]
    m = [list(row) for row in matrix]
    for k in range(1, d + 1):
        tr = sum(m[i][i] for i in range(d))
        c, rem = divmod(-tr, k)
        assert rem == 0, "Faddeev-LeVerrier trace division must be exact"
        coeffs.append(c)
        if k == d:
            break
        for i in range(d):
            m[i][i] += c
        m = [
            [
                sum(matrix[i][t] * m[t][j] for t in range(d))
                for j in range(d)
            ]
            for i in range(d)
        ]
    return IntPolynomial(coeffs)


@lru_cache(maxsize=None)
def char_data(matrix: Matrix) -> SpectralSummary:
    """Period, q(z) = det(I - zA), and the multiplicity of eigenvalue 0.

    Requires an irreducible nonnegative integer matrix (every transition
    matrix of a Schreier graph qualifies).
    """
    d = len(matrix)
    for row in matrix:
        if len(row) != d or any(e < 0 for e in row):
            raise ValueError("square nonnegative integer matrix expected")
    if not is_irreducible(matrix):
        raise ValueError("matrix is not irreducible")
    q = _reciprocal_charpoly(matrix)
    succ = [[j for j in range(d) if matrix[i][j]] for i in range(d)]
    return SpectralSummary(
        period=_digraph_period(succ),
        reciprocal_charpoly=q,
        zero_multiplicity=d - q.degree,
    )
