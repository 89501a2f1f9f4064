"""Schreier graphs of finite-index subgroups of a free group.

A graph is the complete deterministic co-deterministic labelled graph
on the d right cosets of a subgroup H: one permutation of {1..d} per
generator, with a basepoint representing H itself.  Construction is
either by folding a wedge of generator loops (fold) or from explicit
permutations (from_permutations).  Vertices are numbered 1..d with the
basepoint equal to 1; fold numbers the remaining vertices by BFS
discovery order over positive letters so that outputs are stable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .words import InvalidLetter, Word, check_rank, reduce_word


class InfiniteIndex(Exception):
    """The folded core graph is not complete: the subgroup has infinite index."""


class NotTransitive(ValueError):
    """The permutation data does not define a connected coset space."""


@dataclass(frozen=True)
class SchreierGraph:
    """Labelled coset graph: action[a-1][v-1] is the vertex reached from v by
    the a-th generator.  Each letter acts as a permutation of 1..d and the
    action is transitive from the basepoint over positive letters alone."""

    action: tuple[tuple[int, ...], ...]
    basepoint: int = 1

    def __post_init__(self):
        if not self.action:
            raise ValueError("need at least one generator letter")
        d = len(self.action[0])
        if d < 1:
            raise ValueError("need at least one vertex")
        for a, perm in enumerate(self.action, start=1):
            if len(perm) != d or sorted(perm) != list(range(1, d + 1)):
                raise ValueError(f"letter {a}: action is not a permutation of 1..{d}")
        if not 1 <= self.basepoint <= d:
            raise ValueError(f"basepoint {self.basepoint} not in 1..{d}")
        seen = {self.basepoint}
        queue = deque([self.basepoint])
        while queue:
            v = queue.popleft()
            for perm in self.action:
                w = perm[v - 1]
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != d:
            raise NotTransitive(
                f"only {len(seen)} of {d} vertices reachable from the basepoint"
            )

    @property
    def rank(self) -> int:
        return len(self.action)

    @property
    def d(self) -> int:
        """Number of vertices = index of the subgroup."""
        return len(self.action[0])

    @cached_property
    def inverse_action(self) -> tuple[tuple[int, ...], ...]:
        inv = []
        for perm in self.action:
            back = [0] * len(perm)
            for v, w in enumerate(perm, start=1):
                back[w - 1] = v
            inv.append(tuple(back))
        return tuple(inv)


@dataclass(frozen=True)
class Coset:
    """A right coset H*rep, identified with a vertex of the Schreier graph."""

    graph: SchreierGraph
    vertex: int
    rep: Word

    def __post_init__(self):
        if not 1 <= self.vertex <= self.graph.d:
            raise ValueError(f"vertex {self.vertex} out of range")
        if resolve(self.graph, self.rep) != self.vertex:
            raise ValueError("representative word does not resolve to the vertex")


def from_permutations(rank: int, perms, basepoint: int = 1) -> SchreierGraph:
    """Build a graph from one permutation of 1..d per generator.

    Raises NotTransitive if the data does not define a connected coset
    space, ValueError if some list is not a permutation.
    """
    check_rank(rank)
    if len(perms) != rank:
        raise ValueError(f"expected {rank} permutations, got {len(perms)}")
    return SchreierGraph(tuple(tuple(p) for p in perms), basepoint)


def trivial_graph(rank: int) -> SchreierGraph:
    """The one-vertex graph of the whole group (every letter a loop)."""
    check_rank(rank)
    return SchreierGraph(((1,),) * rank)


def fold(rank: int, generators) -> SchreierGraph:
    """Fold the wedge of generator loops into the Schreier graph of
    H = <generators>.

    Standard Stallings folding: start from one loop per generator at the
    basepoint, merge vertices while some vertex carries two equal-label
    edges in the same direction, then test completeness.  The folded core
    recognises exactly H; it is the Schreier graph iff every vertex has an
    outgoing edge for every letter.  Raises InfiniteIndex otherwise.
    """
    check_rank(rank)
    gens = [reduce_word(g, rank) for g in generators]
    if not gens:
        raise ValueError("generators must be nonempty")

    parent = [0]
    out: list[list[list[int]]] = [[[] for _ in range(rank)]]
    inc: list[list[list[int]]] = [[[] for _ in range(rank)]]

    def new_vertex() -> int:
        parent.append(len(parent))
        out.append([[] for _ in range(rank)])
        inc.append([[] for _ in range(rank)])
        return len(parent) - 1

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x: int, y: int) -> int:
        # keep the smaller id so the basepoint 0 always survives
        x, y = find(x), find(y)
        if x == y:
            return x
        if x > y:
            x, y = y, x
        parent[y] = x
        for a in range(rank):
            out[x][a].extend(out[y][a])
            inc[x][a].extend(inc[y][a])
            out[y][a] = inc[y][a] = []
        return x

    base = 0
    for g in gens:
        prev = base
        for i, x in enumerate(g):
            tgt = base if i == len(g) - 1 else new_vertex()
            if x > 0:
                out[prev][x - 1].append(tgt)
                inc[tgt][x - 1].append(prev)
            else:
                out[tgt][-x - 1].append(prev)
                inc[prev][-x - 1].append(tgt)
            prev = tgt

    # fold to a fixpoint; each merge strictly decreases the class count
    while True:
        merged = False
        for v in range(len(parent)):
            if find(v) != v:
                continue
            for table in (out, inc):
                for a in range(rank):
                    ids = sorted({find(t) for t in table[v][a]})
                    if len(ids) > 1:
                        keep = ids[0]
                        for other in ids[1:]:
                            keep = union(keep, other)
                        merged = True
        if not merged:
            break

    live = [v for v in range(len(parent)) if find(v) == v]
    step: dict[tuple[int, int], int] = {}
    for v in live:
        for a in range(rank):
            targets = {find(t) for t in out[v][a]}
            if not targets:
                raise InfiniteIndex(
                    f"folded core is incomplete (no letter-{a + 1} edge at some "
                    f"vertex): the subgroup has infinite index"
                )
            assert len(targets) == 1
            step[v, a] = targets.pop()

    # renumber: basepoint first, then BFS discovery order over positive letters
    order = [find(base)]
    number = {find(base): 1}
    queue = deque(order)
    while queue:
        v = queue.popleft()
        for a in range(rank):
            w = step[v, a]
            if w not in number:
                number[w] = len(number) + 1
                order.append(w)
                queue.append(w)
    assert len(number) == len(live), "folded core must be connected"
    action = tuple(
        tuple(number[step[v, a]] for v in order) for a in range(rank)
    )
    return SchreierGraph(action)


def resolve(graph: SchreierGraph, word: Word) -> int:
    """Vertex of the coset H*word; inverse letters walk permutations backwards."""
    v = graph.basepoint
    act = graph.action
    inv = graph.inverse_action
    rank = graph.rank
    for x in word:
        if not 1 <= abs(x) <= rank:
            raise InvalidLetter(f"letter {x} not in range 1..{rank} (signed)")
        v = act[x - 1][v - 1] if x > 0 else inv[-x - 1][v - 1]
    return v


def coset(graph: SchreierGraph, rep) -> Coset:
    """The coset of the (reduced) representative word."""
    rep = reduce_word(rep, graph.rank)
    return Coset(graph, resolve(graph, rep), rep)


def subgroup_coset(graph: SchreierGraph) -> Coset:
    return Coset(graph, graph.basepoint, ())


def membership(cst: Coset, word: Word) -> bool:
    """True iff the word lies in the coset, i.e. resolves to its vertex."""
    return resolve(cst.graph, word) == cst.vertex


def transversal(graph: SchreierGraph) -> tuple[Word, ...]:
    """Positive coset representatives t_v, indexed by vertex - 1.

    BFS from the basepoint with letters scanned in index order, so each
    t_v is the shortlex-least label of a tree path; t_basepoint is empty.
    """
    reps: dict[int, Word] = {graph.basepoint: ()}
    queue = deque([graph.basepoint])
    while queue:
        v = queue.popleft()
        for a in range(1, graph.rank + 1):
            w = graph.action[a - 1][v - 1]
            if w not in reps:
                reps[w] = reps[v] + (a,)
                queue.append(w)
    return tuple(reps[v] for v in range(1, graph.d + 1))
