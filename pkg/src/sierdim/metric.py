"""Distance vectors and the four generator predicates.

Variants:

* ``MG``    every vertex pair is resolved by some member of the set
* ``FTMG``  every vertex pair is resolved by at least two members
* ``EMG``   every edge pair is resolved (vertex-edge distance) by some member
* ``FTEMG`` every edge pair is resolved by at least two members

Pairs are scanned in lexicographic order and the first failure is returned
as the witness, so certificates are deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .graph_core import Graph, GraphError


class Variant(enum.Enum):
    MG = "mg"
    FTMG = "ftmg"
    EMG = "emg"
    FTEMG = "ftemg"

    @property
    def fault_tolerant(self) -> bool:
        return self in (Variant.FTMG, Variant.FTEMG)

    @property
    def on_edges(self) -> bool:
        return self in (Variant.EMG, Variant.FTEMG)

    @property
    def resolvers_needed(self) -> int:
        return 2 if self.fault_tolerant else 1

    @property
    def short(self) -> str:
        return {"mg": "dim", "emg": "dimE", "ftmg": "ftdim", "ftemg": "ftdimE"}[self.value]


@dataclass(frozen=True)
class GeneratorCertificate:
    """Verdict of a generator check.

    On rejection ``witness`` holds the unresolved pair (two vertex indices,
    or two edges) and ``resolvers`` the members of the set that do resolve
    it: empty for a plain variant, at most one for a fault-tolerant one.
    """

    variant: Variant
    verdict: bool
    witness: tuple | None = None
    resolvers: tuple[int, ...] = ()

    def __post_init__(self):
        if self.verdict == (self.witness is not None):
            raise ValueError("witness must be present exactly when the verdict is false")

    def __bool__(self) -> bool:
        return self.verdict


def distance_vector(g: Graph, x: int, X: Sequence[int]) -> tuple[int, ...]:
    if len(X) == 0:
        raise GraphError("distance vector needs a non-empty reference set")
    d = g.distances
    return tuple(d[x, u] for u in X)


def vertex_edge_distance(g: Graph, u: int, e: tuple[int, int]) -> int:
    a, b = sorted(e)
    if not g.has_edge(a, b):
        raise GraphError(f"{e} is not an edge")
    d = g.distances
    return min(d[u, a], d[u, b])


def edge_distance_table(g: Graph) -> np.ndarray:
    """``m x n`` array of vertex-edge distances, rows in ``g.edges`` order."""
    raw = g.distances.require_connected()
    if not g.edges:
        return np.zeros((0, g.n), dtype=np.int32)
    ends = np.array(g.edges)
    return np.minimum(raw[ends[:, 0]], raw[ends[:, 1]])


def object_table(g: Graph, on_edges: bool) -> np.ndarray:
    """Rows are the objects to be told apart (vertices or edges), columns
    are candidate landmarks."""
    return edge_distance_table(g) if on_edges else g.distances.require_connected()


def _check(g: Graph, members: Iterable[int], variant: Variant) -> GeneratorCertificate:
    X = sorted(set(int(u) for u in members))
    if not X:
        raise GraphError("candidate set is empty")
    if any(not 0 <= u < g.n for u in X):
        raise GraphError("candidate vertex out of range")
    need = variant.resolvers_needed
    table = object_table(g, variant.on_edges)[:, X]
    for i in range(table.shape[0] - 1):
        diff = table[i + 1:] != table[i]
        count = diff.sum(axis=1)
        bad = np.flatnonzero(count < need)
        if bad.size:
            j = i + 1 + int(bad[0])
            resolvers = tuple(X[c] for c in np.flatnonzero(diff[bad[0]]))
            if variant.on_edges:
                witness = (g.edges[i], g.edges[j])
            else:
                witness = (i, j)
            return GeneratorCertificate(variant, False, witness, resolvers)
    return GeneratorCertificate(variant, True)


def is_metric_generator(g: Graph, X: Iterable[int]) -> GeneratorCertificate:
    return _check(g, X, Variant.MG)


def is_ft_metric_generator(g: Graph, F: Iterable[int]) -> GeneratorCertificate:
    return _check(g, F, Variant.FTMG)


def is_edge_metric_generator(g: Graph, S: Iterable[int]) -> GeneratorCertificate:
    return _check(g, S, Variant.EMG)


def is_ft_edge_metric_generator(g: Graph, F: Iterable[int]) -> GeneratorCertificate:
    return _check(g, F, Variant.FTEMG)


_PREDICATES = {
    Variant.MG: is_metric_generator,
    Variant.FTMG: is_ft_metric_generator,
    Variant.EMG: is_edge_metric_generator,
    Variant.FTEMG: is_ft_edge_metric_generator,
}


def check_generator(g: Graph, members: Iterable[int], variant: Variant) -> GeneratorCertificate:
    return _PREDICATES[variant](g, members)


def leave_one_out(g: Graph, F: Iterable[int], on_edges: bool = False) -> bool:
    """Fault tolerance checked the long way: ``F - {u}`` must be a plain
    generator for every ``u`` in ``F``.  Written without the resolver count
    so it can serve as an oracle for the FT predicates."""
    F = sorted(set(F))
    if len(F) < 2:
        # removing the only landmark leaves nothing; only trivially fine
        # when there is nothing to tell apart
        return (g.m if on_edges else g.n) <= 1
    for u in F:
        rest = [v for v in F if v != u]
        if not _resolves_all_pairs(g, rest, on_edges):
            return False
    return True


def _resolves_all_pairs(g: Graph, X: list[int], on_edges: bool) -> bool:
    # distinct signature vectors, checked by hashing rather than pair counting
    d = g.distances
    if on_edges:
        sigs = {tuple(min(d[w, a], d[w, b]) for w in X) for a, b in g.edges}
        return len(sigs) == g.m
    sigs = {tuple(d[x, w] for w in X) for x in range(g.n)}
    return len(sigs) == g.n


def unresolved_pairs(g: Graph, X: Iterable[int], on_edges: bool = False) -> list[tuple]:
    """Every pair the set fails to resolve at least once."""
    X = sorted(set(X))
    table = object_table(g, on_edges)[:, X]
    objs = g.edges if on_edges else range(g.n)
    out = []
    for (i, a), (j, b) in combinations(enumerate(objs), 2):
        if (table[i] == table[j]).all():
            out.append((a, b))
    return out
