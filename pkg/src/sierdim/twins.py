"""Twin vertices and the lower bounds / forced inclusions they imply."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .graph_core import Graph
from .metric import Variant

ADJACENT = "adjacent"
NON_ADJACENT = "non-adjacent"


@dataclass(frozen=True)
class TwinSet:
    members: tuple[int, ...]
    kind: str

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class TwinPartition:
    """Maximal twin sets of a graph, ordered by smallest member.

    ``anomalies`` lists vertices that would be an open twin of one vertex
    and a closed twin of another.  That cannot happen in a simple graph, so
    it should always be empty; it is reported instead of silently merged.
    """

    sets: tuple[TwinSet, ...]
    anomalies: tuple[int, ...] = ()

    @property
    def T(self) -> tuple[int, ...]:
        return tuple(sorted(v for s in self.sets for v in s.members))

    @property
    def k(self) -> int:
        return len(self.sets)

    def set_of(self, v: int) -> TwinSet | None:
        for s in self.sets:
            if v in s.members:
                return s
        return None

    def partner(self, v: int) -> int:
        """The other member of ``v``'s twin set, which must have size 2."""
        s = self.set_of(v)
        if s is None or len(s) != 2:
            raise ValueError(f"vertex {v} has no unique twin partner")
        a, b = s.members
        return b if v == a else a


def find_twins(g: Graph) -> TwinPartition:
    adj = g.adjacency
    by_open: dict[tuple, list[int]] = defaultdict(list)
    by_closed: dict[tuple, list[int]] = defaultdict(list)
    for u in range(g.n):
        by_open[adj[u]].append(u)
        by_closed[tuple(sorted(adj[u] + (u,)))].append(u)

    sets = []
    seen: dict[int, str] = {}
    anomalies = set()
    for groups, kind in ((by_open, NON_ADJACENT), (by_closed, ADJACENT)):
        for key, members in groups.items():
            if len(members) < 2:
                continue
            # exact re-check guards the signature grouping
            ref = set(key)
            for v in members:
                own = set(adj[v]) | ({v} if kind == ADJACENT else set())
                assert own == ref
            for v in members:
                if v in seen and seen[v] != kind:
                    anomalies.add(v)
                seen[v] = kind
            sets.append(TwinSet(tuple(members), kind))
    sets.sort(key=lambda s: s.members[0])
    return TwinPartition(tuple(sets), tuple(sorted(anomalies)))


def are_twins(g: Graph, u: int, v: int) -> bool:
    if u == v:
        return False
    nu, nv = set(g.adjacency[u]), set(g.adjacency[v])
    return nu == nv or nu | {u} == nv | {v}


def twin_lower_bounds(tp: TwinPartition) -> tuple[int, int, int, int]:
    """``(dim, dim', dim_E, dim_E')`` lower bounds: ``|T|-k`` for the plain
    variants and ``|T|`` for the fault-tolerant ones."""
    t = len(tp.T)
    return (t - tp.k, t, t - tp.k, t)


def lower_bound(tp: TwinPartition, variant: Variant) -> int:
    dim, ftdim, dim_e, ftdim_e = twin_lower_bounds(tp)
    return {Variant.MG: dim, Variant.FTMG: ftdim,
            Variant.EMG: dim_e, Variant.FTEMG: ftdim_e}[variant]


@dataclass(frozen=True)
class InclusionConstraint:
    """Any generator must contain at least ``at_least`` vertices of ``members``."""

    members: tuple[int, ...]
    at_least: int


def forced_inclusion(tp: TwinPartition, variant: Variant) -> tuple[InclusionConstraint, ...]:
    out = []
    for s in tp.sets:
        need = len(s) if variant.fault_tolerant else len(s) - 1
        out.append(InclusionConstraint(s.members, need))
    return tuple(out)


def constraints_apply(g: Graph, variant: Variant) -> bool:
    """Whether twin-forced inclusions are sound for ``g``.

    The vertex variants only need twins to be equidistant from every third
    vertex.  The edge variants rely on a common neighbour of each twin pair,
    which a connected graph guarantees once it has three or more vertices.
    """
    return not variant.on_edges or g.n >= 3


def _structural_twins_c4(g: Graph) -> dict[int, int]:
    """Degree-2 vertices lying on a 4-cycle with another degree-2 vertex,
    mapped to that vertex."""
    adj = g.adjacency
    found = {}
    for u in range(g.n):
        if len(adj[u]) != 2:
            continue
        a, b = adj[u]
        for w in set(adj[a]) & set(adj[b]):
            if w == u:
                continue
            # 4-cycle u-a-w-b; the other degree-2 vertex on it
            others = [x for x in (a, w, b) if len(adj[x]) == 2]
            if others:
                found[u] = others[0]
    return found


def check_twin_characterization_c4(r: int) -> bool:
    """Twins of ``S_{C4}^r`` are exactly the degree-2 vertices sharing a
    4-cycle with another degree-2 vertex, and every twin set is a pair."""
    from .graph_core import cycle_graph
    from .sierpinski import build_sierpinski

    if r < 2:
        raise ValueError("characterization is stated for r >= 2")
    g = build_sierpinski(cycle_graph(4), r)
    tp = find_twins(g)
    if any(len(s) != 2 for s in tp.sets):
        return False
    structural = _structural_twins_c4(g)
    if set(structural) != set(tp.T):
        return False
    return all(tp.partner(u) == w for u, w in structural.items())
