"""Undirected simple graphs, BFS distances and a few structural predicates.

Vertices are dense indices ``0..n-1``.  Human readable names (Sierpinski
words, for instance) live in ``Graph.labels`` and never take part in
indexing.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

# Marker stored in the raw distance array for unreachable pairs.  It is
# negative on purpose so it can never pass for a hop count.
UNREACHABLE = -1


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` holds sorted ``(u, v)`` pairs with ``u < v`` in lexicographic
    order.  Equality compares ``n`` and ``edges`` only; labels are cosmetic.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @cached_property
    def distances(self) -> "DistanceMatrix":
        return all_pairs_distances(self)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set

    def label(self, u: int) -> str:
        return self.labels[u] if self.labels is not None else str(u)

    def vertex_of(self, token: str) -> int:
        """Resolve a label (or, failing that, a decimal index) to a vertex."""
        if self.labels is not None:
            try:
                return self._label_index[token]
            except KeyError:
                pass
        try:
            u = int(token)
        except ValueError:
            raise GraphError(f"unknown vertex {token!r}") from None
        if not 0 <= u < self.n:
            raise GraphError(f"vertex {u} out of range for n={self.n}")
        return u

    @cached_property
    def _label_index(self) -> dict[str, int]:
        assert self.labels is not None
        return {lab: i for i, lab in enumerate(self.labels)}

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Return the subgraph induced on ``vertices`` (renumbered in the given
        order) together with the list mapping new index -> old index."""
        old = list(vertices)
        pos = {v: i for i, v in enumerate(old)}
        if len(pos) != len(old):
            raise GraphError("duplicate vertices in induced_subgraph")
        sub_edges = []
        for u, v in self.edges:
            if u in pos and v in pos:
                sub_edges.append((pos[u], pos[v]))
        labels = None
        if self.labels is not None:
            labels = [self.labels[v] for v in old]
        return build_graph(len(old), sub_edges, labels), old


def build_graph(n: int, edge_list: Iterable[tuple[int, int]],
                labels: Sequence[str] | None = None) -> Graph:
    """Build a simple graph, symmetrizing and deduplicating ``edge_list``.

    Raises GraphError on a self-loop, an out-of-range endpoint, ``n < 1`` or
    a label list of the wrong length.
    """
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    es = set()
    for u, v in edge_list:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        es.add((u, v) if u < v else (v, u))
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
    return Graph(n, tuple(sorted(es)), labels)


class DistanceMatrix:
    """All-pairs hop counts of a graph.

    ``raw`` is a read-only ``int32`` array holding ``UNREACHABLE`` for
    disconnected pairs.  Indexing with ``d[u, v]`` returns an ``int`` or
    ``math.inf``.
    """

    def __init__(self, raw: np.ndarray):
        raw = np.asarray(raw, dtype=np.int32)
        raw.setflags(write=False)
        self.raw = raw

    @property
    def n(self) -> int:
        return self.raw.shape[0]

    def __getitem__(self, uv: tuple[int, int]) -> int | float:
        x = int(self.raw[uv])
        return math.inf if x == UNREACHABLE else x

    @property
    def connected(self) -> bool:
        return bool((self.raw != UNREACHABLE).all())

    def require_connected(self) -> np.ndarray:
        """Return ``raw``, raising if any pair is unreachable."""
        if not self.connected:
            raise GraphError("graph is not connected")
        return self.raw


def bfs_from(g: Graph, source: int) -> list[int]:
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(np.array([bfs_from(g, s) for s in range(g.n)], dtype=np.int32))


def is_connected(g: Graph) -> bool:
    return UNREACHABLE not in bfs_from(g, 0)


@dataclass(frozen=True)
class BipartiteCheck:
    """Outcome of ``is_bipartite``.

    Exactly one of ``coloring`` (a proper 2-coloring) and ``odd_cycle`` (a
    closed walk of odd length, listed without repeating the start) is set.
    """

    bipartite: bool
    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(g: Graph) -> BipartiteCheck:
    color = [-1] * g.n
    parent = [-1] * g.n
    adj = g.adjacency
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return BipartiteCheck(False, odd_cycle=_odd_cycle(parent, u, w))
    return BipartiteCheck(True, coloring=tuple(color))


def _odd_cycle(parent: list[int], u: int, w: int) -> tuple[int, ...]:
    # u and w are adjacent, same BFS colour, so the tree paths to their
    # lowest common ancestor plus the edge uw close an odd cycle.
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    path_w = [w]
    while parent[path_w[-1]] != -1:
        path_w.append(parent[path_w[-1]])
    on_u = {v: i for i, v in enumerate(path_u)}
    j = 0
    while path_w[j] not in on_u:
        j += 1
    i = on_u[path_w[j]]
    return tuple(path_u[: i + 1] + path_w[:j][::-1])


# -- text formats -----------------------------------------------------------

def to_adjacency_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_adjacency_text(text: str) -> Graph:
    """Parse the ``n m`` header + ``m`` edge lines format (0-based)."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphError("empty adjacency file")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed adjacency file: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    if g.labels is not None:
        lines.extend(f'  {u} [label="{lab}"];' for u, lab in enumerate(g.labels))
    else:
        lines.extend(f"  {u};" for u in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- small named graphs -----------------------------------------------------

def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def named_graph(name: str) -> Graph:
    """Builtin graphs: ``Cn``, ``Kn``, ``Pn`` (``C4``, ``K3``, ``P5`` ...)."""
    kinds = {"C": cycle_graph, "K": complete_graph, "P": path_graph}
    kind, size = name[:1].upper(), name[1:]
    if kind not in kinds or not size.isdigit():
        raise GraphError(f"unknown builtin graph {name!r} (expected Cn, Kn or Pn)")
    return kinds[kind](int(size))
