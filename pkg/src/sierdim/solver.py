"""Exact minimum generators for the four variants.

``exact_dimension`` searches candidate sizes upward from the twin lower
bound.  Within a size it runs an include-first depth-first search over the
vertices in index order, so the first accepted set is the lexicographically
smallest basis of that size.  Each vertex carries a Python-int bitmask of
the object pairs it resolves; a candidate is accepted when the union (or,
for fault-tolerant variants, the twice-covered part) is full.

``brute_force_dimension`` is the reference oracle.  It shares nothing with
the search apart from the generator predicates in ``metric``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph_core import Graph, GraphError
from .metric import Variant, check_generator, object_table
from .twins import constraints_apply, find_twins, lower_bound

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 5_000_000
BRUTE_FORCE_MAX_N = 16

SOLVED = "solved"
BOUNDED = "bounded"


class BudgetExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a dimension computation.

    When ``status`` is ``"bounded"`` the budget ran out: ``value`` is None
    and the dimension lies in ``[lower, upper]``; ``basis`` is then the best
    generator found (of size ``upper``), not a proven basis.
    """

    variant: Variant
    value: int | None
    basis: tuple[int, ...]
    nodes_explored: int
    bound_used: int
    status: str = SOLVED
    lower: int = 0
    upper: int = 0

    @property
    def solved(self) -> bool:
        return self.status == SOLVED


def _min_size(variant: Variant) -> int:
    return variant.resolvers_needed


def pair_masks(g: Graph, variant: Variant) -> tuple[list[int], int]:
    """Per-vertex bitmask of resolved object pairs, and the pair count."""
    table = object_table(g, variant.on_edges)
    rows = table.shape[0]
    iu, ju = np.triu_indices(rows, k=1)
    npairs = iu.size
    masks = []
    for v in range(g.n):
        col = table[:, v]
        bits = col[iu] != col[ju]
        # little-endian bit order so bit p of the int is pair p
        packed = np.packbits(bits, bitorder="little").tobytes()
        masks.append(int.from_bytes(packed, "little"))
    return masks, npairs


def greedy_upper_bound(g: Graph, variant: Variant) -> tuple[int, ...]:
    """Greedy set cover over unresolved pairs; lowest index wins ties."""
    g.distances.require_connected()
    masks, npairs = pair_masks(g, variant)
    full = (1 << npairs) - 1
    ft = variant.fault_tolerant
    cov1 = cov2 = 0
    chosen: list[int] = []
    while (cov2 if ft else cov1) != full:
        best, best_gain = -1, 0
        for v in range(g.n):
            if v in chosen:
                continue
            m = masks[v]
            gain = (m & ~cov1).bit_count()
            if ft:
                gain += (m & cov1 & ~cov2).bit_count()
            if gain > best_gain:
                best, best_gain = v, gain
        if best < 0:
            raise GraphError(f"no {variant.name} generator exists for this graph")
        chosen.append(best)
        cov2 |= cov1 & masks[best]
        cov1 |= masks[best]
    for v in range(g.n):
        if len(chosen) >= _min_size(variant):
            break
        if v not in chosen:
            chosen.append(v)
    return tuple(sorted(chosen))


class _Search:
    def __init__(self, g: Graph, variant: Variant, budget: int):
        self.n = g.n
        self.ft = variant.fault_tolerant
        self.masks, npairs = pair_masks(g, variant)
        self.full = (1 << npairs) - 1
        self.budget = budget
        self.nodes = 0

        n = self.n
        suf1 = [0] * (n + 1)
        suf2 = [0] * (n + 1)
        for v in range(n - 1, -1, -1):
            suf2[v] = suf2[v + 1] | (suf1[v + 1] & self.masks[v])
            suf1[v] = suf1[v + 1] | self.masks[v]
        self.suf1, self.suf2 = suf1, suf2

        # twin set id per vertex, and how many members each set may leave out
        self.set_id = [-1] * n
        self.allowance: list[int] = []
        self.set_size: list[int] = []
        if constraints_apply(g, variant):
            tp = find_twins(g)
            for sid, s in enumerate(tp.sets):
                for v in s.members:
                    self.set_id[v] = sid
                self.allowance.append(0 if self.ft else 1)
                self.set_size.append(len(s))

    def run(self, size: int) -> tuple[int, ...] | None:
        self.size = size
        self.chosen: list[int] = []
        rem = list(self.set_size)
        allow = list(self.allowance)
        forced = sum(max(0, r - a) for r, a in zip(rem, allow))
        if forced > size:
            return None
        return self._dfs(0, size, 0, 0, rem, allow, forced)

    def _dfs(self, i, slots, cov1, cov2, rem, allow, forced):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted
        if slots == 0:
            done = cov2 if self.ft else cov1
            return tuple(self.chosen) if done == self.full else None
        if slots > self.n - i or forced > slots:
            return None
        if self.ft:
            reachable = cov2 | (cov1 & self.suf1[i]) | self.suf2[i]
        else:
            reachable = cov1 | self.suf1[i]
        if reachable != self.full:
            return None

        m = self.masks[i]
        sid = self.set_id[i]
        if sid >= 0:
            before = max(0, rem[sid] - allow[sid])
            rem[sid] -= 1
            after_in = max(0, rem[sid] - allow[sid])
        else:
            before = after_in = 0

        # include i
        self.chosen.append(i)
        found = self._dfs(i + 1, slots - 1, cov1 | m, cov2 | (cov1 & m),
                          rem, allow, forced - before + after_in)
        self.chosen.pop()
        if found is None:
            # exclude i
            if sid < 0:
                found = self._dfs(i + 1, slots, cov1, cov2, rem, allow, forced)
            elif allow[sid] > 0:
                allow[sid] -= 1
                after_out = max(0, rem[sid] - allow[sid])
                found = self._dfs(i + 1, slots, cov1, cov2, rem, allow,
                                  forced - before + after_out)
                allow[sid] += 1
        if sid >= 0:
            rem[sid] += 1
        return found


def exact_dimension(g: Graph, variant: Variant, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Minimum size of a ``variant`` generator of the connected graph ``g``.

    ``budget`` caps the number of search nodes.  Running out yields a
    ``"bounded"`` result instead of an answer.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    g.distances.require_connected()
    start = _min_size(variant)
    if g.n < start:
        raise GraphError(f"{variant.name} needs at least {start} vertices")
    bound = start
    if constraints_apply(g, variant):
        bound = max(bound, lower_bound(find_twins(g), variant))
    upper_set = greedy_upper_bound(g, variant)
    search = _Search(g, variant, budget)
    size = bound
    try:
        for size in range(bound, len(upper_set) + 1):
            found = search.run(size)
            if found is not None:
                log.debug("%s solved at size %d after %d nodes", variant.name, size, search.nodes)
                return SolveResult(variant, size, found, search.nodes, bound,
                                   SOLVED, size, size)
    except BudgetExhausted:
        log.info("%s budget of %d nodes spent at size %d", variant.name, budget, size)
        return SolveResult(variant, None, upper_set, search.nodes, bound,
                           BOUNDED, size, len(upper_set))
    raise AssertionError("greedy generator was not rediscovered by the exact search")


def brute_force_bases(g: Graph, variant: Variant) -> tuple[int, list[tuple[int, ...]]]:
    """Every minimum generator, by plain enumeration in size order."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise GraphError(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}")
    g.distances.require_connected()
    for size in range(_min_size(variant), g.n + 1):
        hits = [c for c in combinations(range(g.n), size) if check_generator(g, c, variant)]
        if hits:
            return size, hits
    raise GraphError(f"no {variant.name} generator exists for this graph")


def brute_force_dimension(g: Graph, variant: Variant) -> SolveResult:
    if g.n > BRUTE_FORCE_MAX_N:
        raise GraphError(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}")
    g.distances.require_connected()
    tried = 0
    for size in range(_min_size(variant), g.n + 1):
        for c in combinations(range(g.n), size):
            tried += 1
            if check_generator(g, c, variant):
                return SolveResult(variant, size, c, tried, 0, SOLVED, size, size)
    raise GraphError(f"no {variant.name} generator exists for this graph")
