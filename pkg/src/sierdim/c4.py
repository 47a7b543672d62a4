"""The ``S_{C4}^r`` family: recursive resolving sets and closed forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .graph_core import Graph, cycle_graph, is_bipartite, is_connected
from .metric import (
    Variant,
    is_edge_metric_generator,
    is_ft_edge_metric_generator,
    is_ft_metric_generator,
    is_metric_generator,
)
from .sierpinski import build_sierpinski, index_of
from .solver import DEFAULT_BUDGET, exact_dimension
from .twins import find_twins, twin_lower_bounds

# largest r for which ``verify_theorem`` runs the exact solver
EXACT_CAP = 3
# largest r for which ``verify_theorem`` runs at all
VERIFY_CAP = 5

# (prefix, repeated digit, last digit) of the two words dropped from each
# prefixed copy of R_{k-1}
_EXCLUSIONS = {
    0: ((1, 1), (3, 1)),
    1: ((0, 0), (2, 0)),
    2: ((1, 1), (3, 1)),
    3: ((0, 0), (2, 0)),
}


class OutOfDomain(ValueError):
    pass


@dataclass(frozen=True)
class RSet:
    r: int
    words: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.words)

    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(index_of(w, 4) for w in self.words))


@lru_cache(maxsize=None)
def _r_words(r: int) -> frozenset[str]:
    if r == 1:
        return frozenset({"0", "1"})
    prev = _r_words(r - 1)
    out: set[str] = set()
    for p, drops in _EXCLUSIONS.items():
        excluded = {f"{p}{str(mid) * (r - 2)}{last}" for mid, last in drops}
        out |= {f"{p}{w}" for w in prev} - excluded
    return frozenset(out)


def build_R(r: int) -> RSet:
    """The recursive resolving set ``R_r`` of ``S_{C4}^r``, words sorted."""
    if r < 1:
        raise OutOfDomain("R_r is defined for r >= 1")
    return RSet(r, tuple(sorted(_r_words(r))))


def closed_form(variant: Variant, r: int) -> int:
    if r < 2:
        raise OutOfDomain("the closed forms hold for r >= 2 only")
    num = (2 + 4 ** (r - 2)) * (8 if variant.fault_tolerant else 4)
    q, rem = divmod(num, 3)
    assert rem == 0
    return q


def verify_rset_size_recurrence(r_max: int) -> bool:
    """``|R_k| = 4(|R_{k-1}| - 2)`` for ``3 <= k <= r_max`` and ``|R_k|``
    matches the closed form for ``2 <= k <= r_max``.

    The recurrence is not checked at k = 2: there both dropped words of each
    copy coincide, so one word per copy goes and ``|R_2| = 4`` rather than 0.
    """
    if r_max < 2:
        raise OutOfDomain("r_max must be >= 2")
    sizes = {k: len(build_R(k)) for k in range(1, r_max + 1)}
    if any(sizes[k] != closed_form(Variant.MG, k) for k in range(2, r_max + 1)):
        return False
    return all(sizes[k] == 4 * (sizes[k - 1] - 2) for k in range(3, r_max + 1))


@lru_cache(maxsize=8)
def sierpinski_c4(r: int) -> Graph:
    return build_sierpinski(cycle_graph(4), r)


def twin_partner_set(rset: RSet, g: Graph | None = None) -> tuple[int, ...]:
    """``R_r`` together with the twin partner of each member (indices)."""
    if rset.r < 2:
        raise OutOfDomain("twin partners are only defined for r >= 2")
    g = g if g is not None else sierpinski_c4(rset.r)
    tp = find_twins(g)
    members = rset.indices()
    out = set(members)
    for v in members:
        try:
            out.add(tp.partner(v))
        except ValueError:
            raise AssertionError(f"{g.label(v)} in R_{rset.r} has no twin partner") from None
    if len(out) != 2 * len(members):
        raise AssertionError("two members of R_r share a twin set")
    return tuple(sorted(out))


@dataclass
class Check:
    name: str
    passed: bool | None  # None = skipped
    detail: str


@dataclass
class TheoremReport:
    r: int
    checks: list[Check] = field(default_factory=list)
    exact: dict[Variant, int | None] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def add(self, name: str, passed: bool | None, detail: str) -> None:
        self.checks.append(Check(name, passed, detail))

    def render(self) -> str:
        lines = [f"S_C4^{self.r}"]
        for c in self.checks:
            tag = {True: "PASS", False: "FAIL", None: "SKIP"}[c.passed]
            lines.append(f"  [{tag}] {c.name}: {c.detail}")
        lines.extend(f"  note: {n}" for n in self.notes)
        lines.append("RESULT: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"


def verify_theorem(r: int, budget: int = DEFAULT_BUDGET) -> TheoremReport:
    """Machine-check the four closed forms on ``S_{C4}^r``.

    Checks (a)-(d) are constructive and run for every ``2 <= r <= 5``; the
    exact solver, check (e), only runs up to ``EXACT_CAP``.
    """
    if r < 2:
        raise OutOfDomain("the theorem is stated for r >= 2")
    if r > VERIFY_CAP:
        raise OutOfDomain(f"verification is capped at r <= {VERIFY_CAP}")
    g = sierpinski_c4(r)
    rep = TheoremReport(r)
    dim = closed_form(Variant.MG, r)
    ftdim = closed_form(Variant.FTMG, r)

    rep.add("structure", is_connected(g) and bool(is_bipartite(g)),
            f"{g.n} vertices, {g.m} edges, connected and bipartite")

    R = build_R(r)
    ridx = R.indices()
    mg = is_metric_generator(g, ridx)
    rep.add("(a) R_r is a metric generator", mg.verdict and len(R) == dim,
            f"|R_{r}| = {len(R)}, closed form {dim}" + _witness(g, mg))
    emg = is_edge_metric_generator(g, ridx)
    rep.add("(b) R_r is an edge metric generator", emg.verdict, "bipartite lifting" + _witness(g, emg))

    F = twin_partner_set(R, g)
    ft = is_ft_metric_generator(g, F)
    fte = is_ft_edge_metric_generator(g, F)
    rep.add("(c) R_r plus twin partners is fault tolerant",
            ft.verdict and fte.verdict and len(F) == ftdim,
            f"|F| = {len(F)}, closed form {ftdim}, FTMG {_yn(ft)}, FTEMG {_yn(fte)}")

    tp = find_twins(g)
    lb = twin_lower_bounds(tp)
    rep.add("(d) twin lower bounds meet the closed forms",
            lb == (dim, ftdim, dim, ftdim),
            f"|T| = {len(tp.T)}, k = {tp.k}, bounds {lb}")

    if r <= EXACT_CAP:
        want = {Variant.MG: dim, Variant.EMG: dim, Variant.FTMG: ftdim, Variant.FTEMG: ftdim}
        ok = True
        parts = []
        for v in (Variant.MG, Variant.EMG, Variant.FTMG, Variant.FTEMG):
            res = exact_dimension(g, v, budget)
            rep.exact[v] = res.value
            ok &= res.value == want[v]
            parts.append(f"{v.short}={res.value if res.solved else 'unknown'}")
        rep.add("(e) exact dimensions equal the closed forms", ok, " ".join(parts))
    else:
        rep.add("(e) exact dimensions equal the closed forms", None,
                f"exact solving capped at r <= {EXACT_CAP}")

    rep.notes.append("size recurrence 4(|R_(r-1)| - 2) checked for r >= 3 only; "
                     "at r = 2 the two dropped words of each copy coincide")
    return rep


def _yn(cert) -> str:
    return "yes" if cert.verdict else "no"


def _witness(g: Graph, cert) -> str:
    if cert.verdict:
        return ""
    a, b = cert.witness
    if cert.variant.on_edges:
        return f"; unresolved edges {_edge(g, a)} {_edge(g, b)}"
    return f"; unresolved {g.label(a)} {g.label(b)}"


def _edge(g: Graph, e) -> str:
    return f"{g.label(e[0])}-{g.label(e[1])}"
