"""Command line entry point.

Examples::

    sierdim build --base C4 --r 3
    sierdim dims --base C4 --r 2 --variant all
    sierdim verify-generator --base C4 --r 2 --variant mg 00 11 20 31
    sierdim twins --base C4 --r 3
    sierdim rset --r 3
    sierdim verify --r 3
    sierdim table --rmax 6
    sierdim export --base C4 --r 2 --format dot --out s2.dot
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
from dataclasses import dataclass

from . import c4
from .graph_core import (
    Graph,
    GraphError,
    from_adjacency_text,
    is_bipartite,
    is_connected,
    named_graph,
    to_adjacency_text,
    to_dot,
)
from .metric import Variant, check_generator
from .sierpinski import build_sierpinski
from .solver import DEFAULT_BUDGET, exact_dimension
from .twins import find_twins, twin_lower_bounds

COMMANDS = ("build", "dims", "verify-generator", "twins", "rset", "verify", "table", "export")
VARIANT_ORDER = (Variant.MG, Variant.EMG, Variant.FTMG, Variant.FTEMG)

# vertex caps per command; APSP is dense so memory grows with n^2
MAX_BUILD_VERTICES = 1 << 16
MAX_ANALYSIS_VERTICES = 4096


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    base: str | None = None
    file: str | None = None
    r: int = 1
    variant: str = "all"
    budget: int = DEFAULT_BUDGET
    format: str = "text"
    rmax: int = 5
    out: str | None = None
    vertices: tuple[str, ...] = ()

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.r < 1:
            raise UsageError("--r must be >= 1")
        if self.budget <= 0:
            raise UsageError("--budget must be positive")
        if self.base and self.file:
            raise UsageError("give either --base or --file, not both")


def _variants(sel: str) -> tuple[Variant, ...]:
    return VARIANT_ORDER if sel == "all" else (Variant(sel),)


def _base_graph(cfg: RunConfig) -> Graph:
    if cfg.file:
        try:
            with open(cfg.file) as fh:
                return from_adjacency_text(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {cfg.file}: {exc.strerror}") from None
    return named_graph(cfg.base or "C4")


def _graph(cfg: RunConfig, cap: int) -> Graph:
    base = _base_graph(cfg)
    if base.n ** cfg.r > cap:
        raise UsageError(f"S^{cfg.r} of a {base.n}-vertex base has {base.n ** cfg.r} vertices; "
                         f"this command is capped at {cap}")
    return build_sierpinski(base, cfg.r)


def _fmt_set(g: Graph, vs) -> str:
    return " ".join(g.label(v) for v in vs)


def cmd_build(cfg: RunConfig, out) -> int:
    g = _graph(cfg, MAX_BUILD_VERTICES)
    if cfg.format in ("adjacency", "dot"):
        return cmd_export(cfg, out, g)
    bip = is_bipartite(g)
    out.write(f"vertices={g.n} edges={g.m} connected={_yn(is_connected(g))} "
              f"bipartite={_yn(bip.bipartite)}\n")
    return 0


def cmd_export(cfg: RunConfig, out, g: Graph | None = None) -> int:
    g = g or _graph(cfg, MAX_BUILD_VERTICES)
    if cfg.format == "dot":
        out.write(to_dot(g))
    elif cfg.format == "adjacency":
        out.write(to_adjacency_text(g))
    else:
        raise UsageError("export needs --format dot or --format adjacency")
    return 0


def cmd_dims(cfg: RunConfig, out) -> int:
    g = _graph(cfg, MAX_ANALYSIS_VERTICES)
    if not is_connected(g):
        raise UsageError("dimensions are only defined for connected graphs")
    results = [exact_dimension(g, v, cfg.budget) for v in _variants(cfg.variant)]
    if cfg.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["variant", "status", "value", "lower", "upper", "bound", "nodes", "basis"])
        for res in results:
            w.writerow([res.variant.value, res.status, "" if res.value is None else res.value,
                        res.lower, res.upper, res.bound_used, res.nodes_explored,
                        _fmt_set(g, res.basis)])
    else:
        for res in results:
            if res.solved:
                out.write(f"{res.variant.value}: {res.variant.short}={res.value} "
                          f"bound={res.bound_used} nodes={res.nodes_explored} "
                          f"basis={_fmt_set(g, res.basis)}\n")
            else:
                out.write(f"{res.variant.value}: unknown, {res.lower} <= {res.variant.short} "
                          f"<= {res.upper} after {res.nodes_explored} nodes (budget exhausted); "
                          f"best={_fmt_set(g, res.basis)}\n")
        out.write(" ".join(f"{res.variant.short}={res.value if res.solved else '?'}"
                           for res in results) + "\n")
    return 0 if all(res.solved for res in results) else 3


def cmd_verify_generator(cfg: RunConfig, out) -> int:
    g = _graph(cfg, MAX_ANALYSIS_VERTICES)
    if not cfg.vertices:
        raise UsageError("verify-generator needs candidate vertices")
    members = [g.vertex_of(tok) for tok in cfg.vertices]
    ok = True
    for v in _variants(cfg.variant):
        cert = check_generator(g, members, v)
        if cert.verdict:
            out.write(f"{v.value}: accepted\n")
            continue
        ok = False
        a, b = cert.witness
        if v.on_edges:
            pair = f"{g.label(a[0])}-{g.label(a[1])} {g.label(b[0])}-{g.label(b[1])}"
        else:
            pair = f"{g.label(a)} {g.label(b)}"
        out.write(f"{v.value}: rejected; unresolved {pair}; "
                  f"resolvers [{_fmt_set(g, cert.resolvers)}]\n")
    return 0 if ok else 1


def cmd_twins(cfg: RunConfig, out) -> int:
    g = _graph(cfg, MAX_ANALYSIS_VERTICES)
    tp = find_twins(g)
    for s in tp.sets:
        out.write(f"{s.kind}: {_fmt_set(g, s.members)}\n")
    if tp.anomalies:
        out.write(f"anomalies: {_fmt_set(g, tp.anomalies)}\n")
    lb = twin_lower_bounds(tp)
    out.write(f"|T|={len(tp.T)} k={tp.k}\n")
    out.write(f"lower bounds: dim>={lb[0]} ftdim>={lb[1]} dimE>={lb[2]} ftdimE>={lb[3]}\n")
    return 0


def cmd_rset(cfg: RunConfig, out) -> int:
    for w in c4.build_R(cfg.r).words:
        out.write(w + "\n")
    return 0


def cmd_verify(cfg: RunConfig, out) -> int:
    if cfg.r < 2 or cfg.r > c4.VERIFY_CAP:
        raise UsageError(f"verify needs 2 <= r <= {c4.VERIFY_CAP}")
    rep = c4.verify_theorem(cfg.r, cfg.budget)
    out.write(rep.render())
    return 0 if rep.passed else 1


def table_rows(rmax: int, budget: int = DEFAULT_BUDGET) -> list[list[int]]:
    """Rows ``r, |V|, |E|, dim, dim', dim_E, dim_E'`` for ``1 <= r <= rmax``.

    r = 1 comes from the exact solver; larger r from the closed forms.
    """
    rows = []
    for r in range(1, rmax + 1):
        if r == 1:
            g = c4.sierpinski_c4(1)
            vals = {v: exact_dimension(g, v, budget).value for v in VARIANT_ORDER}
        else:
            vals = {v: c4.closed_form(v, r) for v in VARIANT_ORDER}
        rows.append([r, 4 ** r, 4 * (4 ** r - 1) // 3, vals[Variant.MG], vals[Variant.FTMG],
                     vals[Variant.EMG], vals[Variant.FTEMG]])
    return rows


def cmd_table(cfg: RunConfig, out) -> int:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["r", "vertices", "edges", "dim", "ftdim", "dimE", "ftdimE"])
    w.writerows(table_rows(cfg.rmax, cfg.budget))
    return 0


_DISPATCH = {
    "build": cmd_build,
    "dims": cmd_dims,
    "verify-generator": cmd_verify_generator,
    "twins": cmd_twins,
    "rset": cmd_rset,
    "verify": cmd_verify,
    "table": cmd_table,
    "export": cmd_export,
}


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    """Execute one command.  Output is buffered and written only once the
    command has finished, then to ``--out`` if given."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    buf = io.StringIO()
    try:
        cfg.validate()
        status = _DISPATCH[cfg.command](cfg, buf)
    except (UsageError, GraphError, c4.OutOfDomain) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    text = buf.getvalue()
    if cfg.out:
        try:
            with open(cfg.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            stderr.write(f"error: cannot write {cfg.out}: {exc.strerror}\n")
            return 2
    else:
        stdout.write(text)
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sierdim",
                                description="Generalized Sierpinski graphs and metric dimensions")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging to stderr")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--base", help="builtin base graph: Cn, Kn or Pn (default C4)")
        sp.add_argument("--file", help="base graph as an adjacency-list file")
        sp.add_argument("--r", type=int, default=1, help="Sierpinski level")
        sp.add_argument("--variant", choices=["mg", "emg", "ftmg", "ftemg", "all"],
                        default="mg" if name == "verify-generator" else "all")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="search node ceiling for exact solving")
        sp.add_argument("--format", choices=["text", "csv", "dot", "adjacency"],
                        default="adjacency" if name == "export" else "text")
        sp.add_argument("--rmax", type=int, default=5)
        sp.add_argument("--out", help="write output to this file")
        if name == "verify-generator":
            sp.add_argument("vertices", nargs="*", help="candidate vertices (words or indices)")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    cfg = RunConfig(
        command=args.command, base=args.base, file=args.file, r=args.r,
        variant=args.variant, budget=args.budget, format=args.format,
        rmax=args.rmax, out=args.out, vertices=tuple(getattr(args, "vertices", ()) or ()),
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
