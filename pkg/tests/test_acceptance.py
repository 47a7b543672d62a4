"""Exit criteria for the package; each test reports one PASS/FAIL line."""

import subprocess
import sys
import time

from sierdim.c4 import (
    build_R,
    closed_form,
    sierpinski_c4,
    twin_partner_set,
    verify_rset_size_recurrence,
)
from sierdim.graph_core import cycle_graph, is_bipartite, is_connected
from sierdim.metric import (
    Variant,
    is_edge_metric_generator,
    is_ft_edge_metric_generator,
    is_ft_metric_generator,
    is_metric_generator,
)
from sierdim.random_graphs import corpus
from sierdim.sierpinski import build_sierpinski
from sierdim.solver import brute_force_bases, brute_force_dimension, exact_dimension
from sierdim.twins import check_twin_characterization_c4, find_twins, lower_bound, twin_lower_bounds

ORDER = (Variant.MG, Variant.EMG, Variant.FTMG, Variant.FTEMG)

GENERAL = corpus(seed=2024, count=200, n_min=4, n_max=8)
BIPARTITE = corpus(seed=4202, count=100, n_min=4, n_max=8, bipartite=True)


def _exact_all(g):
    return tuple(exact_dimension(g, v).value for v in ORDER)


def test_01_theorem_r2(criterion):
    with criterion(1, "S_C4^2 exact (dim, dimE, dim', dimE') = (4, 4, 8, 8) in < 1 s"):
        g = sierpinski_c4(2)
        t0 = time.perf_counter()
        dims = _exact_all(g)
        elapsed = time.perf_counter() - t0
        assert dims == (4, 4, 8, 8)
        assert elapsed < 1.0


def test_02_theorem_r3(criterion):
    with criterion(2, "S_C4^3 exact (8, 8, 16, 16) in < 30 s"):
        t0 = time.perf_counter()
        g = build_sierpinski(cycle_graph(4), 3)
        dims = _exact_all(g)
        elapsed = time.perf_counter() - t0
        assert dims == (8, 8, 16, 16)
        assert elapsed < 30.0


def test_03_constructive_r4(criterion):
    with criterion(3, "R_4 (24 words) MG+EMG, 48-vertex FT set, |T|=48 k=24, < 10 s"):
        t0 = time.perf_counter()
        g = build_sierpinski(cycle_graph(4), 4)
        R = build_R(4)
        assert len(R) == 24
        idx = R.indices()
        assert is_metric_generator(g, idx)
        assert is_edge_metric_generator(g, idx)
        F = twin_partner_set(R, g)
        assert len(F) == 48
        assert is_ft_metric_generator(g, F)
        assert is_ft_edge_metric_generator(g, F)
        tp = find_twins(g)
        assert (len(tp.T), tp.k) == (48, 24)
        dim, ftdim = closed_form(Variant.MG, 4), closed_form(Variant.FTMG, 4)
        assert twin_lower_bounds(tp) == (dim, ftdim, dim, ftdim)
        assert time.perf_counter() - t0 < 10.0


def test_04_constructive_r5(criterion):
    with criterion(4, "R_5 (88 words) resolves S_C4^5 in < 2 min"):
        t0 = time.perf_counter()
        g = build_sierpinski(cycle_graph(4), 5)
        R = build_R(5)
        assert len(R) == 88
        assert is_metric_generator(g, R.indices())
        assert time.perf_counter() - t0 < 120.0


def test_05_formula_integrity(criterion):
    with criterion(5, "closed form = |R_r| for 2..8, size recurrence for 3..8"):
        t0 = time.perf_counter()
        for r in range(2, 9):
            assert closed_form(Variant.MG, r) == len(build_R(r))
        for r in range(3, 9):
            assert len(build_R(r)) == 4 * (len(build_R(r - 1)) - 2)
        assert verify_rset_size_recurrence(8)
        assert time.perf_counter() - t0 < 1.0


def test_06_oracle_equivalence(criterion):
    with criterion(6, f"exact == brute force on {len(GENERAL)} random graphs, 4 variants, < 5 min"):
        assert len(GENERAL) >= 200
        assert all(4 <= g.n <= 8 and is_connected(g) for g in GENERAL)
        t0 = time.perf_counter()
        mismatches = []
        for i, g in enumerate(GENERAL):
            for v in ORDER:
                if exact_dimension(g, v).value != brute_force_dimension(g, v).value:
                    mismatches.append((i, v))
        assert mismatches == []
        assert time.perf_counter() - t0 < 300.0


def test_07_bipartite_lifting(criterion):
    with criterion(7, f"bipartite lifting on {len(BIPARTITE)} random bipartite graphs"):
        assert len(BIPARTITE) >= 100
        violations = []
        for i, g in enumerate(BIPARTITE):
            assert is_connected(g) and is_bipartite(g) and g.n <= 8
            _, bases = brute_force_bases(g, Variant.MG)
            violations += [(i, b) for b in bases if not is_edge_metric_generator(g, b)]
            _, ft_bases = brute_force_bases(g, Variant.FTMG)
            violations += [(i, b) for b in ft_bases if not is_ft_edge_metric_generator(g, b)]
        assert violations == []


def test_08_twin_bound_soundness(criterion):
    with criterion(8, "twin lower bounds <= exact values on corpora of 6 and 7"):
        violations = []
        for g in GENERAL + BIPARTITE:
            tp = find_twins(g)
            for v in ORDER:
                if lower_bound(tp, v) > brute_force_dimension(g, v).value:
                    violations.append((g, v))
        assert violations == []


def test_09_structure(criterion):
    with criterion(9, "S_C4^r structure r<=5, block isometry r<=4, twin characterization r=2..4"):
        for r in range(1, 6):
            g = sierpinski_c4(r)
            assert is_connected(g) and is_bipartite(g)
            assert (g.n, g.m) == (4 ** r, 4 * (4 ** r - 1) // 3)
        for r in range(2, 5):
            g = sierpinski_c4(r)
            lower = sierpinski_c4(r - 1).distances.raw
            size = 4 ** (r - 1)
            for i in range(4):
                block = g.distances.raw[i * size:(i + 1) * size, i * size:(i + 1) * size]
                assert (block == lower).all()
        for r in (2, 3, 4):
            assert check_twin_characterization_c4(r)


def test_10_determinism(criterion):
    with criterion(10, "two runs of `verify --r 3` are byte-identical"):
        runs = [subprocess.run([sys.executable, "-m", "sierdim", "verify", "--r", "3"],
                               capture_output=True, check=False) for _ in range(2)]
        assert all(p.returncode == 0 for p in runs)
        assert runs[0].stdout == runs[1].stdout
        assert runs[0].stdout.endswith(b"RESULT: PASS\n")
