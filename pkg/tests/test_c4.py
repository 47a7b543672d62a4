import pytest

from sierdim.c4 import (
    OutOfDomain,
    build_R,
    closed_form,
    sierpinski_c4,
    twin_partner_set,
    verify_rset_size_recurrence,
    verify_theorem,
)
from sierdim.metric import Variant, is_metric_generator
from sierdim.solver import exact_dimension
from sierdim.twins import find_twins


def test_r_listings():
    assert build_R(1).words == ("0", "1")
    assert build_R(2).words == ("00", "11", "20", "31")
    assert build_R(3).words == ("000", "020", "111", "131", "200", "220", "311", "331")
    assert len(build_R(4)) == 24
    with pytest.raises(OutOfDomain):
        build_R(0)


def test_closed_form_values():
    assert closed_form(Variant.MG, 2) == 4
    assert closed_form(Variant.FTMG, 3) == 16
    assert closed_form(Variant.MG, 4) == 24
    assert closed_form(Variant.EMG, 4) == 24
    assert closed_form(Variant.FTEMG, 2) == 8
    with pytest.raises(OutOfDomain):
        closed_form(Variant.MG, 1)


def test_closed_form_integral():
    for r in range(2, 31):
        assert (2 + 4 ** (r - 2)) % 3 == 0
        assert 3 * closed_form(Variant.MG, r) == 4 * (2 + 4 ** (r - 2))
        assert closed_form(Variant.FTMG, r) == 2 * closed_form(Variant.MG, r)


def test_size_recurrence():
    assert verify_rset_size_recurrence(3)
    assert len(build_R(4)) == 4 * (8 - 2)
    assert len(build_R(5)) == 4 * (24 - 2) == 88 == closed_form(Variant.MG, 5)
    # the recurrence does not hold literally at r = 2
    assert len(build_R(2)) != 4 * (len(build_R(1)) - 2)
    assert verify_rset_size_recurrence(8)


@pytest.mark.parametrize("r", range(2, 9))
def test_rset_size_matches_formula(r):
    assert len(build_R(r)) == closed_form(Variant.MG, r)


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_rset_resolves(r):
    g = sierpinski_c4(r)
    assert is_metric_generator(g, build_R(r).indices())


@pytest.mark.parametrize("r", [2, 3, 4])
def test_rset_hits_every_twin_set_once(r):
    g = sierpinski_c4(r)
    tp = find_twins(g)
    members = set(build_R(r).indices())
    assert set(tp.T) >= members
    assert all(len(members & set(s.members)) == 1 for s in tp.sets)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_twin_partner_set(r):
    F = twin_partner_set(build_R(r))
    assert len(F) == closed_form(Variant.FTMG, r) == 2 * len(build_R(r))


def test_twin_partner_set_r2_words():
    g = sierpinski_c4(2)
    F = twin_partner_set(build_R(2), g)
    assert [g.label(v) for v in F] == ["00", "02", "11", "13", "20", "22", "31", "33"]


def test_verify_theorem_r2():
    rep = verify_theorem(2)
    assert rep.passed and all(c.passed for c in rep.checks)
    assert [rep.exact[v] for v in (Variant.MG, Variant.FTMG, Variant.EMG, Variant.FTEMG)] == [4, 8, 4, 8]


def test_verify_theorem_r4_skips_exact():
    rep = verify_theorem(4)
    assert rep.passed
    assert rep.checks[-1].passed is None
    assert "[SKIP]" in rep.render()


def test_verify_theorem_domain():
    with pytest.raises(OutOfDomain):
        verify_theorem(1)
    with pytest.raises(OutOfDomain):
        verify_theorem(6)


def test_level_one_by_solver():
    g = sierpinski_c4(1)
    assert exact_dimension(g, Variant.MG).value == 2
    assert exact_dimension(g, Variant.FTMG).value == 4


@pytest.mark.parametrize("r", [2, 3])
def test_ft_doubles(r):
    g = sierpinski_c4(r)
    for plain, ft in ((Variant.MG, Variant.FTMG), (Variant.EMG, Variant.FTEMG)):
        assert exact_dimension(g, ft).value == 2 * exact_dimension(g, plain).value
