import pytest

from edszero import periodicity as per
from edszero.eds_core import sequence
from edszero.errors import BadPrime, RankTooSmall
from edszero.tate_curves import PROPER_RANKS, EdsSpec, admissible_alphas, initial_values


def test_reduce_mod_examples():
    h = per.reduce_mod(EdsSpec(6, 1), 5, 13).terms
    assert [i for i, x in enumerate(h) if x == 0] == [0, 6, 12]
    assert list(per.reduce_mod(EdsSpec(6, 1), 5, 1).terms) == [0, 1]
    seq = sequence(initial_values(EdsSpec(4, 2)), 9)
    assert list(per.reduce_mod(EdsSpec(4, 2), 7, 9).terms) == [t % 7 for t in seq.terms[:10]]


def test_rank_of_apparition():
    assert per.rank_of_apparition(EdsSpec(6, 2), 13) == 6
    rho = per.rank_of_apparition(EdsSpec(5, 2), 3)
    h = per.reduce_mod(EdsSpec(5, 2), 3, 20).terms
    assert rho == min(i for i in range(1, 21) if h[i] == 0)


def test_bad_primes():
    with pytest.raises(BadPrime):
        per.period_direct(EdsSpec(4, 2), 2)
    with pytest.raises(BadPrime):
        per.period_direct(EdsSpec(4, 2), 9)
    with pytest.raises(BadPrime):
        per.period_direct(EdsSpec(6, 4), 5)


@pytest.mark.parametrize("alpha,p,pi", [(1, 5, 12), (-4, 13, 36), (3, 41, 240), (2, 13, 24), (5, 7, 36)])
def test_published_periods(alpha, p, pi):
    spec = EdsSpec(6, alpha)
    assert per.period_direct(spec, p) == pi
    assert per.period_formula(spec, p).pi == pi


def test_ward_nu():
    assert per.ward_nu(3, 5) == 1
    assert per.ward_nu(2, 6) == -1
    assert per.ward_nu(2, 4) == 0
    assert per.ward_nu(3, 4) == 0


def test_formula_needs_rank_above_three():
    # p | h2 makes the rank of apparition 2
    with pytest.raises(RankTooSmall):
        per.period_formula(EdsSpec(3, 4), 5)


def test_formula_matches_direct_everywhere():
    for N in PROPER_RANKS:
        for a in admissible_alphas(N, -3, 3):
            spec = EdsSpec(N, a)
            for p in (3, 5, 7, 11, 13):
                try:
                    d = per.period_direct(spec, p)
                    r = per.period_formula(spec, p)
                except (BadPrime, RankTooSmall):
                    continue
                assert r.pi == d
                assert r.pi == r.rho * r.tau


def test_period_grid_marks_bad_cells():
    grid = per.period_grid(6, [-5, 1], [5, 7])
    assert grid[(-5, 5)] is None and grid[(1, 5)] == 12
