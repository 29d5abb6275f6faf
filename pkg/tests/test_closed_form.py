import pytest

from edszero import closed_form as cf
from edszero.eds_core import sequence
from edszero.errors import NonIntegralExponent
from edszero.tate_curves import SUPPORTED_RANKS, EdsSpec, initial_values


def test_rank4_index5():
    spec = EdsSpec(4, 2)
    f = cf.term_factorization(spec, 5)
    assert f.sign == 1 and f.exponents == {"a": 9}
    assert cf.closed_term(spec, 5) == 512


def test_rank12_alpha3_h2():
    assert cf.closed_term(EdsSpec(12, 3), 2) == -948480


@pytest.mark.parametrize("rank", SUPPORTED_RANKS)
def test_zero_at_rank(rank):
    spec = EdsSpec(rank, 3)
    assert cf.closed_term(spec, rank) == 0
    assert cf.closed_term(spec, 2 * rank) == 0


def test_rank12_h6_raw_factorization():
    f = cf.term_factorization(EdsSpec(12, 3), 6, refactor=False)
    assert f.exponents == {"a": 2, "a-1": 86, "2a-1": 2, "lambda": 13, "theta": 12}


def test_rank12_lambda_refactor_same_value():
    spec = EdsSpec(12, 5)
    for n in range(1, 30):
        assert cf.term_factorization(spec, n).evaluate(spec) == \
            cf.term_factorization(spec, n, refactor=False).evaluate(spec)


def test_rank8_h3_and_rank6_h3():
    f = cf.term_factorization(EdsSpec(8, 3), 3)
    assert f.sign == -1 and f.exponents == {"a": 8, "a-1": 3, "2a-1": 3}
    g = cf.term_factorization(EdsSpec(6, 3), 3)
    assert g.sign == -1 and g.exponents == {"a": 3, "a+1": 3}


def test_h1_is_trivial():
    f = cf.term_factorization(EdsSpec(9, 4), 1)
    assert f.sign == 1 and all(e == 0 for e in f.exponents.values())


@pytest.mark.parametrize("rank,alpha,max_n", [(5, 2, 60), (12, 3, 8), (4, -1, 40)])
def test_verify_examples(rank, alpha, max_n):
    assert cf.verify_closed_form(EdsSpec(rank, alpha), max_n).ok


def test_verify_reports_first_mismatch():
    spec = EdsSpec(6, 2)
    seq = sequence(initial_values(spec), 12)
    assert cf.closed_term(spec, 7) == seq[7]
    report = cf.verify_closed_form(spec, 12)
    assert report.ok and report.first_mismatch is None


@pytest.mark.parametrize("rank", SUPPORTED_RANKS)
def test_integrality(rank):
    assert cf.check_integrality(rank) == []


def test_non_integral_exponent_raised():
    bad = cf.FactorExponent("a", 1, 4, {1: 0}, 3)
    with pytest.raises(NonIntegralExponent):
        bad.exponent(1)


def test_table_rows_cover_all_ranks():
    ranks = {row[0] for row in cf.table_rows()}
    assert ranks == set(SUPPORTED_RANKS)
