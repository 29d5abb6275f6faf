from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from edszero.eds_core import (EdsSequence, EquivalenceScale, InitialValues, apply_equivalence,
                              check_divisibility, check_eq11, extend_to, sequence)
from edszero.errors import NonExactDivision, NonIntegerResult
from edszero.tate_curves import EdsSpec, initial_values


def test_rank4_h5_is_alpha_power():
    assert sequence([1, -2, -8, 0], 5)[5] == 512 == 2**9


def test_rank5_h6():
    seq = sequence([1, -2, -8, 64], 6)
    assert seq[5] == 0
    assert seq[6] == -2**14


def test_rank12_alpha3_first_terms():
    seq = sequence(initial_values(EdsSpec(12, 3)), 4)
    assert seq.terms[2:5] == (-948480, -53329136320512000, -27346122891266847865307136000000)


def test_initial_values_roundtrip():
    iv = InitialValues(-2, -8, 0)
    assert iv.as_list() == [1, -2, -8, 0]
    assert InitialValues.from_list([1, -2, -8, 0]) == iv
    assert str(iv) == "[1; -2; -8; 0]"


def test_extend_never_shrinks():
    seq = sequence([1, -2, -8, 0], 10)
    assert extend_to(seq, 3) is seq
    assert len(extend_to(seq, 12).terms) == 13


def test_non_exact_division():
    with pytest.raises(NonExactDivision) as exc:
        sequence([1, 2, 3, 5], 6)
    assert exc.value.record()["error"] == "non-exact-division"


def test_eq11_windows():
    seq = sequence([1, -2, -8, 0], 12)
    assert check_eq11(seq, 1, 1)
    assert check_eq11(seq, 3, 2)
    bad = list(seq.terms)
    bad[5] += 1
    assert not check_eq11(EdsSequence(seq.initial, tuple(bad)), 3, 2)


def test_divisibility_and_zeros():
    seq = sequence([1, -2, -8, 0], 12)
    assert check_divisibility(seq, 12)
    assert seq[4] == seq[8] == seq[12] == 0
    assert check_divisibility(seq, 1)
    six = sequence(initial_values(EdsSpec(6, 1)), 18)
    assert check_divisibility(six, 18)
    assert [n for n in range(1, 19) if six[n] == 0] == [6, 12, 18]


def test_equivalence_examples():
    seq = sequence([1, -120, -864000, -186624000000], 4)
    assert apply_equivalence(seq, EquivalenceScale(Fraction(1)), 4).terms == seq.terms
    scaled = apply_equivalence(seq, EquivalenceScale(Fraction(2)), 4)
    assert scaled.terms[1:5] == (1, -960, -221184000, -6115295232000000)
    flipped = apply_equivalence(seq, EquivalenceScale(Fraction(-1)), 4)
    assert flipped.terms[1:5] == (1, 120, -864000, 186624000000)


def test_equivalence_non_integer():
    seq = sequence([1, -3, -8, 0], 4)
    with pytest.raises(NonIntegerResult):
        apply_equivalence(seq, EquivalenceScale(Fraction(1, 2)), 4)


@given(st.integers(-6, 6).filter(lambda w: w != 0), st.integers(-6, 6).filter(lambda a: a not in (0, -1)))
def test_equivalence_roundtrip(w, a):
    seq = sequence(initial_values(EdsSpec(6, a)), 12)
    there = apply_equivalence(seq, EquivalenceScale(Fraction(w)), 12)
    back = apply_equivalence(there, EquivalenceScale(Fraction(1, w)), 12)
    assert back.terms == seq.terms
    assert all(check_eq11(there, m, n) for m in range(1, 6) for n in range(1, m + 1))
