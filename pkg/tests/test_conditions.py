import pytest

from edszero import conditions as cd
from edszero.errors import UnknownCondition


def test_lookup_aliases():
    c = cd.get_condition("eq8")
    assert cd.get_condition("8") is c and cd.get_condition("#8") is c
    with pytest.raises(UnknownCondition):
        cd.get_condition("eq999")


def test_eq8_pell():
    s = cd.solve_condition("eq8", 10**4)
    assert s.kind == "infinite-pell"
    assert s.alphas == (-4900, -144, -4, 25, 841)


def test_eq7_pell_filter():
    assert cd.solve_condition("eq7", 10**4).alphas == (-840, -24, 5, 145, 4901)


@pytest.mark.parametrize("key,alphas", [
    ("eq14", (-18, 19)), ("eq24", (-35, 2, 3, 38)), ("eq34", (-3,)), ("eq22", (2, 3)),
])
def test_published_finite_sets(key, alphas):
    s = cd.solve_condition(key, 10**4)
    assert s.alphas == alphas and s.consistent


def test_eq28_disagreement_is_flagged():
    s = cd.solve_condition("eq28", 10**4)
    assert s.alphas == (2,)
    assert not s.consistent
    assert cd.get_condition("eq28").holds(2)


def test_eq32_mirror_pairs():
    s = cd.solve_condition("eq32", 2000)
    assert s.alphas == (-1455, -104, -7, 8, 105, 1456)
    assert all(1 - a in s.alphas for a in s.alphas)


def test_never_rows_are_empty():
    for c in cd.REGISTRY.values():
        if c.method is None or c.infinite or c.known:
            continue
        s = cd.solve_condition(c, 10**3)
        if s.kind == "empty":
            assert cd.direct_search(c, 300) == []


def test_registry_agrees_with_direct_search():
    for key in ("eq5", "eq9", "eq12", "eq13", "eq22", "eq23", "eq33", "eq35"):
        s = cd.solve_condition(key, 10**3)
        assert [a for a in s.alphas if abs(a) <= 500] == cd.direct_search(key, 500)


def test_cube_keys_normalize():
    assert cd.normal_key(3, {"a": 2}) == cd.normal_key(3, {"a": 1})
    assert cd.normal_key(2, {"a": 2}) == cd.normal_key(2, {})


def test_registry_rows_cover_table():
    keys = [row[0] for row in cd.registry_rows()]
    assert all("eq%d" % i in keys for i in range(1, 50))
