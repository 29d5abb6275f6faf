"""Closed-form general terms: h(n) as a signed monomial in the factor basis.

Each rank has a declarative table.  A factor entry ``(label, a, offsets, d)``
contributes ``label ** ((a*n*n - offsets[n % m]) // d)``.  The tables are
checked against the recurrence by the test suite; nothing here is trusted on
its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from gmpy2 import mpz

from .eds_core import sequence
from .errors import NonIntegralExponent
from .tate_curves import POLYS, EdsSpec, initial_values


def _spread(groups: dict) -> dict:
    """{value: residues} -> {residue: value}"""
    return {r: v for v, rs in groups.items() for r in rs}


@dataclass(frozen=True)
class FactorExponent:
    label: str
    a: int
    modulus: int
    offsets: dict
    d: int

    def exponent(self, n: int) -> int:
        num = self.a * n * n - self.offsets[n % self.modulus]
        q, r = divmod(num, self.d)
        if r:
            raise NonIntegralExponent("exponent of %s at n=%d is %d/%d" % (self.label, n, num, self.d))
        if q < 0:
            raise NonIntegralExponent("negative exponent of %s at n=%d" % (self.label, n))
        return q


@dataclass(frozen=True)
class ClosedFormTable:
    rank: int
    sign_modulus: int
    sign_map: dict
    factors: tuple[FactorExponent, ...]

    def sign(self, n: int) -> int:
        return self.sign_map[n % self.sign_modulus]

    def exponents(self, n: int) -> dict[str, int]:
        return {f.label: f.exponent(n) for f in self.factors}


def _signs(modulus: int, rank: int, plus, minus) -> dict:
    sm = {r: 0 for r in range(0, modulus, 1) if r % rank == 0}
    sm.update({r: 1 for r in plus})
    sm.update({r: -1 for r in minus})
    return sm


def _f(label, a, modulus, groups, d):
    return FactorExponent(label, a, modulus, _spread(groups), d)


TABLES: dict[int, ClosedFormTable] = {
    2: ClosedFormTable(2, 8, _signs(8, 2, (1, 5), (3, 7)), (
        _f("b", 1, 2, {1: [1]}, 4),)),
    3: ClosedFormTable(3, 6, _signs(6, 3, (1, 2), (4, 5)), (
        _f("a3", 1, 3, {1: [1, 2]}, 3),)),
    4: ClosedFormTable(4, 8, _signs(8, 4, (1, 5, 6), (2, 3, 7)), (
        _f("a", 3, 4, {3: [1, 3], 4: [2]}, 8),)),
    5: ClosedFormTable(5, 10, _signs(10, 5, (1, 4, 7, 8), (2, 3, 6, 9)), (
        _f("a", 2, 5, {2: [1, 4], 3: [2, 3]}, 5),)),
    6: ClosedFormTable(6, 12, _signs(12, 6, (1, 4, 5, 9, 10), (2, 3, 7, 8, 11)), (
        _f("a", 5, 6, {5: [1, 5], 8: [2, 4], 9: [3]}, 12),
        _f("a+1", 1, 6, {1: [1, 2, 4, 5], 0: [3]}, 3))),
    7: ClosedFormTable(7, 7, _signs(7, 7, (1, 4, 5), (2, 3, 6)), (
        _f("a", 5, 7, {5: [1, 6], 6: [2, 5], 3: [3, 4]}, 7),
        _f("a-1", 3, 7, {3: [1, 6], 5: [2, 5], 6: [3, 4]}, 7))),
    8: ClosedFormTable(8, 16, _signs(16, 8, (1, 4, 5, 9, 10, 13, 14), (2, 3, 6, 7, 11, 12, 15)), (
        _f("a", 15, 8, {15: [1, 7], 12: [2, 6], 7: [3, 5], 16: [4]}, 16),
        _f("a-1", 7, 8, {7: [1, 7], 12: [2, 6], 15: [3, 5], 16: [4]}, 16),
        _f("2a-1", 3, 8, {3: [1, 3, 5, 7], 4: [2, 6], 0: [4]}, 8))),
    9: ClosedFormTable(9, 18, _signs(18, 9, (1, 4, 5, 8, 11, 12, 15, 16), (2, 3, 6, 7, 10, 13, 14, 17)), (
        _f("a", 7, 9, {7: [1, 8], 10: [2, 7], 9: [3, 6], 4: [4, 5]}, 9),
        _f("a-1", 4, 9, {4: [1, 8], 7: [2, 7], 9: [3, 6], 10: [4, 5]}, 9),
        _f("gamma", 1, 9, {0: [3, 6], 1: [1, 2, 4, 5, 7, 8]}, 3))),
    10: ClosedFormTable(10, 20, _signs(20, 10, (1, 4, 5, 8, 9, 13, 14, 17, 18),
                                       (2, 3, 6, 7, 11, 12, 15, 16, 19)), (
        _f("a", 21, 10, {21: [1, 9], 24: [2, 8], 9: [3, 7], 16: [4, 6], 25: [5]}, 20),
        _f("a-1", 9, 10, {9: [1, 9], 16: [2, 8], 21: [3, 7], 24: [4, 6], 25: [5]}, 20),
        _f("2a-1", 2, 10, {2: [1, 4, 6, 9], 3: [2, 3, 7, 8], 0: [5]}, 5),
        _f("delta", 5, 10, {5: [1, 3, 5, 7, 9], 4: [2, 4, 6, 8]}, 4))),
    12: ClosedFormTable(12, 24, _signs(24, 12, (1, 4, 6, 8, 11, 14, 15, 17, 19, 21, 22),
                                       (2, 3, 5, 7, 9, 10, 13, 16, 18, 20, 23)), (
        _f("a", 1, 12, {1: [1, 11], 4: [2, 10], 9: [3, 9], 16: [4, 8], 13: [5, 7], 12: [6]}, 12),
        _f("a-1", 59, 12, {59: [1, 11], 44: [2, 10], 51: [3, 9], 56: [4, 8], 35: [5, 7], 60: [6]}, 24),
        _f("2a-1", 1, 12, {1: [1, 5, 7, 11], 4: [2, 10], 9: [3, 9], 16: [4, 8], -12: [6]}, 24),
        _f("lambda", 3, 12, {3: [1, 3, 5, 7, 9, 11], 4: [2, 6, 10], 0: [4, 8]}, 8),
        _f("theta", 1, 12, {0: [3, 6, 9], 1: [1, 2, 4, 5, 7, 8, 10, 11]}, 3))),
}

# lambda = -a (2a-1) mu, so the classifier only ever sees irreducible factors
_REFACTOR = {12: {"lambda": (-1, {"a": 1, "2a-1": 1, "mu": 1})}}


@dataclass(frozen=True)
class TermFactorization:
    sign: int
    exponents: dict

    def evaluate(self, spec: EdsSpec) -> int:
        if self.sign == 0:
            return 0
        v = mpz(self.sign)
        for lab, e in self.exponents.items():
            base = spec.alpha if spec.improper else POLYS[lab](spec.alpha)
            v *= mpz(base) ** e
        return int(v)


def table(rank: int) -> ClosedFormTable:
    return TABLES[rank]


def term_factorization(spec: EdsSpec, n: int, refactor: bool = True) -> TermFactorization:
    """Sign and exponents of h(n); for rank 12 lambda is split unless refactor=False."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    t = TABLES[spec.rank]
    if n % spec.rank == 0:
        return TermFactorization(0, {})
    sign, exps = t.sign(n), t.exponents(n)
    if refactor:
        for lab, (s, parts) in _REFACTOR.get(spec.rank, {}).items():
            e = exps.pop(lab)
            if s < 0 and e % 2:
                sign = -sign
            for p, k in parts.items():
                exps[p] = exps.get(p, 0) + k * e
    return TermFactorization(sign, exps)


def closed_term(spec: EdsSpec, n: int) -> int:
    return term_factorization(spec, n, refactor=False).evaluate(spec)


@dataclass(frozen=True)
class VerifyReport:
    spec: EdsSpec
    max_n: int
    ok: bool
    first_mismatch: int | None = None


def verify_closed_form(spec: EdsSpec, max_n: int) -> VerifyReport:
    seq = sequence(initial_values(spec), max_n)
    for n in range(max_n + 1):
        if closed_term(spec, n) != seq[n]:
            return VerifyReport(spec, max_n, False, n)
    return VerifyReport(spec, max_n, True)


def check_integrality(rank: int) -> list[tuple[str, int]]:
    """Exhaustive exponent check over one full cycle; returns failures (label, n)."""
    bad = []
    for f in TABLES[rank].factors:
        cycle = lcm(f.d, f.modulus, rank)
        for n in range(1, cycle + 1):
            if n % rank == 0:
                continue
            num = f.a * n * n - f.offsets.get(n % f.modulus, 0)
            if n % f.modulus not in f.offsets or num % f.d or num < 0:
                bad.append((f.label, n))
    return bad


def table_rows():
    """Rows (rank, factor, modulus, residue, a, offset, d, sign) for the CSV dump."""
    for rank, t in TABLES.items():
        for r in range(t.sign_modulus):
            yield (rank, "eps", t.sign_modulus, r, "", "", "", t.sign_map[r])
        for f in t.factors:
            for r in sorted(f.offsets):
                yield (rank, f.label, f.modulus, r, f.a, f.offsets[r], f.d, "")
