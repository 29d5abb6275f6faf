"""Square and cube classification of EDS terms by residue class of n.

Two tables are kept side by side.  ``TRANSCRIBED`` records the published
verdict tables; ``classify`` rebuilds each verdict from the exponent vector
of the closed form, reduced mod 2 or mod 3, and the condition registry.  The
few places where they differ are listed in ``ERRATA``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .closed_form import closed_term, term_factorization
from .conditions import Condition, conditions_matching, get_condition, solve_condition
from .diophantine import is_cube, is_square
from .errors import UnsupportedRank, ZeroTermResidue
from .tate_curves import POLYS, PROPER_RANKS, EdsSpec

SQUARE_MODULI = {4: 8, 5: 10, 6: 12, 7: 14, 8: 16, 9: 18, 10: 20, 12: 24}
CUBE_MODULI = {4: 8, 5: 15, 6: 18, 7: 21, 8: 24, 9: 27, 10: 30, 12: 36}
POWERS = {"square": 2, "cube": 3}


def modulus(rank: int, power: str) -> int:
    if rank not in PROPER_RANKS:
        raise UnsupportedRank("no classification for rank %r" % rank, rank=rank)
    return (SQUARE_MODULI if power == "square" else CUBE_MODULI)[rank]


@dataclass(frozen=True)
class PowerVerdict:
    kind: str                         # Always, Never, Conditional
    power: str
    modulus: int
    residue: int
    condition: str | None = None      # registry key, Conditional only
    sign: int = 0                     # sign of the term on the class (squares)
    factors: tuple = ()               # odd-exponent part (mod power)
    equation: str | None = None       # governing equation behind a Never
    equivalents: tuple = field(default=())

    def predict(self, alpha: int) -> bool:
        """Is h(n) a genuine square (>= 0) or cube at this alpha?"""
        if self.kind == "Never":
            return False
        holds = True
        if self.kind == "Conditional":
            holds = get_condition(self.condition).holds(alpha)
        if self.power == "cube":
            return holds
        part = 1
        for lab, e in self.factors:
            part *= POLYS[lab](alpha) ** e
        return holds and self.sign * part > 0


def _rest(modulus: int, rank: int, *taken) -> list[int]:
    used = {r for group in taken for r in group}
    return [r for r in range(1, modulus) if r % rank and r not in used]


def _build_transcribed():
    T = {}

    def put(rank, power, *rows):
        M = modulus(rank, power)
        table = {}
        listed = []
        for kind, cond, residues in rows:
            if residues == "rest":
                residues = _rest(M, rank, *listed)
            listed.append(residues)
            for r in residues:
                table[r] = (kind, cond)
        T[(rank, power)] = table

    put(4, "square", ("Always", None, [1, 7]), ("Conditional", "a=sq", [2, 3, 5, 6]))
    put(4, "cube", ("Always", None, [1, 3, 5, 7]), ("Conditional", "a=cube", [2, 6]))
    put(5, "square", ("Always", None, [1, 4, 6, 9]), ("Conditional", "a=sq", "rest"))
    put(5, "cube", ("Always", None, [1, 3, 4, 11, 12, 14]), ("Conditional", "a=cube", "rest"))
    put(6, "square", ("Always", None, [1, 5, 7, 11]), ("Conditional", "a+1=sq", [4, 8]),
        ("Never", None, [2, 3, 9, 10]))
    put(6, "cube", ("Always", None, [1, 3, 9, 15, 17]), ("Conditional", "a+1=cube", [4, 14]),
        ("Conditional", "a=cube", [8, 10]), ("Never", None, [2, 5, 7, 11, 13, 16]))
    put(7, "square", ("Always", None, [1, 13]), ("Conditional", "a-1=sq", [2, 3, 11, 12]),
        ("Conditional", "a=sq", [4, 5, 9, 10]), ("Never", None, [6, 8]))
    put(7, "cube", ("Always", None, [1, 3, 8, 13, 18, 20]),
        ("Conditional", "a=cube", [4, 6, 10, 11, 15, 17]), ("Conditional", "a-1=cube", [9, 12]),
        ("Never", None, [2, 5, 16, 19]))
    put(8, "square", ("Always", None, [1, 4, 12, 15]), ("Conditional", "eq7", [3, 13]),
        ("Conditional", "eq8", [5, 11]), ("Never", None, [2, 6, 7, 9, 10, 14]))
    put(8, "cube", ("Always", None, [1, 7, 17, 23]), ("Conditional", "a=cube", [3, 4, 20, 21]),
        ("Conditional", "2a-1=cube", [6, 18]), ("Conditional", "a-1=cube", [9, 15]),
        ("Never", None, [2, 5, 10, 11, 12, 13, 14, 19, 22]))
    put(9, "square", ("Always", None, [1, 17]), ("Conditional", "a=sq", [5, 13]), ("Never", None, "rest"))
    put(9, "cube", ("Always", None, [1, 3, 6, 12, 15, 21, 24, 26]), ("Conditional", "eq14", [4, 23]),
        ("Never", None, "rest"))
    put(10, "square", ("Always", None, [1, 9, 11, 19]), ("Conditional", "eq22", [4, 16]),
        ("Conditional", "a=sq", [5, 15]), ("Never", None, [2, 3, 6, 7, 8, 12, 13, 14, 17, 18]))
    put(10, "cube", ("Always", None, [1, 11, 19, 29]), ("Conditional", "eq24", [3, 27]),
        ("Conditional", "2a-1=cube", [7, 13, 17, 23]), ("Never", None, "rest"))
    put(12, "square", ("Always", None, [1, 23]), ("Conditional", "eq32", [5, 19]), ("Never", None, "rest"))
    put(12, "cube", ("Always", None, [1, 35]), ("Conditional", "a-1=cube", [3, 9, 15, 21, 27, 33]),
        ("Never", None, "rest"))
    return T


TRANSCRIBED = _build_transcribed()

# (rank, power, residues): (published verdict, corrected verdict, cited eq, governing eq)
ERRATA = {
    (12, "square", (4, 8, 16, 20)): (("Never", None), ("Conditional", "eq34"), "eq34", "eq34"),
    (10, "cube", (12, 18)): (("Never", None), ("Conditional", "eq28"), "eq28", "eq28"),
    (9, "square", (8, 10)): (("Never", None), ("Never", None), "eq5", "eq5*"),
    (12, "square", (6, 18)): (("Never", None), ("Never", None), "eq35", "eq35*"),
    (12, "cube", (11, 25)): (("Never", None), ("Never", None), "eq40", "eq41"),
    (12, "cube", (6, 18, 30)): (("Never", None), ("Never", None), "eq47", "eq47*"),
}


def corrected_transcription(rank: int, power: str) -> dict:
    table = dict(TRANSCRIBED[(rank, power)])
    for (r, p, residues), (_, fixed, _, _) in ERRATA.items():
        if (r, p) == (rank, power):
            for res in residues:
                table[res] = fixed
    return table


def _pick(matches: list[Condition]) -> Condition:
    # prefer numbered equations, then starred stand-ins, then atomic families
    def rank_key(c):
        if c.number is not None:
            return (0, c.number)
        if c.key.startswith("eq"):
            return (1, c.key)
        return (2, c.key)
    return sorted(matches, key=rank_key)[0]


@lru_cache(maxsize=None)
def classify(rank: int, residue: int, power: str) -> PowerVerdict:
    """Verdict for h(n), n = residue mod the class modulus, derived from the exponents."""
    M = modulus(rank, power)
    if power not in POWERS:
        raise ValueError("power must be 'square' or 'cube'")
    residue %= M
    if residue % rank == 0:
        raise ZeroTermResidue("h(n) = 0 for n = %d mod %d" % (residue, rank), residue=residue)
    k = POWERS[power]
    spec = EdsSpec(rank, 2)
    patterns = set()
    for j in range(4):
        tf = term_factorization(spec, residue + j * M)
        odd = tuple(sorted((lab, e % k) for lab, e in tf.exponents.items() if e % k))
        # a cube's sign is immaterial, and its sign period need not divide M
        patterns.add((tf.sign if k == 2 else 0, odd))
    if len(patterns) != 1:
        raise AssertionError("exponent pattern not periodic mod %d at residue %d" % (M, residue))
    sign, odd = patterns.pop()
    if not odd:
        return PowerVerdict("Always", power, M, residue, sign=sign)
    matches = conditions_matching(k, dict(odd), rank)
    if not matches:
        raise AssertionError("no registered condition for %r at rank %d" % (odd, rank))
    cond = _pick(matches)
    equivalents = tuple(c.key for c in matches)
    if solve_condition(cond, rank=rank).empty:
        return PowerVerdict("Never", power, M, residue, sign=sign, factors=odd,
                            equation=cond.key, equivalents=equivalents)
    return PowerVerdict("Conditional", power, M, residue, cond.key, sign, odd,
                        equivalents=equivalents)


def predict_and_check(spec: EdsSpec, n: int, power: str) -> tuple[bool, bool]:
    if n % spec.rank == 0:
        raise ZeroTermResidue("h(%d) = 0" % n)
    verdict = classify(spec.rank, n, power)
    h = closed_term(spec, n)
    actual = is_square(h) if power == "square" else is_cube(h)
    return verdict.predict(spec.alpha), actual


@dataclass(frozen=True)
class SummaryRow:
    label: str
    residues: tuple[int, ...]
    kind: str
    condition: str | None
    equation: str | None
    note: str = ""


def summary_table(rank: int, power: str) -> list[SummaryRow]:
    """One row per verdict group, residues in increasing order, zero terms last."""
    M = modulus(rank, power)
    groups: dict = {}
    for r in range(M):
        if r % rank == 0:
            continue
        v = classify(rank, r, power)
        key = (v.kind, v.condition, v.equation)
        groups.setdefault(key, []).append(r)
    order = {"Always": 0, "Conditional": 1, "Never": 2}
    rows = []
    for (kind, cond, eq), res in sorted(groups.items(), key=lambda kv: (order[kv[0][0]], kv[1][0])):
        if kind == "Always":
            label = "all admissible α"
        elif kind == "Conditional":
            label = get_condition(cond).text
        else:
            label = "no admissible α"
        note = ""
        if kind == "Never" and eq:
            note = "via %s" % get_condition(eq).text
        negative = [r for r in res if classify(rank, r, power).sign < 0]
        if power == "square" and negative and kind == "Always":
            note = "negative on %s (square up to sign)" % ",".join(map(str, negative))
        rows.append(SummaryRow(label, tuple(res), kind, cond, eq, note))
    rows.append(SummaryRow("zero term", tuple(r for r in range(M) if r % rank == 0), "zero", None, None))
    return rows
