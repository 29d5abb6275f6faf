"""Registry of the polynomial conditions that decide square and cube terms.

Every numbered equation 1..49 of the classification appears once, keyed
``eq<k>``.  Atomic conditions (``a=sq``, ``a-1=cube``, ...) cover the
infinite families, and a handful of starred keys (``eq5*``) hold corrected
stand-ins where the factorization of the terms disagrees with the equation
cited for a residue class.

A condition over the factor map ``{f: e}`` holds at alpha when the product
``prod f(alpha)^e`` is nonzero and is a square up to sign (power 2) or a cube
(power 3).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .diophantine import (CLASSICAL_SOLUTIONS, PellProblem, bounded_cubic_search,
                          consecutive_cubes, icbrt, is_cube, is_square,
                          norm_form_points, pell_iter)
from .errors import UnknownCondition
from .tate_curves import EXCLUDED_ALPHA, POLYS

DEFAULT_ALPHA_BOUND = 10 ** 4
DEFAULT_CURVE_BOUND = 10 ** 6


# ---- reduction methods -------------------------------------------------------

@dataclass(frozen=True)
class Atomic:
    """f(alpha) = +-beta^k for a linear f = s*alpha + t: an infinite family."""
    label: str

    def candidates(self, power: int, bound: int):
        poly = POLYS[self.label].coeffs  # (t, s)
        t, s = poly
        out, beta = set(), 0
        while beta ** power <= s * bound + abs(t) + 1:
            for v in {beta ** power, -beta ** power}:
                if (v - t) % s == 0:
                    out.add((v - t) // s)
            beta += 1
        return out


@dataclass(frozen=True)
class Cubes:
    """alpha and alpha+shift both cubes: two consecutive cubes."""
    shift: int

    def candidates(self, power, bound):
        if self.shift == 1:
            return {x ** 3 for x, _ in consecutive_cubes()}
        return {y ** 3 for _, y in consecutive_cubes()}


@dataclass(frozen=True)
class Classical:
    """x^3 + 2y^3 = 1 via alpha-1 = b1^3, 2alpha-1 = b2^3 (which='a-1'),
    or alpha = b1^3, 2alpha-1 = b2^3 (which='a')."""
    which: str

    def candidates(self, power, bound):
        out = set()
        for x, y in CLASSICAL_SOLUTIONS:
            if self.which == "a-1":
                # x = b2, y = -b1
                out.add((-y) ** 3 + 1)
            else:
                # x = -b2, y = b1
                out.add(y ** 3)
        return out


@dataclass(frozen=True)
class Quadratic:
    """q(alpha) = +-beta^2 for quadratic q, by completing the square.

    4A q = X^2 - Disc with X = 2A alpha + B, so q = s beta^2 becomes
    X^2 - 4As beta^2 = Disc.  Only the finitely solvable signs are used.
    """
    coeffs: tuple[int, int, int]   # (C, B, A)

    def candidates(self, power, bound):
        C, B, A = self.coeffs
        disc = B * B - 4 * A * C
        out = set()
        for s in (1, -1):
            try:
                pts = norm_form_points(-4 * A * s, disc)
            except ValueError:
                continue
            for X, _ in pts:
                if (X - B) % (2 * A) == 0:
                    out.add((X - B) // (2 * A))
        return out


@dataclass(frozen=True)
class Pell:
    """Pell branch plus the finite branch of the same quadratic."""
    D: int
    rhs: tuple[int, ...]
    mapping: str
    finite: Quadratic | None = None
    infinite = True

    def candidates(self, power, bound):
        out = set(self.finite.candidates(power, bound)) if self.finite else set()
        for rhs in self.rhs:
            for x, y in pell_iter(PellProblem(self.D, rhs)):
                alphas = _pell_map(self.mapping, rhs, x, y)
                if alphas is None:
                    continue
                if all(abs(a) > bound for a in alphas) and min(x, y) > 4 * bound + 4:
                    break
                out.update(alphas)
        return out


def _pell_map(mapping: str, rhs: int, x: int, y: int):
    if mapping == "4a-3":
        # (4a-3)^2 - 8 b^2 = 1 with 4a-3 = +-x; keep tau + 3 = 0 mod 4
        return {(t + 3) // 4 for t in (x, -x) if (t + 3) % 4 == 0}
    if mapping == "a=+-y^2":
        # a = y^2, 2a-1 = x^2 (rhs -1) or a = -y^2, 2a-1 = -x^2 (rhs +1)
        return {y * y} if rhs == -1 else {-y * y}
    if mapping == "2a-1=+-y":
        # (2 beta)^2 - 3 (2a-1)^2 = 1 needs y = |2a-1| odd
        if y % 2 == 0:
            return None
        return {(1 + y) // 2, (1 - y) // 2}
    raise ValueError(mapping)


@dataclass(frozen=True)
class CurveModel:
    """y^2 = cubic(x) with alpha read off x or y as (v - shift) / scale."""
    cubic: tuple[int, int, int, int]
    via: str
    scale: int
    shift: int = 0
    comment: str = "zero rank"

    def alphas(self, bound: int):
        out = set()
        for x, y in _cached_points(self.cubic, bound):
            v = x if self.via == "x" else y
            if (v - self.shift) % self.scale == 0:
                out.add((v - self.shift) // self.scale)
        return out

    def describe(self) -> str:
        return "y^2 = %s (%s = %d*alpha%+d)" % (_cubic_text(self.cubic), self.via, self.scale, self.shift)


def _cubic_text(c) -> str:
    out = ""
    for coef, mono in zip(c, ("x^3", "x^2", "x", "")):
        if coef == 0:
            continue
        mag = "" if abs(coef) == 1 and mono else str(abs(coef))
        out += ("-" if coef < 0 else "+") + mag + mono
    return out.lstrip("+")


@lru_cache(maxsize=None)
def _cached_points(cubic, bound):
    return tuple(bounded_cubic_search(cubic, bound))


@dataclass(frozen=True)
class Curves:
    models: tuple[CurveModel, ...]

    def candidates(self, power, bound):
        out = set()
        for m in self.models:
            out |= m.alphas(bound)
        return out


# ---- the registry ------------------------------------------------------------

@dataclass(frozen=True)
class Condition:
    key: str
    power: int
    factors: tuple[tuple[str, int], ...]
    ranks: tuple[int, ...]
    reduction: str
    comment: str
    method: object
    known: tuple[int, ...] | None = None
    number: int | None = None
    note: str = ""

    @property
    def factor_map(self) -> dict[str, int]:
        return dict(self.factors)

    @property
    def text(self) -> str:
        from .tate_curves import PRETTY
        parts = []
        for lab, e in self.factors:
            parts.append(PRETTY[lab] + ("^%d" % e if e > 1 else ""))
        return "".join(parts) + ("=□" if self.power == 2 else "=C")

    def value(self, alpha: int) -> int:
        v = 1
        for lab, e in self.factors:
            v *= POLYS[lab](alpha) ** e
        return v

    def holds(self, alpha: int) -> bool:
        v = self.value(alpha)
        if v == 0:
            return False
        return is_square(abs(v)) if self.power == 2 else is_cube(v)

    def excluded(self, rank: int | None = None) -> set[int]:
        ranks = (rank,) if rank is not None else self.ranks
        return {a for r in ranks for a in EXCLUDED_ALPHA[r]}

    @property
    def infinite(self) -> bool:
        return isinstance(self.method, (Atomic, Pell))


def _fac(**kw) -> tuple:
    names = {"a": "a", "ap1": "a+1", "am1": "a-1", "ta": "2a-1", "g": "gamma",
             "d": "delta", "mu": "mu", "th": "theta"}
    return tuple((names[k], v) for k, v in kw.items())


# curve models shared by several rows
_GAMMA_CUBE = Curves((CurveModel((1, 0, 0, -48), "y", 8, -4, "Ellog used"),))
_DELTA_CUBE = Curves((CurveModel((1, 0, 0, 80), "y", 8, -12, "Ellog used"),))
_THETA_CUBE = Curves((CurveModel((1, 0, 0, -4), "y", 4, -2, "Ellog used"),))
_MU_CUBE = Curves((CurveModel((1, 0, 0, -432), "y", 72, -36, "zero rank"),))
_ALPHA_MU = Curves((CurveModel((1, -3, 3, 0), "x", 3), CurveModel((1, 3, 3, 0), "x", -3)))

_TRIV = "trivial eq."
_CLASSIC = "'classical' equation"
_ZERO = "zero rank"
_ELLOG = "Ellog used"

_ROWS = [
    # key, power, factors, ranks, reduction, comment, method, known
    ("eq1", 2, _fac(a=1, ap1=1), (6,), "(2α+1)²±β²=1", _TRIV, Quadratic((0, 1, 1)), None),
    ("eq2", 3, _fac(a=1, ap1=1), (6,), "β2³−β1³=1", _TRIV, Cubes(1), None),
    ("eq3", 3, _fac(a=1, ap1=2), (6,), "β2³−β1³=1", _TRIV, Cubes(1), None),
    ("eq4", 3, _fac(a=2, ap1=1), (6,), "β2³−β1³=1", _TRIV, Cubes(1), None),
    ("eq5", 2, _fac(a=1, am1=1), (7, 8, 9, 10, 12), "(2α−1)²±β²=1", _TRIV, Quadratic((0, -1, 1)), None),
    ("eq6", 3, _fac(a=2, am1=1), (7, 8), "β1³−β2³=1", _TRIV, Cubes(-1), None),
    ("eq7", 2, _fac(am1=1, ta=1), (8,), "(4α−3)²∓8β²=1", "Pell eq. / trivial eq.",
     Pell(8, (1,), "4a-3", Quadratic((1, -3, 2))), None),
    ("eq8", 2, _fac(a=1, ta=1), (8,), "(2α−1)²∓2β²=1", "Pell eq. / trivial eq.",
     Pell(2, (-1, 1), "a=+-y^2", Quadratic((0, -1, 2))), None),
    ("eq9", 2, _fac(a=1, am1=1, ta=1), (8, 10), "y²=x³∓3x²+2x, x=±2α", _ZERO,
     Curves((CurveModel((1, -3, 2, 0), "x", 2), CurveModel((1, 3, 2, 0), "x", -2))), None),
    ("eq10", 3, _fac(a=2, am1=2), (7, 8), "β1³−β2³=1", _TRIV, Cubes(-1), None),
    ("eq11", 3, _fac(am1=1, ta=1), (8,), "β2³+2(−β1)³=1", _CLASSIC, Classical("a-1"), None),
    ("eq12", 2, _fac(am1=1, g=1), (9,), "α³−2α²+2α−1=±β²", _ZERO,
     Curves((CurveModel((1, -2, 2, -1), "x", 1), CurveModel((1, 2, 2, 1), "x", -1))), None),
    ("eq13", 2, _fac(g=1), (9,), "(2α−1)²±β²=−3", _TRIV, Quadratic((1, -1, 1)), None),
    ("eq14", 3, _fac(g=2), (9,), "β³−48=(8α−4)²", _ELLOG, _GAMMA_CUBE, (-18, 19)),
    ("eq15", 3, _fac(a=1, am1=1), (9,), "β1³−β2³=1", _TRIV, Cubes(-1), None),
    ("eq16", 3, _fac(a=2, am1=2), (9,), "β1³−β2³=1", _TRIV, Cubes(-1), None),
    ("eq17", 3, _fac(a=2, am1=1, g=1), (9,), "β1³−β2³=1", _TRIV, Cubes(-1), None),
    ("eq18", 3, _fac(a=1, am1=1, g=2), (9,), "β1³−β2³=1", _TRIV, Cubes(-1), None),
    ("eq19", 3, _fac(a=2, am1=2, g=2), (9,), "β1³−β2³=1", _TRIV, Cubes(-1), None),
    ("eq20", 3, _fac(a=1, g=1), (9,), "β³−48=(8α−4)²", _ELLOG, _GAMMA_CUBE, ()),
    ("eq21", 3, _fac(am1=2, g=1), (9,), "β³−48=(8α−4)²", _ELLOG, _GAMMA_CUBE, ()),
    ("eq22", 2, _fac(d=1), (10,), "(2α−3)²±β²=5", _TRIV, Quadratic((-1, 3, -1)), None),
    ("eq23", 2, _fac(ta=1, d=1), (10,), "y²=x³±7x²+10x±4, x=∓2α", "Ellog used / zero rank",
     Curves((CurveModel((1, 7, 10, 4), "x", -2, 0, _ELLOG), CurveModel((1, -7, 10, -4), "x", 2))), ()),
    ("eq24", 3, _fac(d=1), (10,), "β³+80=(8α−12)²", _ELLOG, _DELTA_CUBE, (-35, 2, 3, 38)),
    ("eq25", 3, _fac(am1=1, ta=1, d=1), (10,), "β2³+2(−β1)³=1", _CLASSIC, Classical("a-1"), None),
    ("eq26", 3, _fac(a=1, d=1), (10,), "β³+80=(8α−12)²", _ELLOG, _DELTA_CUBE, ()),
    ("eq27", 3, _fac(ta=2, d=1), (10,), "β³+80=(8α−12)²", _ELLOG, _DELTA_CUBE, ()),
    ("eq28", 3, _fac(am1=1, d=2), (10,), "β³+80=(8α−12)²", _ELLOG, _DELTA_CUBE, ()),
    ("eq29", 3, _fac(a=1, am1=1, ta=1), (10,), "β1³−β2³=1", _TRIV, Cubes(-1), None),
    ("eq30", 3, _fac(a=1, am1=1, d=1), (10,), "β1³−β2³=1", _TRIV, Cubes(-1), None),
    ("eq31", 3, _fac(a=1, ta=2, d=2), (10,), "(−β2)³+2β1³=1", _CLASSIC, Classical("a"), None),
    ("eq32", 2, _fac(mu=1), (12,), "β²−3(2α−1)²=1 / β²+3α²=−1", "Pell eq. / impossible",
     Pell(3, (1,), "2a-1=+-y", Quadratic((1, -3, 3))), None),
    ("eq33", 2, _fac(a=1, ta=1, th=1, mu=1), (12,), "y²=x³∓3x²+3x, x=±3α / α(2α−1)<0",
     "zero rank / trivial eq.", _ALPHA_MU, None),
    ("eq34", 2, _fac(am1=1, th=1), (12,), "y²=x³±4x²+6x±4, x=∓2α", "Ellog used / zero rank",
     Curves((CurveModel((1, 4, 6, 4), "x", -2, 0, _ELLOG), CurveModel((1, -4, 6, -4), "x", 2))), (-3,)),
    ("eq35", 2, _fac(a=1, mu=1), (12,), "y²=x³∓3x²+3x, x=±3α", _ZERO, _ALPHA_MU, None),
    ("eq36", 2, _fac(a=1, am1=1, mu=1), (12,), "y²=x³∓3x²+3x, x=±3α", _ZERO, _ALPHA_MU, None),
    ("eq37", 2, _fac(am1=1, ta=1, th=1), (12,), "y²=x³∓6x²+16x∓16, x=±4α", _ZERO,
     Curves((CurveModel((1, -6, 16, -16), "x", 4), CurveModel((1, 6, 16, 16), "x", -4))), None),
    ("eq38", 3, _fac(a=1, ta=1, am1=2, th=1, mu=1), (12,), "β1³−β2³=1", _TRIV, Cubes(-1), None),
    ("eq39", 3, _fac(a=1, am1=2, ta=2), (12,), "β1³−β2³=1", _TRIV, Cubes(-1), None),
    ("eq40", 3, _fac(a=1, am1=1, ta=2, th=2), (12,), "β1³−β2³=1", _TRIV, Cubes(-1), None),
    ("eq41", 3, _fac(a=2, am1=2, ta=1, th=2), (12,), "β1³−β2³=1", _TRIV, Cubes(-1), None),
    ("eq42", 3, _fac(a=2, am1=1), (12,), "β1³−β2³=1", _TRIV, Cubes(-1), None),
    ("eq43", 3, _fac(am1=1, th=2), (12,), "β³−4=(4α−2)²", _ELLOG, _THETA_CUBE, ()),
    ("eq44", 3, _fac(a=2, th=2, mu=1), (12,), "β³−4=(4α−2)²", _ELLOG, _THETA_CUBE, ()),
    ("eq45", 3, _fac(a=1, ta=1, th=2), (12,), "(−β2)³+2β1³=1", _CLASSIC, Classical("a"), None),
    ("eq46", 3, _fac(a=2, ta=1, th=1), (12,), "(−β2)³+2β1³=1", _CLASSIC, Classical("a"), None),
    ("eq47", 3, _fac(am1=2, ta=2, mu=1), (12,), "β2³+2(−β1)³=1", _CLASSIC, Classical("a-1"), None),
    ("eq48", 3, _fac(am1=2, ta=2, th=1), (12,), "β2³+2(−β1)³=1", _CLASSIC, Classical("a-1"), None),
    ("eq49", 3, _fac(am1=1, ta=2, mu=1), (12,), "β2³+2(−β1)³=1", _CLASSIC, Classical("a-1"), None),
    # corrected stand-ins, named after the equation the residue class cites
    ("eq5*", 2, _fac(a=1, g=1), (9,), "(2α−1)²±β²=−3 (γ=±□)", _TRIV, Quadratic((1, -1, 1)), None),
    ("eq35*", 2, _fac(a=1, ta=1, mu=1), (12,), "y²=x³∓3x²+3x, x=±3α", _ZERO, _ALPHA_MU, None),
    ("eq47*", 3, _fac(am1=2, mu=1), (12,), "y²=x³−432, y=±(72α−36) (μ=C)", _ZERO, _MU_CUBE, None),
    # atomic families
    ("a=sq", 2, _fac(a=1), (4, 5, 7, 9, 10), "α=±β²", "parametric", Atomic("a"), None),
    ("a=cube", 3, _fac(a=1), (4, 5, 6, 7, 8), "α=β³", "parametric", Atomic("a"), None),
    ("a-1=sq", 2, _fac(am1=1), (7,), "α−1=±β²", "parametric", Atomic("a-1"), None),
    ("a-1=cube", 3, _fac(am1=1), (7, 8, 12), "α−1=β³", "parametric", Atomic("a-1"), None),
    ("a+1=sq", 2, _fac(ap1=1), (6,), "α+1=±β²", "parametric", Atomic("a+1"), None),
    ("a+1=cube", 3, _fac(ap1=1), (6,), "α+1=β³", "parametric", Atomic("a+1"), None),
    ("2a-1=cube", 3, _fac(ta=1), (8, 10), "2α−1=β³", "parametric", Atomic("2a-1"), None),
]

_NOTES = {
    "eq5*": "stands in for eq5 at rank 9, square residues 8 and 10 mod 18",
    "eq35*": "stands in for eq35 at rank 12, square residues 6 and 18 mod 24",
    "eq47*": "stands in for eq47 at rank 12, cube residues 6, 18 and 30 mod 36",
}

REGISTRY: dict[str, Condition] = {}
for _key, _pw, _f, _ranks, _red, _com, _meth, _known in _ROWS:
    _num = int(_key[2:]) if _key.startswith("eq") and _key[2:].isdigit() else None
    REGISTRY[_key] = Condition(_key, _pw, _f, _ranks, _red, _com, _meth, _known, _num,
                               _NOTES.get(_key, ""))

_ALIASES = {"α=□": "a=sq", "α=C": "a=cube", "α−1=□": "a-1=sq", "α−1=C": "a-1=cube",
            "α+1=□": "a+1=sq", "α+1=C": "a+1=cube", "2α−1=C": "2a-1=cube"}


def get_condition(name: str) -> Condition:
    name = name.strip()
    if name.isdigit():
        name = "eq" + name
    if name.startswith("#"):
        name = "eq" + name[1:]
    name = _ALIASES.get(name, name)
    if name not in REGISTRY:
        raise UnknownCondition("unknown condition %r" % name, name=name)
    return REGISTRY[name]


def normal_key(power: int, factors: dict[str, int]) -> tuple:
    """Canonical form: exponents mod power; for cubes P and P^2 coincide."""
    def reduce(k):
        return tuple(sorted((lab, (e * k) % power) for lab, e in factors.items() if (e * k) % power))
    if power == 2:
        return (2, reduce(1))
    return (3, min(reduce(1), reduce(2)))


def conditions_matching(power: int, factors: dict[str, int], rank: int | None = None) -> list[Condition]:
    key = normal_key(power, factors)
    out = [c for c in REGISTRY.values()
           if normal_key(c.power, c.factor_map) == key and (rank is None or rank in c.ranks)]
    return out


# ---- solving -----------------------------------------------------------------

@dataclass(frozen=True)
class SolutionSet:
    key: str
    kind: str                    # finite, empty, infinite-pell, infinite-param
    alphas: tuple[int, ...]
    provenance: str              # paper-registry, pell, bounded-search, trivial
    description: str = ""
    consistent: bool = True
    search_alphas: tuple[int, ...] = field(default=())

    @property
    def empty(self) -> bool:
        return self.kind == "empty"


def _provenance(cond: Condition) -> str:
    m = cond.method
    if isinstance(m, Pell):
        return "pell"
    if isinstance(m, Classical):
        return "paper-registry"
    if isinstance(m, Curves):
        return "paper-registry" if cond.known is not None else "bounded-search"
    return "trivial"


@lru_cache(maxsize=None)
def solve_condition(cond: Condition | str, alpha_bound: int = DEFAULT_ALPHA_BOUND,
                    rank: int | None = None,
                    curve_bound: int = DEFAULT_CURVE_BOUND) -> SolutionSet:
    """Admissible alpha satisfying the condition, |alpha| <= alpha_bound for infinite sets."""
    if isinstance(cond, str):
        cond = get_condition(cond)
    excluded = cond.excluded(rank)
    raw = cond.method.candidates(cond.power, curve_bound if isinstance(cond.method, Curves) else alpha_bound)
    found = sorted(a for a in raw if a not in excluded and cond.holds(a)
                   and (not cond.infinite or abs(a) <= alpha_bound))
    prov = _provenance(cond)
    consistent = True
    desc = cond.reduction
    if cond.known is not None:
        # published list, merged with what the box search turns up; any
        # disagreement inside the bound is flagged rather than hidden
        known = sorted(a for a in cond.known if cond.holds(a))
        consistent = known == sorted(cond.known) and \
            [a for a in found if abs(a) <= alpha_bound] == [a for a in known if abs(a) <= alpha_bound]
        alphas = tuple(sorted(set(known) | set(found)))
    else:
        alphas = tuple(found)
        if isinstance(cond.method, Curves):
            consistent = not found  # zero rank rows must yield excluded alpha only
    if isinstance(cond.method, Pell):
        kind = "infinite-pell"
        desc = "%s; Pell x^2-%dy^2=%s, |alpha|<=%d" % (cond.reduction, cond.method.D,
                                                        "/".join("%+d" % r for r in cond.method.rhs), alpha_bound)
    elif isinstance(cond.method, Atomic):
        kind = "infinite-param"
        desc = "%s, |alpha|<=%d" % (cond.reduction, alpha_bound)
    else:
        kind = "finite" if alphas else "empty"
    return SolutionSet(cond.key, kind, alphas, prov, desc, consistent, tuple(found))


def direct_search(cond: Condition | str, bound: int, rank: int | None = None) -> list[int]:
    """Oracle: every admissible alpha in [-bound, bound] at which the condition holds."""
    if isinstance(cond, str):
        cond = get_condition(cond)
    excluded = cond.excluded(rank)
    return [a for a in range(-bound, bound + 1) if a not in excluded and cond.holds(a)]


def registry_rows():
    """Rows for the CSV mirror of the solutions table."""
    for c in REGISTRY.values():
        known = "" if c.known is None else " ".join(str(a) for a in c.known)
        yield (c.key, c.text, c.power, " ".join(str(r) for r in c.ranks), c.reduction,
               c.comment, known, c.note)
