"""Tate normal forms with a torsion point of order N and the EDS they induce.

The family member is fixed by an integer parameter alpha.  For the improper
ranks 2 and 3 the "alpha" slot carries the raw curve coefficient (b for N=2,
a3 for N=3) instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .eds_core import InitialValues
from .errors import InvalidAlpha, NonIntegerResult, NotApplicable, SingularCurve, UnsupportedRank

SUPPORTED_RANKS = (2, 3, 4, 5, 6, 7, 8, 9, 10, 12)
PROPER_RANKS = (4, 5, 6, 7, 8, 9, 10, 12)

EXCLUDED_ALPHA = {
    2: (0,), 3: (0,),
    4: (0,), 5: (0,), 6: (-1, 0),
    7: (0, 1), 8: (0, 1), 9: (0, 1), 10: (0, 1), 12: (0, 1),
}


@dataclass(frozen=True)
class Poly:
    """Integer polynomial in alpha, coefficients from the constant term up."""

    coeffs: tuple[int, ...]

    def __call__(self, a: int) -> int:
        v = 0
        for c in reversed(self.coeffs):
            v = v * a + c
        return v

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


# the irreducible factors that appear in closed-form terms
A = Poly((0, 1))
A_PLUS_1 = Poly((1, 1))
A_MINUS_1 = Poly((-1, 1))
TWO_A_MINUS_1 = Poly((-1, 2))
GAMMA = Poly((1, -1, 1))          # a^2 - a + 1
DELTA = Poly((-1, 3, -1))         # -a^2 + 3a - 1
MU = Poly((1, -3, 3))             # 3a^2 - 3a + 1
THETA = Poly((-1, 2, -2))         # 2a - 2a^2 - 1
LAMBDA = Poly((0, 1, -5, 9, -6))  # (3a^2 - 3a + 1)(a - 2a^2) = -a (2a-1) mu

POLYS = {
    "a": A, "a+1": A_PLUS_1, "a-1": A_MINUS_1, "2a-1": TWO_A_MINUS_1,
    "gamma": GAMMA, "delta": DELTA, "mu": MU, "theta": THETA, "lambda": LAMBDA,
}

PRETTY = {
    "a": "α", "a+1": "(α+1)", "a-1": "(α−1)", "2a-1": "(2α−1)", "gamma": "γ",
    "delta": "δ", "mu": "μ", "theta": "θ", "lambda": "λ", "b": "b", "a3": "a3",
}


@dataclass(frozen=True)
class FactorBasis:
    """Pairwise coprime polynomials whose signed monomials give every term.

    ``derived`` maps a product label to (sign, exponents over the basis).
    """

    rank: int
    labels: tuple[str, ...]
    derived: dict

    def evaluate(self, alpha: int) -> dict[str, int]:
        if self.rank in (2, 3):
            return {self.labels[0]: alpha}
        return {lab: POLYS[lab](alpha) for lab in self.labels}


_BASIS_LABELS = {
    2: ("b",), 3: ("a3",),
    4: ("a",), 5: ("a",), 6: ("a", "a+1"), 7: ("a", "a-1"),
    8: ("a", "a-1", "2a-1"), 9: ("a", "a-1", "gamma"),
    10: ("a", "a-1", "2a-1", "delta"),
    12: ("a", "a-1", "2a-1", "mu", "theta"),
}


def factor_basis(rank: int) -> FactorBasis:
    if rank not in _BASIS_LABELS:
        raise InvalidAlpha("unsupported rank %r" % rank, rank=rank)
    derived = {}
    if rank == 12:
        derived["lambda"] = (-1, {"a": 1, "2a-1": 1, "mu": 1})
    return FactorBasis(rank, _BASIS_LABELS[rank], derived)


@dataclass(frozen=True)
class EdsSpec:
    rank: int
    alpha: int

    def __post_init__(self):
        if self.rank not in SUPPORTED_RANKS:
            raise UnsupportedRank("rank must be one of %s" % (SUPPORTED_RANKS,), rank=self.rank)
        if self.alpha in EXCLUDED_ALPHA[self.rank]:
            raise InvalidAlpha("alpha=%d is excluded for rank %d" % (self.alpha, self.rank),
                               rank=self.rank, alpha=self.alpha)
        for lab, v in factor_basis(self.rank).evaluate(self.alpha).items():
            if v == 0:
                raise InvalidAlpha("factor %s vanishes at alpha=%d" % (lab, self.alpha))

    @property
    def improper(self) -> bool:
        return self.rank in (2, 3)

    @property
    def basis(self) -> FactorBasis:
        return factor_basis(self.rank)


def admissible_alphas(rank: int, lo: int, hi: int) -> list[int]:
    return [a for a in range(lo, hi + 1) if a not in EXCLUDED_ALPHA[rank]]


@dataclass(frozen=True)
class CurveCoefficients:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with rational coefficients."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction = Fraction(0)
    a6: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def tate(cls, b, c) -> "CurveCoefficients":
        b, c = Fraction(b), Fraction(c)
        return cls(1 - c, -b, -b)

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coefficients())

    def coefficients(self) -> tuple[Fraction, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def discriminant(self) -> Fraction:
        a1, a2, a3, a4, a6 = self.coefficients()
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def scaled(self, u) -> "CurveCoefficients":
        """Model after (x, y) -> (x/u^2, y/u^3): each a_i picks up u^i."""
        u = Fraction(u)
        return CurveCoefficients(self.a1 * u, self.a2 * u ** 2, self.a3 * u ** 3,
                                 self.a4 * u ** 4, self.a6 * u ** 6)

    def __str__(self) -> str:
        def f(x):
            return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)
        return "[a1=%s, a2=%s, a3=%s, a4=%s, a6=%s]" % tuple(f(x) for x in self.coefficients())


def tate_parameters(spec: EdsSpec) -> tuple[Fraction, Fraction]:
    """(b, c) of the Tate normal form for a proper rank."""
    N, a = spec.rank, Fraction(spec.alpha)
    if N == 4:
        return a, Fraction(0)
    if N == 5:
        return a, a
    if N == 6:
        return a + a * a, a
    if N == 7:
        return a ** 3 - a ** 2, a ** 2 - a
    if N == 8:
        b = (2 * a - 1) * (a - 1)
        return b, b / a
    if N == 9:
        c = a * a * (a - 1)
        return c * (a * a - a + 1), c
    if N == 10:
        d = a - (a - 1) ** 2
        c = (2 * a ** 3 - 3 * a ** 2 + a) / d
        return c * a * a / d, c
    if N == 12:
        c = (3 * a * a - 3 * a + 1) * (a - 2 * a * a) / (a - 1) ** 3
        return c * (2 * a - 2 * a * a - 1) / (a - 1), c
    raise NotApplicable("rank %d has no Tate parametrization by alpha" % N, rank=N)


def tate_normal_form(spec: EdsSpec) -> CurveCoefficients:
    b, c = tate_parameters(spec)
    curve = CurveCoefficients.tate(b, c)
    if curve.discriminant() == 0:
        raise SingularCurve("singular Tate curve at alpha=%d" % spec.alpha, rank=spec.rank)
    return curve


def integerizing_scale(spec: EdsSpec) -> int:
    a = spec.alpha
    if spec.rank == 8:
        return a
    if spec.rank == 10:
        return DELTA(a) ** 2
    if spec.rank == 12:
        return (a - 1) ** 4
    return 1


def integerize(spec: EdsSpec, curve: CurveCoefficients) -> CurveCoefficients:
    """Integral model of ``curve``; identity when it is already integral."""
    out = curve.scaled(integerizing_scale(spec))
    if not out.integral:
        raise NotApplicable("no integralizing change of variables known for this curve",
                            rank=spec.rank, alpha=spec.alpha)
    return out


def initial_values_from_curve(curve: CurveCoefficients) -> InitialValues:
    a1, a2, a3, a4 = curve.a1, curve.a2, curve.a3, curve.a4
    h2 = a3
    h3 = a2 * a3 ** 2 - a4 ** 2 - a1 * a3 * a4
    h4 = 2 * a3 * a4 * h3 + a1 * a3 ** 2 * h3 - a3 ** 5
    if any(x.denominator != 1 for x in (h2, h3, h4)):
        raise NonIntegerResult("curve coefficients do not give integral initial values")
    return InitialValues(int(h2), int(h3), int(h4))


def initial_values(spec: EdsSpec) -> InitialValues:
    """Closed initial values as polynomials in alpha."""
    N, a = spec.rank, spec.alpha
    if N == 2:
        return InitialValues(0, -a * a, 0)
    if N == 3:
        return InitialValues(a, 0, -a ** 5)
    if N == 4:
        return InitialValues(-a, -a ** 3, 0)
    if N == 5:
        return InitialValues(-a, -a ** 3, a ** 6)
    if N == 6:
        return InitialValues(-a * (a + 1), -a ** 3 * (a + 1) ** 3, a ** 6 * (a + 1) ** 5)
    if N == 7:
        return InitialValues(-a ** 2 * (a - 1), -a ** 6 * (a - 1) ** 3, a ** 11 * (a - 1) ** 6)
    if N == 8:
        xi = (a - 1) * (2 * a - 1)
        return InitialValues(-a ** 3 * xi, -a ** 8 * xi ** 3, a ** 14 * xi ** 6)
    if N == 9:
        g = GAMMA(a)
        return InitialValues(-a ** 2 * (a - 1) * g, -a ** 6 * (a - 1) ** 3 * g ** 3,
                             a ** 12 * (a - 1) ** 6 * g ** 5)
    if N == 10:
        xi, d = (a - 1) * (2 * a - 1), DELTA(a)
        return InitialValues(-a ** 3 * xi * d ** 4, -a ** 9 * xi ** 3 * d ** 10,
                             a ** 16 * xi ** 6 * d ** 19)
    if N == 12:
        lam, th = LAMBDA(a), THETA(a)
        return InitialValues(-(a - 1) ** 8 * lam * th, -(a - 1) ** 20 * lam ** 3 * th ** 3,
                             (a - 1) ** 37 * lam ** 6 * th ** 5)
    raise InvalidAlpha("unsupported rank %d" % N)


def pairwise_coprime(values) -> bool:
    vals = list(values)
    return all(gcd(x, y) == 1 for i, x in enumerate(vals) for y in vals[i + 1:])
