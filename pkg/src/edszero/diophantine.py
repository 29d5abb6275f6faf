"""Perfect powers, Pell equations and small Diophantine enumerations.

Integral points on the elliptic curves met in the classification are found by
exhaustive search in a box, not by any descent or elliptic-logarithm
argument; see ``conditions`` for how the searches are combined with the
published solution lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator

import gmpy2
import numpy as np
from sympy import divisors

from .errors import Unsolvable


def is_square(x: int) -> bool:
    return x >= 0 and isqrt(x) ** 2 == x


def is_cube(x: int) -> bool:
    _, exact = gmpy2.iroot(gmpy2.mpz(abs(x)), 3)
    return bool(exact)


def icbrt(x: int) -> int | None:
    """Signed integer cube root, or None when x is not a cube."""
    r, exact = gmpy2.iroot(gmpy2.mpz(abs(x)), 3)
    if not exact:
        return None
    return int(r) if x >= 0 else -int(r)


@dataclass(frozen=True)
class PellProblem:
    """x^2 - D y^2 = rhs with rhs = +1 or -1."""

    D: int
    rhs: int = 1

    def __post_init__(self):
        if self.D < 2 or is_square(self.D):
            raise ValueError("D must be a positive nonsquare, got %r" % self.D)
        if self.rhs not in (1, -1):
            raise ValueError("rhs must be +1 or -1")

    def holds(self, x: int, y: int) -> bool:
        return x * x - self.D * y * y == self.rhs


def sqrt_continued_fraction(D: int) -> tuple[int, list[int]]:
    """(a0, period) of the continued fraction of sqrt(D)."""
    a0 = isqrt(D)
    m, d, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        period.append(a)
    return a0, period


def fundamental_solution(D: int) -> tuple[int, int, int]:
    """Least positive (x, y) of x^2 - D y^2 = +-1 and the sign it attains."""
    a0, period = sqrt_continued_fraction(D)
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    for a in period[:-1]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return p, q, p * p - D * q * q


def pell_iter(prob: PellProblem) -> Iterator[tuple[int, int]]:
    """All positive solutions in increasing x."""
    x1, y1, sign = fundamental_solution(prob.D)
    if prob.rhs == -1 and sign == 1:
        raise Unsolvable("x^2 - %d y^2 = -1 has no solution (even period)" % prob.D, D=prob.D)
    if sign == -1:
        # powers of the -1 solution alternate sign; step by its square
        sx, sy = x1 * x1 + prob.D * y1 * y1, 2 * x1 * y1
        x, y = (x1, y1) if prob.rhs == -1 else (sx, sy)
    else:
        sx, sy = x1, y1
        x, y = x1, y1
    while True:
        yield x, y
        x, y = x * sx + prob.D * y * sy, x * sy + y * sx


def pell_solutions(prob: PellProblem, limit: int) -> list[tuple[int, int]]:
    out = []
    for sol in pell_iter(prob):
        if len(out) >= limit:
            break
        out.append(sol)
    return out


def norm_form_points(k: int, D: int) -> list[tuple[int, int]]:
    """All integer (X, Y) with X^2 + k Y^2 = D, for the finite cases.

    Finite means k > 0, or k = -m^2 so that the form factors as
    (X - mY)(X + mY) = D with D != 0.
    """
    pts = set()
    if k > 0:
        if D < 0:
            return []
        for Y in range(isqrt(D // k) + 1):
            r = D - k * Y * Y
            if is_square(r):
                X = isqrt(r)
                pts.update({(X, Y), (-X, Y), (X, -Y), (-X, -Y)})
    elif k < 0 and is_square(-k) and D != 0:
        m = isqrt(-k)
        for u in divisors(abs(D)):
            for s in (1, -1):
                u1, v1 = s * u, D // (s * u)
                # u1 = X - mY, v1 = X + mY
                if (u1 + v1) % 2 == 0 and (v1 - u1) % (2 * m) == 0:
                    pts.add(((u1 + v1) // 2, (v1 - u1) // (2 * m)))
    else:
        raise ValueError("X^2 + %d Y^2 = %d is not a finite form" % (k, D))
    return sorted(pts)


def consecutive_cubes(search: int = 3) -> list[tuple[int, int]]:
    """Pairs (x, y) with y^3 - x^3 = 1.

    For |x| >= 2 the gap between consecutive cubes exceeds 1, so a tiny scan
    is complete.
    """
    return [(x, x + 1) for x in range(-search, search + 1) if (x + 1) ** 3 - x ** 3 == 1]


# the classical equation x^3 + 2 y^3 = 1 has no solutions with xy != 0 other
# than (-1, 1); this list is taken as known, and only re-checked by search
CLASSICAL_SOLUTIONS = ((1, 0), (-1, 1))


def classical_search(bound: int) -> list[tuple[int, int]]:
    """Solutions of x^3 + 2 y^3 = 1 with |y| <= bound, by direct search."""
    out = []
    for y in range(-bound, bound + 1):
        x = icbrt(1 - 2 * y ** 3)
        if x is not None:
            out.append((x, y))
    return sorted(out)


def _cubic(c, x):
    return ((c[0] * x + c[1]) * x + c[2]) * x + c[3]


def bounded_cubic_search(cubic: tuple[int, int, int, int], var_bound: int) -> list[tuple[int, int]]:
    """All (x, y) with y^2 = c3 x^3 + c2 x^2 + c1 x + c0 and |x| <= var_bound."""
    if var_bound < 0:
        raise ValueError("var_bound must be nonnegative")
    c = tuple(int(v) for v in cubic)
    xs = _candidate_xs(c, var_bound)
    pts = []
    for x in xs:
        v = _cubic(c, x)
        if is_square(v):
            y = isqrt(v)
            pts.append((x, y))
            if y:
                pts.append((x, -y))
    return sorted(pts)


def _candidate_xs(c, bound: int):
    """x values where the cubic is a square; numpy prefilter when int64 is safe."""
    worst = sum(abs(v) for v in c) * max(bound, 1) ** 3
    if worst >= 2 ** 62:
        return [x for x in range(-bound, bound + 1) if is_square(_cubic(c, x))]
    x = np.arange(-bound, bound + 1, dtype=np.int64)
    v = ((c[0] * x + c[1]) * x + c[2]) * x + c[3]
    v = np.where(v < 0, -1, v)
    r = np.floor(np.sqrt(v.clip(0).astype(np.float64))).astype(np.int64)
    hit = np.zeros_like(v, dtype=bool)
    for dr in (-1, 0, 1):
        rr = (r + dr).clip(0)
        hit |= (rr * rr == v)
    # exact recheck happens in the caller
    return [int(t) for t in x[hit]]
