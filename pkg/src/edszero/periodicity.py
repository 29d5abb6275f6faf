"""Reduction modulo odd primes, rank of apparition and periods.

Two independent routes to the period: scanning the reduced sequence, and
Ward's formula pi = tau * rho built from the rank of apparition and the
multiplicative orders of two residues.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from sympy import isprime
from sympy.ntheory import n_order

from .errors import BadPrime, PeriodNotFound, RankTooSmall
from .tate_curves import EdsSpec, initial_values


@dataclass(frozen=True)
class ModEds:
    p: int
    terms: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.terms[n]

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class PeriodReport:
    rho: int
    a1: int
    a2: int
    e: int
    k: int
    nu: int
    tau: Fraction
    pi: int
    branch: str = ""
    branch_pi: Fraction | None = None

    @property
    def branch_agrees(self) -> bool:
        return self.branch_pi == self.pi


def _check_prime(spec: EdsSpec, p: int) -> None:
    if p == 2 or p < 2 or not isprime(p):
        raise BadPrime("p=%d is not an odd prime" % p, p=p)
    for lab, v in spec.basis.evaluate(spec.alpha).items():
        if v % p == 0:
            raise BadPrime("p=%d divides factor %s at alpha=%d" % (p, lab, spec.alpha),
                           p=p, factor=lab)


def _mod_terms(spec: EdsSpec, p: int, count: int) -> list[int]:
    h = [0] + [x % p for x in initial_values(spec).as_list()]
    for t in range(5, count + 1):
        for d in [t - 4] + ([3] if t % 2 and t >= 7 else []) + ([1] if t % 2 else [2]):
            if h[d]:
                m, n = (t + d) // 2, (t - d) // 2
                num = h[m + 1] * h[m - 1] * h[n] ** 2 - h[n + 1] * h[n - 1] * h[m] ** 2
                h.append(num * pow(h[d], -1, p) % p)
                break
        else:
            # all candidate divisors vanish mod p; a zero proper divisor forces zero
            if any(h[d] == 0 for d in range(2, t // 2 + 1) if t % d == 0):
                h.append(0)
            else:
                raise BadPrime("reduction mod %d degenerates at index %d" % (p, t), p=p)
    return h[: count + 1]


def reduce_mod(spec: EdsSpec, p: int, count: int) -> ModEds:
    if count < 1:
        raise ValueError("count must be at least 1")
    _check_prime(spec, p)
    return ModEds(p, tuple(_mod_terms(spec, p, max(count, 4))[: count + 1]))


def _first_zero(h) -> int | None:
    return next((i for i in range(1, len(h)) if h[i] == 0), None)


def _scan_period(h, cap: int) -> int | None:
    for pi in range(1, cap + 1):
        if 3 * pi + 1 >= len(h):
            break
        if h[pi] == 0 and h[pi + 1] == 1 and all(h[n + pi] == h[n] for n in range(2 * pi + 1)):
            return pi
    return None


def _cap(spec: EdsSpec, p: int) -> int:
    return 4 * spec.rank * (p - 1)


def period_direct(spec: EdsSpec, p: int) -> int:
    """Least pi with h(n+pi) = h(n) mod p on the window [0, 2 pi]."""
    cap = _cap(spec, p)
    h = reduce_mod(spec, p, 3 * cap + 2).terms
    pi = _scan_period(h, cap)
    if pi is None:
        raise PeriodNotFound("no period up to %d" % cap, p=p, alpha=spec.alpha)
    return pi


def rank_of_apparition(spec: EdsSpec, p: int) -> int:
    """Smallest rho with p | h(rho); the zero pattern is confirmed over one period."""
    cap = _cap(spec, p)
    h = reduce_mod(spec, p, 3 * cap + 2).terms
    rho = _first_zero(h)
    pi = _scan_period(h, cap)
    if pi is not None and h[rho + 1] != 0:
        for n in range(pi + 1):
            if (h[n] == 0) != (n % rho == 0):
                raise AssertionError("zero pattern mod %d breaks at n=%d" % (p, n))
    return rho


def _v2(x: int) -> int:
    return (x & -x).bit_length() - 1


def ward_nu(e: int, k: int) -> int:
    if e % 2 and k % 2:
        return 1
    if e % 2 == 0 and k % 2 == 0 and _v2(e) == _v2(k):
        return -1
    return 0


def period_formula(spec: EdsSpec, p: int) -> PeriodReport:
    h = reduce_mod(spec, p, spec.rank + 2).terms
    rho = _first_zero(h)
    if rho <= 3:
        raise RankTooSmall("rank of apparition %d is at most 3" % rho, rho=rho)
    a1 = h[2] * pow(h[rho - 2], -1, p) % p
    a2 = h[rho - 1]
    e, k = n_order(a1, p), n_order(a2, p)
    nu = ward_nu(e, k)
    tau = Fraction(2) ** nu * lcm(e, k)
    pi = tau * rho
    if pi.denominator != 1:
        raise AssertionError("non-integral period %s" % pi)

    # the dichotomy on the order of a1: primitive root -> t(p-1), else 2 N l
    N = spec.rank
    if e == p - 1:
        branch, t = "primitive-root", Fraction(N) if N % 2 == 0 else Fraction(N, 2)
        branch_pi = t * (p - 1)
    else:
        q = lcm(e, k)
        branch = "2Nl"
        branch_pi = Fraction(2 * N * (q if q % 2 else q // 2))
    return PeriodReport(rho, a1, a2, e, k, nu, tau, int(pi), branch, branch_pi)


def period_grid(rank: int, alphas, primes) -> dict:
    """{(alpha, p): period or None for a BadPrime cell}, checked by both routes."""
    out = {}
    for a in alphas:
        spec = EdsSpec(rank, a)
        for p in primes:
            try:
                d = period_direct(spec, p)
            except BadPrime:
                out[(a, p)] = None
                continue
            out[(a, p)] = d
    return out
