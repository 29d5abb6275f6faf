"""Exact big-integer engine for elliptic divisibility sequences.

Terms are produced from the four initial values with the recurrence

    h(m+n) h(m-n) = h(m+1) h(m-1) h(n)^2 - h(n+1) h(n-1) h(m)^2

instantiated so that the unknown term is ``h(t)`` and the divisor is a term
already known to be nonzero.  Arithmetic runs on gmpy2 integers internally;
every public value is a plain ``int``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from gmpy2 import mpz

from .errors import NonExactDivision, NonIntegerResult, NoUsableInstantiation

# terms reach tens of thousands of digits; printing them must not trip the
# interpreter's conversion guard (3.11+ only)
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


@dataclass(frozen=True)
class InitialValues:
    """The seed ``[1; h2; h3; h4]`` of an EDS."""

    h2: int
    h3: int
    h4: int

    @property
    def h1(self) -> int:
        return 1

    @property
    def proper(self) -> bool:
        return self.h2 * self.h3 != 0

    def as_list(self) -> list[int]:
        return [1, self.h2, self.h3, self.h4]

    @classmethod
    def from_list(cls, values: Sequence[int]) -> "InitialValues":
        if len(values) != 4 or values[0] != 1:
            raise ValueError("initial values must be [1, h2, h3, h4]")
        return cls(int(values[1]), int(values[2]), int(values[3]))

    def __str__(self) -> str:
        return "[1; %d; %d; %d]" % (self.h2, self.h3, self.h4)


@dataclass(frozen=True)
class EquivalenceScale:
    omega: Fraction

    def __post_init__(self):
        object.__setattr__(self, "omega", Fraction(self.omega))
        if self.omega == 0:
            raise ValueError("omega must be nonzero")


@dataclass(frozen=True)
class EdsSequence:
    """An immutable prefix h0..hM of an EDS.  Extension returns a new value."""

    initial: InitialValues
    terms: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.terms:
            object.__setattr__(self, "terms", (0, *self.initial.as_list()))

    @property
    def max_index(self) -> int:
        return len(self.terms) - 1

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise IndexError("negative indices are not supported")
        return self.terms[n]

    def __len__(self) -> int:
        return len(self.terms)


def _divisor_order(t: int) -> list[int]:
    """Divisor indices d tried for h(t): the recurrence with m=(t+d)/2, n=(t-d)/2."""
    order = [t - 4]
    if t % 2 == 1:
        if t >= 7:
            order.append(3)
        order.append(1)
    else:
        order.append(2)
    seen = []
    for d in order:
        if d >= 1 and d not in seen:
            seen.append(d)
    return seen


def _next_term(h: list, t: int):
    """Compute h(t) from h(0..t-1) as an mpz."""
    for d in _divisor_order(t):
        hd = h[d]
        if hd == 0:
            continue
        m, n = (t + d) // 2, (t - d) // 2
        num = h[m + 1] * h[m - 1] * h[n] ** 2 - h[n + 1] * h[n - 1] * h[m] ** 2
        q, r = divmod(num, hd)
        if r:
            raise NonExactDivision(
                "h(%d) is not an integer: division by h(%d) leaves a remainder" % (t, d),
                index=t, divisor_index=d)
        return q
    # every divisor vanished; a zero proper divisor forces h(t) = 0
    for d in range(2, t // 2 + 1):
        if t % d == 0 and h[d] == 0:
            return mpz(0)
    raise NoUsableInstantiation("no nonzero divisor available for h(%d)" % t, index=t)


def extend_to(seq: EdsSequence, n: int) -> EdsSequence:
    """Return a sequence whose terms cover h0..hn (never shrinks)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n <= seq.max_index:
        return seq
    h = [mpz(x) for x in seq.terms]
    for t in range(len(h), n + 1):
        h.append(_next_term(h, t))
    return EdsSequence(seq.initial, tuple(int(x) for x in h))


def sequence(initial: InitialValues | Sequence[int], n: int) -> EdsSequence:
    """Convenience: build and extend in one call."""
    if not isinstance(initial, InitialValues):
        initial = InitialValues.from_list(initial)
    return extend_to(EdsSequence(initial), n)


def check_eq11(seq: EdsSequence, m: int, n: int) -> bool:
    if not 1 <= n <= m:
        raise ValueError("need m >= n >= 1")
    h = seq.terms
    return h[m + n] * h[m - n] == h[m + 1] * h[m - 1] * h[n] ** 2 - h[n + 1] * h[n - 1] * h[m] ** 2


def check_divisibility(seq: EdsSequence, up_to: int) -> bool:
    """True iff h(n) divides h(m) whenever n | m <= up_to."""
    h = [mpz(x) for x in seq.terms[: up_to + 1]]
    for n in range(1, up_to + 1):
        hn = h[n]
        for m in range(2 * n, up_to + 1, n):
            if hn == 0:
                if h[m] != 0:
                    return False
            elif h[m] % hn:
                return False
    return True


def apply_equivalence(seq: EdsSequence, scale: EquivalenceScale, up_to: int) -> EdsSequence:
    """Map h(n) to omega^(n^2-1) h(n) for n <= up_to."""
    seq = extend_to(seq, max(up_to, 4))
    w = scale.omega
    out = [0]
    for n in range(1, max(up_to, 4) + 1):
        e = n * n - 1
        num = w.numerator ** e * seq.terms[n]
        den = w.denominator ** e
        if num % den:
            raise NonIntegerResult("transformed h(%d) is not an integer" % n, index=n)
        out.append(num // den)
    return EdsSequence(InitialValues(out[2], out[3], out[4]), tuple(out))
