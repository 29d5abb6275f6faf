"""Exception hierarchy shared by every module.

Each error carries a short machine-readable ``code`` so the CLI can emit a
structured record without parsing messages.
"""


class EdsError(Exception):
    code = "eds-error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def record(self) -> dict:
        out = {"error": self.code, "message": str(self)}
        out.update({k: str(v) for k, v in self.details.items()})
        return out


class NonExactDivision(EdsError):
    code = "non-exact-division"


class NoUsableInstantiation(EdsError):
    code = "no-usable-instantiation"


class NonIntegerResult(EdsError):
    code = "non-integer-result"


class InvalidAlpha(EdsError):
    code = "invalid-alpha"


class SingularCurve(EdsError):
    code = "singular-curve"


class NotApplicable(EdsError):
    code = "not-applicable"


class NonIntegralExponent(EdsError):
    code = "non-integral-exponent"


class BadPrime(EdsError):
    code = "bad-prime"


class PeriodNotFound(EdsError):
    code = "period-not-found"


class RankTooSmall(EdsError):
    code = "rank-too-small"


class Unsolvable(EdsError):
    code = "unsolvable"


class UnknownCondition(EdsError):
    code = "unknown-condition"


class ZeroTermResidue(EdsError):
    code = "zero-term-residue"


class UnsupportedRank(EdsError):
    code = "unsupported-rank"
