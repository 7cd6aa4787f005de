"""Exception hierarchy.

Everything raised on purpose derives from :class:`TrisectError`, so callers
(the CLI in particular) can separate domain failures from programming errors.
"""

from __future__ import annotations


class TrisectError(Exception):
    pass


class FieldMismatch(TrisectError, ValueError):
    pass


class BothZero(TrisectError, ValueError):
    pass


class ZeroPolynomial(TrisectError, ValueError):
    pass


class NotPolynomial(TrisectError, ValueError):
    """A coefficient that must lie in K[t] has a nontrivial denominator."""


class BothConstantInX(TrisectError, ValueError):
    pass


class NotOnCurve(TrisectError, ValueError):
    pass


class SingularCurve(TrisectError, ValueError):
    pass


class NotSemiReduced(TrisectError, ValueError):
    pass


class InvalidMumford(TrisectError, ValueError):
    pass


class MultiplicityUnsupported(TrisectError, ValueError):
    pass


class RepeatedX(TrisectError, ValueError):
    pass


class UnexpectedQuotientDegree(TrisectError, ValueError):
    pass


class NonSquarefreeF(TrisectError, ValueError):
    pass


class NonMonicF(TrisectError, ValueError):
    pass


class ZeroB0(TrisectError, ValueError):
    pass


class PointAtInfinity(TrisectError, ValueError):
    pass


class ShapeMismatch(TrisectError, ValueError):
    pass


class BasisMismatch(TrisectError, ValueError):
    pass


class ROutOfRange(TrisectError, ValueError):
    pass


class NonIntegralIntersection(TrisectError, ValueError):
    pass


class CommonComponent(TrisectError, ValueError):
    pass


class NonSquarefreeModulus(TrisectError, ValueError):
    pass


class ZeroCurve(TrisectError, ValueError):
    pass


class UnknownScenario(TrisectError, KeyError):
    pass


class ConfigError(TrisectError, ValueError):
    pass


class PolySyntaxError(TrisectError, ValueError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownSymbol(PolySyntaxError):
    pass
