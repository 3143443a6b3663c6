"""Exception hierarchy for the kernel."""

__all__ = [
    "SkewPBWError",
    "NotAUnit",
    "BackendMismatch",
    "InvalidPresentation",
    "ZeroPolynomial",
    "LaurentUnsupported",
    "NotQuasiCommutative",
    "UnitLogUnsupported",
    "NotEndomorphismType",
    "NotValidated",
    "NotFiltered",
    "NonUnitScalar",
    "NotQuantumSpace",
    "NotADomain",
    "NotBijective",
    "InvalidExponent",
    "NotLaurent",
    "IndependenceFails",
    "ParseError",
    "SchemaError",
]


class SkewPBWError(Exception):
    """Base class for all errors raised by skewpbw."""


class NotAUnit(SkewPBWError, ArithmeticError):
    pass


class BackendMismatch(SkewPBWError, TypeError):
    pass


class InvalidPresentation(SkewPBWError, ValueError):
    pass


class ZeroPolynomial(SkewPBWError, ValueError):
    pass


class LaurentUnsupported(SkewPBWError, ValueError):
    pass


class NotQuasiCommutative(SkewPBWError, ValueError):
    pass


class UnitLogUnsupported(SkewPBWError, ValueError):
    pass


class NotEndomorphismType(SkewPBWError, ValueError):
    pass


class NotValidated(SkewPBWError, ValueError):
    pass


class NotFiltered(SkewPBWError, ValueError):
    pass


class NonUnitScalar(SkewPBWError, ValueError):
    pass


class NotQuantumSpace(SkewPBWError, ValueError):
    pass


class NotADomain(SkewPBWError, ValueError):
    pass


class NotBijective(SkewPBWError, ValueError):
    pass


class InvalidExponent(SkewPBWError, ValueError):
    pass


class NotLaurent(SkewPBWError, ValueError):
    pass


class IndependenceFails(SkewPBWError, ValueError):
    pass


class ParseError(SkewPBWError, ValueError):
    """Malformed input text; carries a 1-based line/column when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


class SchemaError(SkewPBWError, ValueError):
    pass
