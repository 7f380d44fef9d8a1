"""Exception types shared across the package."""

from __future__ import annotations


class HpdError(Exception):
    """Base class for all errors raised by hpd."""


class MinimalityError(HpdError):
    """A generating set was expected to be minimal but is not."""


class UnsupportedShape(HpdError):
    """A reduction method was handed a hypergraph outside its hypothesis."""


class NeedsOracle(HpdError):
    """The combinatorial recursion got stuck and only brute force can finish."""


class OracleTooLarge(HpdError):
    """The brute-force oracle refused an instance above its size cap."""


class CharacteristicDisagreement(HpdError):
    """Projective dimension differed between two field characteristics."""

    def __init__(self, values: dict[int, int]):
        self.values = dict(values)
        desc = ", ".join(f"char {p}: {v}" for p, v in sorted(self.values.items()))
        super().__init__(f"pd depends on the characteristic ({desc})")


class ParseError(HpdError):
    """Malformed instance file; carries a 1-based line and column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


__all__ = [
    "HpdError",
    "MinimalityError",
    "UnsupportedShape",
    "NeedsOracle",
    "OracleTooLarge",
    "CharacteristicDisagreement",
    "ParseError",
]
