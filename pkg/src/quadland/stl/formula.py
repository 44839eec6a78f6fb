"""Formula AST and its canonical text form."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union


class Dimension(Enum):
    """Signal dimension an atomic predicate reads.

    The surface syntax spells speed as ``||v||`` (velocity magnitude) and
    the absolute rotation angle as ``|phi|``.
    """

    X = "x"
    Y = "y"
    SPEED = "||v||"
    ABS_ANGLE = "|phi|"


class Comparator(Enum):
    LT = "<"
    GT = ">"


@dataclass(frozen=True)
class Atomic:
    dimension: Dimension
    comparator: Comparator
    constant: float


@dataclass(frozen=True)
class Conjunction:
    children: tuple["Formula", ...]

    def __post_init__(self) -> None:
        if not self.children:
            raise ValueError("conjunction needs at least one operand")


@dataclass(frozen=True)
class UntilBounded:
    """``left until[lower, upper] right`` with bounds in seconds."""

    left: "Formula"
    lower: float
    upper: float
    right: "Formula"

    def __post_init__(self) -> None:
        if not 0 <= self.lower <= self.upper:
            raise ValueError(
                f"until bounds must satisfy 0 <= lower <= upper, "
                f"got [{self.lower}, {self.upper}]"
            )


Formula = Union[Atomic, Conjunction, UntilBounded]


def _format_number(value: float) -> str:
    if math.isfinite(value) and value == int(value) and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


def _print_operand(f: Formula) -> str:
    # Non-atomic operands are parenthesized so the output re-parses unambiguously.
    text = print_formula(f)
    return text if isinstance(f, Atomic) else f"({text})"


def print_formula(f: Formula) -> str:
    """Canonical text form; ``parse_formula`` round-trips it."""
    if isinstance(f, Atomic):
        return f"{f.dimension.value} {f.comparator.value} {_format_number(f.constant)}"
    if isinstance(f, Conjunction):
        return " and ".join(_print_operand(c) for c in f.children)
    if isinstance(f, UntilBounded):
        return (
            f"{_print_operand(f.left)} until"
            f"[{_format_number(f.lower)},{_format_number(f.upper)}] "
            f"{_print_operand(f.right)}"
        )
    raise TypeError(f"not a formula: {f!r}")
