"""Small temporal-logic specification language with quantitative semantics.

The fragment covers linear atomic predicates over named signal dimensions,
conjunction, and one bounded until operator -- enough to express the
landing-task requirements while keeping evaluation exactly checkable
against a definitional brute-force evaluator.
"""

from quadland.stl.formula import (
    Atomic,
    Comparator,
    Conjunction,
    Dimension,
    Formula,
    UntilBounded,
    print_formula,
)
from quadland.stl.parser import (
    SpecError,
    SpecSyntaxError,
    UnknownSignalError,
    load_spec_file,
    parse_formula,
    parse_spec_source,
)
from quadland.stl.robustness import (
    NEG_SENTINEL,
    Sample,
    Trace,
    bounds_to_steps,
    robustness,
    robustness_series,
    until_from_series,
)

__all__ = [
    "Atomic",
    "Comparator",
    "Conjunction",
    "Dimension",
    "Formula",
    "UntilBounded",
    "print_formula",
    "SpecError",
    "SpecSyntaxError",
    "UnknownSignalError",
    "load_spec_file",
    "parse_formula",
    "parse_spec_source",
    "NEG_SENTINEL",
    "Sample",
    "Trace",
    "bounds_to_steps",
    "robustness",
    "robustness_series",
    "until_from_series",
]
