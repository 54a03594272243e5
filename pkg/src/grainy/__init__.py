"""Grainy numbers: a bit-tuple lattice, grainy-valued fuzzy sets, and a
supplement negation."""

from .core import (
    Bit,
    Comparison,
    GrainyNumber,
    add,
    add_recursive,
    compare,
    flat,
    from_positions,
    geq,
    mul,
    mul_recursive,
    supplement,
    zero,
)
from .notation import NotationError, parse, render, render_bitstring, render_tuple

__version__ = "0.1.0"

__all__ = [
    "Bit",
    "Comparison",
    "GrainyNumber",
    "NotationError",
    "add",
    "add_recursive",
    "compare",
    "flat",
    "from_positions",
    "geq",
    "mul",
    "mul_recursive",
    "parse",
    "render",
    "render_bitstring",
    "render_tuple",
    "supplement",
    "zero",
]
