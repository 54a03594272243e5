"""Text forms for grainy numbers.

Three interchangeable written forms are supported:

    canonical   1°3°(5)        ONE positions as k°, optional (n) length
    bitstring   1-1--          one character per bit
    tuple       [1,[-,[1,0]]]  nested head/tail pairs ending in 0

parse() auto-detects the form; each form also has a dedicated parser.
Rendering always emits the canonical spelling of each form, so
parse(render(x)) == x for every value.
"""

from __future__ import annotations

import enum

from .core import DASH, ONE, GrainyNumber, from_positions, zero

# Degree marks accepted on input; output always uses the first.
DEGREE_MARKS = "°*"


class Form(enum.Enum):
    """The written form a piece of text is in."""

    CANONICAL = "canonical"
    BITSTRING = "bitstring"
    TUPLE = "tuple"


class NotationError(ValueError):
    """Unparseable text; `position` is the 1-based offending column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (column {position})")
        self.position = position


def detect_form(text: str) -> Form:
    """Guess which written form `text` is in (whitespace ignored)."""
    stripped = "".join(text.split())
    if not stripped:
        raise NotationError("empty input", 1)
    if stripped == "0":
        return Form.CANONICAL  # "0" reads the same in every form
    if stripped.startswith("["):
        return Form.TUPLE
    if set(stripped) <= {"1", "-"}:
        return Form.BITSTRING
    return Form.CANONICAL


def parse(text: str) -> GrainyNumber:
    """Parse any of the three written forms."""
    form = detect_form(text)
    if form is Form.TUPLE:
        return parse_tuple(text)
    if form is Form.BITSTRING:
        return parse_bitstring(text)
    return parse_canonical(text)


def parse_canonical(text: str) -> GrainyNumber:
    """Parse the compact positional form: `0`, `k°` terms, trailing `(n)`.

    Positions must be strictly increasing and a trailing (n) must exceed
    the last position. Whitespace between tokens is ignored.
    """
    i, n = 0, len(text)

    def skip_ws() -> None:
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    skip_ws()
    if i >= n:
        raise NotationError("empty input", 1)
    if text[i] == "0":
        i += 1
        skip_ws()
        if i < n:
            raise NotationError("unexpected text after 0", i + 1)
        return zero()

    ones: list[int] = []
    last = 0
    length: int | None = None
    while True:
        skip_ws()
        if i >= n:
            break
        c = text[i]
        if c.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i >= n or text[i] not in DEGREE_MARKS:
                raise NotationError("expected degree mark after position", i + 1)
            i += 1
            value = int(text[start:i - 1])
            if length is not None:
                raise NotationError("no terms may follow the (n) length marker", start + 1)
            if value < 1:
                raise NotationError("positions start at 1", start + 1)
            if value <= last:
                raise NotationError("positions must be strictly increasing", start + 1)
            ones.append(value)
            last = value
        elif c == "(":
            start = i
            i += 1
            skip_ws()
            d0 = i
            while i < n and text[i].isdigit():
                i += 1
            if i == d0:
                raise NotationError("expected an integer inside (n)", i + 1)
            value = int(text[d0:i])
            skip_ws()
            if i >= n or text[i] != ")":
                raise NotationError("expected ')'", i + 1)
            i += 1
            if length is not None:
                raise NotationError("duplicate (n) length marker", start + 1)
            if value <= last:
                raise NotationError("(n) must exceed the last position", start + 1)
            length = value
        else:
            raise NotationError(f"unexpected character {c!r}", i + 1)

    total = length if length is not None else last
    return from_positions(ones, total)


def parse_bitstring(text: str) -> GrainyNumber:
    """Parse a string over {1, -}; the empty string is zero()."""
    bits = []
    for col, c in enumerate(text, start=1):
        if c.isspace():
            continue
        if c == "1":
            bits.append(ONE)
        elif c == "-":
            bits.append(DASH)
        else:
            raise NotationError(f"illegal bitstring character {c!r}", col)
    return GrainyNumber(tuple(bits))


def parse_tuple(text: str) -> GrainyNumber:
    """Parse the nested `[bit, rest]` form with terminal 0.

    Both `]` and `)` are accepted as closers.
    """
    i, n = 0, len(text)

    def skip_ws() -> None:
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    def node() -> tuple:
        nonlocal i
        skip_ws()
        if i >= n:
            raise NotationError("unexpected end of tuple", i + 1)
        c = text[i]
        if c == "0":
            i += 1
            return ()
        if c != "[":
            raise NotationError(f"expected '[' or '0', found {c!r}", i + 1)
        i += 1
        skip_ws()
        if i >= n or text[i] not in "1-":
            raise NotationError("expected a bit ('1' or '-')", i + 1)
        bit = ONE if text[i] == "1" else DASH
        i += 1
        skip_ws()
        if i >= n or text[i] != ",":
            raise NotationError("expected ','", i + 1)
        i += 1
        rest = node()
        skip_ws()
        if i >= n or text[i] not in "])":
            raise NotationError("expected ']' or ')'", i + 1)
        i += 1
        return (bit,) + rest

    bits = node()
    skip_ws()
    if i < n:
        raise NotationError("unexpected text after tuple", i + 1)
    return GrainyNumber(bits)


def render(x: GrainyNumber) -> str:
    """Canonical compact form; the right inverse of parse()."""
    if not x.bits:
        return "0"
    ones = x.ones()
    parts = [f"{p}°" for p in ones]
    last = ones[-1] if ones else 0
    if len(x.bits) > last:  # trailing dashes, or an all-dash flat
        parts.append(f"({len(x.bits)})")
    return "".join(parts)


def render_bitstring(x: GrainyNumber) -> str:
    """One character per bit; zero() renders as the empty string."""
    return "".join(b.value for b in x.bits)


def render_tuple(x: GrainyNumber) -> str:
    """Nested head/tail form, e.g. [1,[-,[1,0]]]."""
    out = "0"
    for b in reversed(x.bits):
        out = f"[{b.value},{out}]"
    return out
