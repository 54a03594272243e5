"""Grainy numbers: variable-length bit tuples forming a lattice.

A grainy number is a finite (possibly empty) tuple over {DASH, ONE}.
The empty tuple plays the role of 0. Addition is the bitwise AND,
truncated to the shorter operand; multiplication is the bitwise OR,
with the longer operand's extra bits kept. Under the order

    x >= y  iff  x + y == x

addition is the join, multiplication is the meet, and 0 is the top
element. All values are immutable and all operations are pure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable


class Bit(enum.Enum):
    """One grainy digit: DASH ("-") or ONE ("1")."""

    DASH = "-"
    ONE = "1"

    def __repr__(self) -> str:
        return f"Bit.{self.name}"


DASH = Bit.DASH
ONE = Bit.ONE


@dataclass(frozen=True)
class GrainyNumber:
    """An immutable tuple of bits; positions are 1-indexed.

    No normalization is applied: values of different lengths are
    distinct even when they differ only by trailing dashes, so
    GrainyNumber((ONE,)) and GrainyNumber((ONE, DASH)) are not equal.
    """

    bits: tuple[Bit, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.bits, tuple):
            object.__setattr__(self, "bits", tuple(self.bits))

    def __len__(self) -> int:
        return len(self.bits)

    def ones(self) -> tuple[int, ...]:
        """1-indexed positions holding ONE, ascending."""
        return tuple(i for i, b in enumerate(self.bits, start=1) if b is ONE)

    def __add__(self, other: GrainyNumber) -> GrainyNumber:
        return add(self, other)

    def __mul__(self, other: GrainyNumber) -> GrainyNumber:
        return mul(self, other)

    # The order is partial: incomparable pairs answer False both ways,
    # like set inclusion does.
    def __ge__(self, other: GrainyNumber) -> bool:
        return geq(self, other)

    def __le__(self, other: GrainyNumber) -> bool:
        return geq(other, self)

    def __gt__(self, other: GrainyNumber) -> bool:
        return self != other and geq(self, other)

    def __lt__(self, other: GrainyNumber) -> bool:
        return self != other and geq(other, self)

    def __repr__(self) -> str:
        return f"GrainyNumber({''.join(b.value for b in self.bits)!r})"


def zero() -> GrainyNumber:
    """The empty tuple, the top element of the order."""
    return GrainyNumber(())


def flat(n: int) -> GrainyNumber:
    """The all-DASH tuple of length n; flat(0) is zero()."""
    if n < 0:
        raise ValueError(f"flat length must be >= 0, got {n}")
    return GrainyNumber((DASH,) * n)


def from_positions(ones: Iterable[int], length: int) -> GrainyNumber:
    """Length `length` with ONE exactly at the given 1-indexed positions."""
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    positions = set(ones)
    for p in positions:
        if not 1 <= p <= length:
            raise ValueError(f"position {p} out of range 1..{length}")
    return GrainyNumber(tuple(ONE if i in positions else DASH for i in range(1, length + 1)))


def add(x: GrainyNumber, y: GrainyNumber) -> GrainyNumber:
    """Bitwise AND truncated to the shorter operand; the lattice join."""
    return GrainyNumber(
        tuple(ONE if a is ONE and b is ONE else DASH for a, b in zip(x.bits, y.bits))
    )


def mul(x: GrainyNumber, y: GrainyNumber) -> GrainyNumber:
    """Bitwise OR with the longer operand's extra bits kept; the lattice meet."""
    head = tuple(ONE if a is ONE or b is ONE else DASH for a, b in zip(x.bits, y.bits))
    n = len(head)
    return GrainyNumber(head + (x.bits[n:] or y.bits[n:]))


def _add_rec(xb: tuple[Bit, ...], yb: tuple[Bit, ...]) -> tuple[Bit, ...]:
    if not xb or not yb:  # either operand exhausted: the extra bits are cut
        return ()
    a, b = xb[0], yb[0]
    head = a if a is b else DASH  # equal bits kept; ONE against DASH gives DASH
    return (head,) + _add_rec(xb[1:], yb[1:])


def _mul_rec(xb: tuple[Bit, ...], yb: tuple[Bit, ...]) -> tuple[Bit, ...]:
    if not xb:  # one operand exhausted: the extra bits are concatenated
        return yb
    if not yb:
        return xb
    a, b = xb[0], yb[0]
    head = a if a is b else ONE
    return (head,) + _mul_rec(xb[1:], yb[1:])


def add_recursive(x: GrainyNumber, y: GrainyNumber) -> GrainyNumber:
    """add() computed by literal head/tail recursion.

    Kept as an independently derived twin of the iterative add() for
    differential testing and for the order oracles in lawcheck.
    """
    return GrainyNumber(_add_rec(x.bits, y.bits))


def mul_recursive(x: GrainyNumber, y: GrainyNumber) -> GrainyNumber:
    """mul() computed by literal head/tail recursion; see add_recursive()."""
    return GrainyNumber(_mul_rec(x.bits, y.bits))


def geq(x: GrainyNumber, y: GrainyNumber) -> bool:
    """x >= y iff x + y == x. zero() is the top element."""
    return add(x, y) == x


class Comparison(enum.Enum):
    """Outcome of comparing two grainy numbers under the partial order."""

    EQUAL = "equal"
    GREATER = "greater"
    LESS = "less"
    INCOMPARABLE = "incomparable"


def compare(x: GrainyNumber, y: GrainyNumber) -> Comparison:
    """Classify the pair; INCOMPARABLE is a normal outcome, never an error."""
    if x == y:
        return Comparison.EQUAL
    if geq(x, y):
        return Comparison.GREATER
    if geq(y, x):
        return Comparison.LESS
    return Comparison.INCOMPARABLE


def supplement(x: GrainyNumber, mask: GrainyNumber) -> GrainyNumber:
    """Flip x's bits wherever the mask holds a ONE; x's length is kept.

    Mask positions beyond len(x) are ignored and x's bits beyond
    len(mask) are unchanged, so the operation is an involution for every
    mask and the empty mask is the identity.
    """
    flipped = tuple(
        (DASH if a is ONE else ONE) if m is ONE else a for a, m in zip(x.bits, mask.bits)
    )
    return GrainyNumber(flipped + x.bits[len(flipped):])
