"""Fuzzy sets whose membership values are grainy numbers.

A set is a named, ordered, finite domain of labels with one grainy
membership value per label. Operations lift the number algebra
pointwise; the supplement negation is a strategy point so alternative
number-level semantics can be swapped in.

File format (UTF-8, line oriented):

    set <name>
    <label><TAB><grainy literal in any notation form>
    ...

Lines starting with '#' are comments; blank lines are ignored.
store() emits canonical compact notation, so store/load round-trips.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .core import GrainyNumber, add, geq, mul, supplement
from .notation import NotationError, parse, render

SupplementFn = Callable[[GrainyNumber, GrainyNumber], GrainyNumber]


class DomainMismatchError(ValueError):
    """Two sets cannot be combined: their domains differ."""


class FuzzySetFormatError(ValueError):
    """A fuzzy-set file is malformed; `line` is the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True, eq=False)
class GrainyFuzzySet:
    """Ordered domain of labels, each mapped to a grainy membership value.

    Equality compares domain and membership only; `name` is a display
    label (operation results carry derived names). Instances are
    immutable after construction.
    """

    name: str
    domain: tuple[str, ...]
    membership: dict[str, GrainyNumber] = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "membership", dict(self.membership))
        if not self.name:
            raise ValueError("set name must be nonempty")
        if len(set(self.domain)) != len(self.domain):
            raise ValueError("domain labels must be unique")
        if set(self.membership) != set(self.domain):
            missing = set(self.domain) - set(self.membership)
            extra = set(self.membership) - set(self.domain)
            raise ValueError(
                f"membership must cover the domain exactly "
                f"(missing {sorted(missing)}, extra {sorted(extra)})"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrainyFuzzySet):
            return NotImplemented
        return self.domain == other.domain and self.membership == other.membership

    def value(self, label: str) -> GrainyNumber:
        return self.membership[label]


def _require_same_domain(a: GrainyFuzzySet, b: GrainyFuzzySet) -> None:
    for la, lb in zip(a.domain, b.domain):
        if la != lb:
            raise DomainMismatchError(f"domains differ at label {la!r} vs {lb!r}")
    if len(a.domain) != len(b.domain):
        longer = a.domain if len(a.domain) > len(b.domain) else b.domain
        raise DomainMismatchError(
            f"domains differ at label {longer[min(len(a.domain), len(b.domain))]!r}"
        )


def _derived_name(a: GrainyFuzzySet, b: GrainyFuzzySet, symbol: str) -> str:
    # Identical operand names collapse, so idempotent combinations keep
    # the operand's name instead of growing "A(+)A".
    if a.name == b.name:
        return a.name
    return f"{a.name}{symbol}{b.name}"


def pointwise_add(a: GrainyFuzzySet, b: GrainyFuzzySet) -> GrainyFuzzySet:
    """Membership-wise addition (join) of two sets over the same domain."""
    _require_same_domain(a, b)
    values = {u: add(a.membership[u], b.membership[u]) for u in a.domain}
    return GrainyFuzzySet(_derived_name(a, b, "⊕"), a.domain, values)


def pointwise_mul(a: GrainyFuzzySet, b: GrainyFuzzySet) -> GrainyFuzzySet:
    """Membership-wise multiplication (meet) of two sets over the same domain."""
    _require_same_domain(a, b)
    values = {u: mul(a.membership[u], b.membership[u]) for u in a.domain}
    return GrainyFuzzySet(_derived_name(a, b, "⊗"), a.domain, values)


def set_geq(a: GrainyFuzzySet, b: GrainyFuzzySet) -> bool:
    """True iff a's membership dominates b's at every label."""
    _require_same_domain(a, b)
    return all(geq(a.membership[u], b.membership[u]) for u in a.domain)


def supplement_set(a: GrainyFuzzySet, mask: GrainyNumber,
                   supplement_fn: SupplementFn = supplement) -> GrainyFuzzySet:
    """Apply the number-level supplement along `mask` at every label.

    `supplement_fn` is the pluggable number-level strategy; the default
    flips bits at the mask's ONE positions.
    """
    values = {u: supplement_fn(a.membership[u], mask) for u in a.domain}
    return GrainyFuzzySet(f"supp({a.name}, {render(mask)})", a.domain, values)


def load(text: str) -> GrainyFuzzySet:
    """Parse the line-oriented file format; errors carry line numbers."""
    name: str | None = None
    domain: list[str] = []
    membership: dict[str, GrainyNumber] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if name is None:
            if not line.startswith("set ") or not line[4:].strip():
                raise FuzzySetFormatError(lineno, "expected 'set <name>' header")
            name = line[4:].strip()
            continue
        if "\t" not in raw:
            raise FuzzySetFormatError(lineno, "expected <label><TAB><grainy literal>")
        label, literal = raw.split("\t", 1)
        label = label.strip()
        if not label:
            raise FuzzySetFormatError(lineno, "empty label")
        if label in membership:
            raise FuzzySetFormatError(lineno, f"duplicate label {label!r}")
        try:
            value = parse(literal)
        except NotationError as exc:
            raise FuzzySetFormatError(lineno, f"bad grainy literal: {exc}") from exc
        domain.append(label)
        membership[label] = value
    if name is None:
        raise FuzzySetFormatError(1, "missing 'set <name>' header")
    return GrainyFuzzySet(name, tuple(domain), membership)


def store(a: GrainyFuzzySet) -> str:
    """Serialize in canonical compact notation; load(store(a)) == a."""
    lines = [f"set {a.name}"]
    lines.extend(f"{label}\t{render(a.membership[label])}" for label in a.domain)
    return "\n".join(lines) + "\n"
