"""Exhaustive law checking over bounded universes of grainy numbers.

Everything here is deliberately brute force. The order oracles know
only the order relation, and that relation is computed through the
recursive reference addition, so the oracles are independent of the
iterative operations they are used to check. check_laws() sweeps every
member/pair/triple of a universe; failures are data in the report, not
exceptions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable

from .core import DASH, ONE, GrainyNumber, add, add_recursive, geq, mul, zero
from .notation import render

Op = Callable[[GrainyNumber, GrainyNumber], GrainyNumber]


@dataclass(frozen=True)
class Universe:
    """All grainy numbers of length <= max_len; 2^(max_len+1) - 1 members."""

    max_len: int
    members: tuple[GrainyNumber, ...]


@lru_cache(maxsize=None)
def enumerate_universe(max_len: int) -> Universe:
    """Deterministic enumeration: shortest first, then DASH before ONE."""
    if max_len < 0:
        raise ValueError(f"max_len must be >= 0, got {max_len}")
    members = tuple(
        GrainyNumber(bits)
        for n in range(max_len + 1)
        for bits in product((DASH, ONE), repeat=n)
    )
    return Universe(max_len, members)


def reference_geq(x: GrainyNumber, y: GrainyNumber) -> bool:
    """The order computed through the recursive reference addition.

    The oracles below use only this relation, keeping them independent
    of the iterative add()/mul() under test.
    """
    return add_recursive(x, y) == x


class NoUniqueBoundError(Exception):
    """A pair lacks a unique least upper / greatest lower bound.

    Raising this would falsify the lattice structure; `antichain` holds
    the mutually incomparable extremal bounds found.
    """

    def __init__(self, kind: str, x: GrainyNumber, y: GrainyNumber,
                 antichain: list[GrainyNumber]):
        names = ", ".join(render(z) for z in antichain)
        super().__init__(f"no unique {kind} bound of {render(x)} and {render(y)}: {names}")
        self.kind = kind
        self.x = x
        self.y = y
        self.antichain = antichain


def lub_oracle(x: GrainyNumber, y: GrainyNumber) -> GrainyNumber:
    """Least upper bound found by brute-force search, independent of add().

    Upper bounds are never longer than either operand, so the universe
    of size max(len(x), len(y)) is complete for this search.
    """
    members = enumerate_universe(max(len(x), len(y))).members
    bounds = [z for z in members if reference_geq(z, x) and reference_geq(z, y)]
    # Fold toward the bottom of the bound set, then verify minimality
    # against every bound; success implies uniqueness by antisymmetry.
    best = bounds[0]
    for z in bounds[1:]:
        if reference_geq(best, z):
            best = z
    if all(reference_geq(z, best) for z in bounds):
        return best
    antichain = [z for z in bounds
                 if not any(w != z and reference_geq(z, w) for w in bounds)]
    raise NoUniqueBoundError("least upper", x, y, antichain)


def glb_oracle(x: GrainyNumber, y: GrainyNumber) -> GrainyNumber:
    """Greatest lower bound by brute-force search, independent of mul().

    Lower bounds are at least as long as both operands, so within the
    universe of size max(len(x), len(y)) the candidates have exactly
    that length. Longer lower bounds in bigger universes sit below the
    one found here; tests spot-check that soundness claim directly.
    """
    members = enumerate_universe(max(len(x), len(y))).members
    bounds = [z for z in members if reference_geq(x, z) and reference_geq(y, z)]
    best = bounds[0]
    for z in bounds[1:]:
        if reference_geq(z, best):
            best = z
    if all(reference_geq(best, z) for z in bounds):
        return best
    antichain = [z for z in bounds
                 if not any(w != z and reference_geq(w, z) for w in bounds)]
    raise NoUniqueBoundError("greatest lower", x, y, antichain)


@dataclass(frozen=True)
class LawResult:
    """Outcome of one law over one universe."""

    name: str
    max_len: int
    passed: bool
    checked: int
    counterexample: tuple[GrainyNumber, ...] | None = None

    def counterexample_text(self) -> str:
        if self.counterexample is None:
            return "-"
        return ",".join(render(v) for v in self.counterexample)


@dataclass(frozen=True)
class LawReport:
    """Per-law outcomes of an exhaustive sweep."""

    max_len: int
    results: tuple[LawResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_text(self) -> str:
        width = max(len(r.name) for r in self.results)
        lines = [f"universe max_len={self.max_len} "
                 f"({2 ** (self.max_len + 1) - 1} members)"]
        for r in self.results:
            status = "pass" if r.passed else "FAIL"
            lines.append(f"{r.name:<{width}}  {status}  {r.checked:>9}  "
                         f"{r.counterexample_text()}")
        failed = sum(1 for r in self.results if not r.passed)
        if failed:
            lines.append(f"result: {failed} of {len(self.results)} laws FAILED")
        else:
            lines.append(f"result: all {len(self.results)} laws hold")
        return "\n".join(lines) + "\n"

    def to_machine(self) -> str:
        lines = []
        for r in self.results:
            status = "pass" if r.passed else "fail"
            lines.append(f"{r.name}\t{r.max_len}\t{status}\t{r.counterexample_text()}")
        return "\n".join(lines) + "\n"


def _sweep(name, max_len, arity, members, pred) -> LawResult:
    checked = 0
    for args in product(members, repeat=arity):
        checked += 1
        if not pred(*args):
            return LawResult(name, max_len, False, checked, args)
    return LawResult(name, max_len, True, checked)


def check_laws(max_len: int, add_fn: Op = add, mul_fn: Op = mul) -> LawReport:
    """Exhaustively check every law over the universe of the given size.

    add_fn/mul_fn exist so deliberately broken operations can be run
    through the same sweeps (mutation testing); the order used by the
    order-axiom laws is derived from add_fn, while the lub/glb
    agreement laws always compare against the independent oracles.
    """
    members = enumerate_universe(max_len).members
    top = zero()

    def geq_fn(a: GrainyNumber, b: GrainyNumber) -> bool:
        return add_fn(a, b) == a

    def agrees_with_lub(x, y):
        try:
            return add_fn(x, y) == lub_oracle(x, y)
        except NoUniqueBoundError:
            return False

    def agrees_with_glb(x, y):
        try:
            return mul_fn(x, y) == glb_oracle(x, y)
        except NoUniqueBoundError:
            return False

    laws = [
        ("add-commutative", 2, lambda x, y: add_fn(x, y) == add_fn(y, x)),
        ("mul-commutative", 2, lambda x, y: mul_fn(x, y) == mul_fn(y, x)),
        ("add-idempotent", 1, lambda x: add_fn(x, x) == x),
        ("mul-idempotent", 1, lambda x: mul_fn(x, x) == x),
        ("add-associative", 3,
         lambda x, y, z: add_fn(add_fn(x, y), z) == add_fn(x, add_fn(y, z))),
        ("mul-associative", 3,
         lambda x, y, z: mul_fn(mul_fn(x, y), z) == mul_fn(x, mul_fn(y, z))),
        ("absorb-add-mul", 2, lambda x, y: add_fn(y, mul_fn(x, y)) == y),
        ("absorb-mul-add", 2, lambda x, y: mul_fn(y, add_fn(x, y)) == y),
        ("mul-distributes-over-add", 3,
         lambda x, y, z: mul_fn(x, add_fn(y, z)) == add_fn(mul_fn(x, y), mul_fn(x, z))),
        ("add-distributes-over-mul", 3,
         lambda x, y, z: add_fn(x, mul_fn(y, z)) == mul_fn(add_fn(x, y), add_fn(x, z))),
        ("order-reflexive", 1, lambda x: geq_fn(x, x)),
        ("order-antisymmetric", 2,
         lambda x, y: x == y or not (geq_fn(x, y) and geq_fn(y, x))),
        ("order-transitive", 3,
         lambda x, y, z: not (geq_fn(x, y) and geq_fn(y, z)) or geq_fn(x, z)),
        ("zero-is-top", 1, lambda x: geq_fn(top, x)),
        ("add-is-lub", 2, agrees_with_lub),
        ("mul-is-glb", 2, agrees_with_glb),
        ("add-length-min", 2,
         lambda x, y: len(add_fn(x, y)) == min(len(x), len(y))),
        ("mul-length-max", 2,
         lambda x, y: len(mul_fn(x, y)) == max(len(x), len(y))),
    ]
    results = tuple(_sweep(name, max_len, arity, members, pred)
                    for name, arity, pred in laws)
    return LawReport(max_len, results)


def spot_check_laws(max_len: int, triples: int, seed: int = 0,
                    add_fn: Op = add, mul_fn: Op = mul) -> LawReport:
    """The algebraic laws on random triples of length <= max_len.

    Complements check_laws() where exhaustive sweeps are infeasible.
    The lub/glb agreement laws are excluded (they are pair searches
    with their own exhaustive check).
    """
    rng = random.Random(seed)
    top = zero()

    def geq_fn(a, b):
        return add_fn(a, b) == a

    def random_number():
        length = rng.randrange(max_len + 1)
        return GrainyNumber(tuple(ONE if rng.getrandbits(1) else DASH
                                  for _ in range(length)))

    laws = [
        ("add-commutative", lambda x, y, z: add_fn(x, y) == add_fn(y, x)),
        ("mul-commutative", lambda x, y, z: mul_fn(x, y) == mul_fn(y, x)),
        ("add-idempotent", lambda x, y, z: add_fn(x, x) == x),
        ("mul-idempotent", lambda x, y, z: mul_fn(x, x) == x),
        ("add-associative",
         lambda x, y, z: add_fn(add_fn(x, y), z) == add_fn(x, add_fn(y, z))),
        ("mul-associative",
         lambda x, y, z: mul_fn(mul_fn(x, y), z) == mul_fn(x, mul_fn(y, z))),
        ("absorb-add-mul", lambda x, y, z: add_fn(y, mul_fn(x, y)) == y),
        ("absorb-mul-add", lambda x, y, z: mul_fn(y, add_fn(x, y)) == y),
        ("mul-distributes-over-add",
         lambda x, y, z: mul_fn(x, add_fn(y, z)) == add_fn(mul_fn(x, y), mul_fn(x, z))),
        ("add-distributes-over-mul",
         lambda x, y, z: add_fn(x, mul_fn(y, z)) == mul_fn(add_fn(x, y), add_fn(x, z))),
        ("order-reflexive", lambda x, y, z: geq_fn(x, x)),
        ("order-antisymmetric",
         lambda x, y, z: x == y or not (geq_fn(x, y) and geq_fn(y, x))),
        ("order-transitive",
         lambda x, y, z: not (geq_fn(x, y) and geq_fn(y, z)) or geq_fn(x, z)),
        ("zero-is-top", lambda x, y, z: geq_fn(top, x)),
        ("add-length-min", lambda x, y, z: len(add_fn(x, y)) == min(len(x), len(y))),
        ("mul-length-max", lambda x, y, z: len(mul_fn(x, y)) == max(len(x), len(y))),
    ]
    failures: dict[str, tuple] = {}
    for _ in range(triples):
        x, y, z = random_number(), random_number(), random_number()
        for name, pred in laws:
            if name not in failures and not pred(x, y, z):
                failures[name] = (x, y, z)
    results = tuple(
        LawResult(name, max_len, name not in failures, triples,
                  failures.get(name))
        for name, _ in laws
    )
    return LawReport(max_len, results)


def covering_pairs(max_len: int) -> list[tuple[GrainyNumber, GrainyNumber]]:
    """Transitive reduction of the strict order: (upper, lower) pairs.

    Deterministic: pairs come out sorted by enumeration index of the
    upper then the lower element.
    """
    members = enumerate_universe(max_len).members
    strict = [[x != y and geq(x, y) for y in members] for x in members]
    n = len(members)
    covers = []
    for i in range(n):
        for j in range(n):
            if strict[i][j] and not any(strict[i][k] and strict[k][j] for k in range(n)):
                covers.append((members[i], members[j]))
    return covers
