#!/usr/bin/env python3
"""Regenerate the education fixture files in fixtures/.

The four sets are constructed demonstration data over a domain of
schooling years. Membership values are 4-bit staircases: positions 2-4
encode how much schooling a person has, while position 1 flags the
category itself. Each LOW set is the supplement of its HIGH partner
along 1° (the position-1 flip), so the supplement identities hold by
construction.
"""

from pathlib import Path

from grainy.core import from_positions
from grainy.fuzzy import GrainyFuzzySet, store, supplement_set
from grainy.notation import parse

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

YEARS = [str(y) for y in range(8, 21)]

# (set name, thresholds for positions 1..4: ONE iff year >= threshold)
STAIRCASES = {
    "HIGH_EDUCATED": (16, 14, 12, 10),
    "VERY_HIGH_EDUCATED": (18, 16, 14, 12),
}

SUPPLEMENT_PARTNERS = {
    "HIGH_EDUCATED": "LOW_EDUCATED",
    "VERY_HIGH_EDUCATED": "VERY_LOW_EDUCATED",
}


def staircase_set(name: str, thresholds: tuple[int, ...]) -> GrainyFuzzySet:
    membership = {}
    for label in YEARS:
        year = int(label)
        ones = {i for i, t in enumerate(thresholds, start=1) if year >= t}
        membership[label] = from_positions(ones, len(thresholds))
    return GrainyFuzzySet(name, tuple(YEARS), membership)


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)
    mask = parse("1°")
    for high_name, thresholds in STAIRCASES.items():
        high = staircase_set(high_name, thresholds)
        low = supplement_set(high, mask)
        low = GrainyFuzzySet(SUPPLEMENT_PARTNERS[high_name], low.domain, low.membership)
        for fset in (high, low):
            path = FIXTURES / f"{fset.name.lower()}.gfs"
            path.write_text(store(fset), encoding="utf-8")
            print(f"wrote {path}")


if __name__ == "__main__":
    main()
