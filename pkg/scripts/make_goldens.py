#!/usr/bin/env python3
"""Regenerate the committed CLI golden files in tests/golden/.

Run from the repository root after an intentional output-format change,
then review the diff before committing.
"""

import io
from contextlib import redirect_stdout
from pathlib import Path

from grainy.cli import main

REPO_ROOT = Path(__file__).resolve().parents[1]
GOLDEN = REPO_ROOT / "tests" / "golden"
FIXTURES = REPO_ROOT / "fixtures"

COMMANDS = {
    "eval_add.txt": ["eval", "1°3°4° + 1°2°(4)"],
    "eval_mul.txt": ["eval", "1°3°4° * 1°2°(4)"],
    "eval_chain_geq.txt": ["eval", "0 >= 1°2°3°(5)"],
    "eval_supp.txt": ["eval", "supp(supp(2°, 1°), 1°)"],
    "table_3.txt": ["table", "3"],
    "laws_4.txt": ["laws", "4"],
    "hasse_2.txt": ["hasse", "2"],
    "fuzzy_check_high_low.txt": [
        "fuzzy", "check-supp",
        str(FIXTURES / "high_educated.gfs"),
        str(FIXTURES / "low_educated.gfs"), "1°",
    ],
    "fuzzy_check_very.txt": [
        "fuzzy", "check-supp",
        str(FIXTURES / "very_high_educated.gfs"),
        str(FIXTURES / "very_low_educated.gfs"), "1°",
    ],
    "fuzzy_op_add_idem.txt": [
        "fuzzy", "op", "add",
        str(FIXTURES / "high_educated.gfs"),
        str(FIXTURES / "high_educated.gfs"),
    ],
}


def main_script() -> None:
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in COMMANDS.items():
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = main(argv)
        if code != 0:
            raise SystemExit(f"{argv} exited {code}, refusing to write golden")
        (GOLDEN / name).write_text(buf.getvalue(), encoding="utf-8")
        print(f"wrote {GOLDEN / name}")


if __name__ == "__main__":
    main_script()
