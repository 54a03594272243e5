"""Shared strategies, paths, and an in-process CLI harness."""

from __future__ import annotations

import io
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import hypothesis.strategies as st
import pytest

from grainy.cli import main
from grainy.core import Bit, GrainyNumber

REPO_ROOT = Path(__file__).resolve().parents[1]
FIXTURES_DIR = REPO_ROOT / "fixtures"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


def grainy_numbers(max_len: int = 8) -> st.SearchStrategy[GrainyNumber]:
    """Arbitrary grainy numbers with up to max_len bits."""
    bits = st.lists(st.sampled_from((Bit.DASH, Bit.ONE)), max_size=max_len)
    return bits.map(lambda bs: GrainyNumber(tuple(bs)))


def run_cli(*argv: str) -> tuple[int, str, str]:
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(name="cli")
def cli_fixture():
    return run_cli


@pytest.fixture(name="fixtures_dir")
def fixtures_dir_fixture() -> Path:
    return FIXTURES_DIR


@pytest.fixture(name="golden_dir")
def golden_dir_fixture() -> Path:
    return GOLDEN_DIR
