"""CLI behavior: expression grammar, caps, exit codes, output shapes."""

from __future__ import annotations

import pytest

from grainy.cli import ExpressionError, evaluate, parse_expression
from grainy.core import add, mul, supplement
from grainy.fuzzy import load
from grainy.lawcheck import enumerate_universe
from grainy.notation import parse, render


def ev(text: str):
    return evaluate(parse_expression(text))


class TestExpressions:
    def test_worked_equations(self):
        assert render(ev("1°3°4° + 1°2°(4)")) == "1°(4)"
        assert render(ev("1°3°4° * 1°2°(4)")) == "1°2°3°4°"
        assert ev("0 >= 1°2°3°(5)") is True
        assert render(ev("supp(supp(2°, 1°), 1°)")) == "2°"

    def test_precedence_star_binds_tighter(self):
        expected = add(parse("2°"), mul(parse("3°"), parse("1°(3)")))
        assert ev("2° + 3° * 1°(3)") == expected

    def test_left_associativity(self):
        expected = add(add(parse("1°"), parse("2°")), parse("3°"))
        assert ev("1° + 2° + 3°") == expected

    def test_parentheses_group(self):
        expected = mul(add(parse("2°"), parse("3°")), parse("1°"))
        assert ev("(2° + 3°) * 1°") == expected

    def test_flat_literal_vs_grouping(self):
        assert ev("(3)") == parse("(3)")
        assert ev("(3) * 2°") == mul(parse("(3)"), parse("2°"))

    def test_quote_alias_for_degree(self):
        assert ev("1'3' + (2)") == add(parse("1°3°"), parse("(2)"))

    def test_circled_operator_aliases(self):
        assert ev("3° ⊕ 2°") == add(parse("3°"), parse("2°"))
        assert ev("2° ⊗ 3°") == mul(parse("2°"), parse("3°"))

    def test_supp_evaluates_mask_expression(self):
        expected = supplement(parse("1°3°"), add(parse("1°"), parse("1°")))
        assert ev("supp(1°3°, 1° + 1°)") == expected

    def test_comparison_returns_bool(self):
        assert ev("1° >= 2°") is False
        assert ev("1°2° >= 1°2°") is True

    @pytest.mark.parametrize(
        "text, column",
        [
            ("1° +", 5),
            ("supp(2°, 1°", 12),
            ("(1° >= 2°)", 5),
            ("1° 2°", 4),
            ("$", 1),
            ("3", 1),
            ("3°1°", 3),
        ],
    )
    def test_errors_carry_1_based_columns(self, text, column):
        with pytest.raises(ExpressionError) as excinfo:
            parse_expression(text)
        assert excinfo.value.position == column


class TestEvalCommand:
    def test_prints_canonical_value(self, cli):
        code, out, err = cli("eval", "1°3°4° + 1°2°(4)")
        assert (code, out, err) == (0, "1°(4)\n", "")

    def test_prints_bool_for_comparison(self, cli):
        assert cli("eval", "0 >= 1°2°3°(5)")[1] == "true\n"
        assert cli("eval", "1° >= 2°")[1] == "false\n"
        assert cli("eval", "1° >= 2°")[0] == 0

    def test_parse_error_prints_caret_and_exits_2(self, cli):
        code, out, err = cli("eval", "supp(2° + (3")
        assert code == 2
        assert out == ""
        lines = err.splitlines()
        assert lines[0].startswith("error:")
        assert lines[1] == "  supp(2° + (3"
        assert lines[2] == "  " + " " * 11 + "^"

    def test_output_flag_writes_file(self, cli, tmp_path):
        target = tmp_path / "result.txt"
        code, out, _ = cli("eval", "1° * 2°", "--output", str(target))
        assert code == 0 and out == ""
        assert target.read_text(encoding="utf-8") == "1°2°\n"


class TestTableCommand:
    def test_smallest_table(self, cli):
        code, out, _ = cli("table", "1")
        assert code == 0
        assert out.splitlines() == [
            "0     |   | 0",
            "[-,0] | - | (1)",
            "[1,0] | 1 | 1°",
        ]

    def test_row_count_matches_universe(self, cli):
        code, out, _ = cli("table", "4")
        assert code == 0
        assert len(out.splitlines()) == 31

    def test_contains_all_ones_row(self, cli):
        out = cli("table", "3")[1]
        assert "[1,[1,[1,0]]] | 111 | 1°2°3°" in out.splitlines()

    def test_cap_exceeded(self, cli):
        code, _, err = cli("table", "11")
        assert code == 2
        assert "cap" in err

    def test_env_var_raises_cap(self, cli, monkeypatch):
        monkeypatch.setenv("GRAINY_MAXLEN_CAP", "11")
        assert cli("table", "11")[0] == 0
        monkeypatch.setenv("GRAINY_MAXLEN_CAP", "3")
        assert cli("table", "4")[0] == 2

    def test_bad_env_var(self, cli, monkeypatch):
        monkeypatch.setenv("GRAINY_MAXLEN_CAP", "lots")
        assert cli("table", "2")[0] == 2


class TestLawsCommand:
    def test_all_pass_at_desk_scale(self, cli):
        code, out, _ = cli("laws", "3")
        assert code == 0
        assert out.endswith("result: all 18 laws hold\n")

    def test_machine_format(self, cli):
        code, out, _ = cli("laws", "2", "--format", "machine")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 18
        assert all(line.count("\t") == 3 for line in lines)
        assert lines[0] == "add-commutative\t2\tpass\t-"

    def test_cap_and_force(self, cli, monkeypatch):
        assert cli("laws", "7")[0] == 2
        monkeypatch.setenv("GRAINY_MAXLEN_CAP", "1")
        assert cli("laws", "2")[0] == 2
        assert cli("laws", "2", "--force")[0] == 0


class TestHasseCommand:
    def test_tiny_diagram(self, cli):
        code, out, _ = cli("hasse", "1")
        assert code == 0
        assert out.splitlines() == [
            "digraph grainy_order {",
            "  rankdir=TB;",
            '  "0";',
            '  "(1)";',
            '  "1°";',
            '  "0" -> "(1)";',
            '  "(1)" -> "1°";',
            "}",
        ]

    def test_node_count(self, cli):
        out = cli("hasse", "3")[1]
        nodes = [line for line in out.splitlines()
                 if line.endswith('";') and " -> " not in line]
        assert len(nodes) == 15

    def test_no_transitive_edges(self, cli):
        out = cli("hasse", "3")[1]
        edges = set()
        for line in out.splitlines():
            if " -> " in line:
                a, b = line.strip().rstrip(";").split(" -> ")
                edges.add((parse(a.strip('"')), parse(b.strip('"'))))
        members = enumerate_universe(3).members
        from grainy.core import geq
        reach = {(x, y) for x in members for y in members if x != y and geq(x, y)}
        assert edges <= reach
        for a, b in edges:
            assert not any((a, w) in reach and (w, b) in reach for w in members)

    def test_cap(self, cli):
        assert cli("hasse", "6")[0] == 2


class TestFuzzyCommands:
    def test_show_renders_table(self, cli, fixtures_dir):
        code, out, _ = cli("fuzzy", "show", str(fixtures_dir / "high_educated.gfs"))
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "set HIGH_EDUCATED"
        assert lines[1] == "8   (4)"
        assert len(lines) == 14

    def test_op_add_idempotent_bytes(self, cli, fixtures_dir):
        path = str(fixtures_dir / "high_educated.gfs")
        code, out, _ = cli("fuzzy", "op", "add", path, path)
        assert code == 0
        assert out == (fixtures_dir / "high_educated.gfs").read_text(encoding="utf-8")

    def test_supp_writes_result_set(self, cli, fixtures_dir, tmp_path):
        target = tmp_path / "supped.gfs"
        code, _, _ = cli("fuzzy", "supp", str(fixtures_dir / "high_educated.gfs"),
                         "1°", "--output", str(target))
        assert code == 0
        result = load(target.read_text(encoding="utf-8"))
        low = load((fixtures_dir / "low_educated.gfs").read_text(encoding="utf-8"))
        assert result == low
        assert result.name == "supp(HIGH_EDUCATED, 1°)"

    def test_check_supp_passes_on_fixture_pairs(self, cli, fixtures_dir):
        for high, low in (("high_educated", "low_educated"),
                          ("very_high_educated", "very_low_educated")):
            code, out, _ = cli("fuzzy", "check-supp",
                               str(fixtures_dir / f"{high}.gfs"),
                               str(fixtures_dir / f"{low}.gfs"), "1°")
            assert code == 0
            assert out.startswith("PASS:")

    def test_check_supp_fails_on_wrong_pair(self, cli, fixtures_dir):
        code, out, _ = cli("fuzzy", "check-supp",
                           str(fixtures_dir / "high_educated.gfs"),
                           str(fixtures_dir / "very_low_educated.gfs"), "1°")
        assert code == 1
        assert out.startswith("FAIL: at label")

    def test_domain_mismatch_exits_1(self, cli, tmp_path, fixtures_dir):
        other = tmp_path / "other.gfs"
        other.write_text("set OTHER\nx\t1°\n", encoding="utf-8")
        code, _, err = cli("fuzzy", "op", "add",
                           str(fixtures_dir / "high_educated.gfs"), str(other))
        assert code == 1
        assert "domains differ" in err

    def test_missing_file_exits_2(self, cli, tmp_path):
        code, _, err = cli("fuzzy", "show", str(tmp_path / "nope.gfs"))
        assert code == 2
        assert "cannot read" in err

    def test_malformed_file_exits_2(self, cli, tmp_path):
        bad = tmp_path / "bad.gfs"
        bad.write_text("not a header\n", encoding="utf-8")
        code, _, err = cli("fuzzy", "show", str(bad))
        assert code == 2
        assert "line 1" in err

    def test_bad_mask_literal_exits_2(self, cli, fixtures_dir):
        code, _, err = cli("fuzzy", "supp",
                           str(fixtures_dir / "high_educated.gfs"), "wat")
        assert code == 2
        assert "mask" in err


class TestUsage:
    def test_no_command_exits_2(self, cli):
        assert cli()[0] == 2

    def test_unknown_command_exits_2(self, cli):
        assert cli("frobnicate")[0] == 2

    def test_help_exits_0(self, cli):
        code, out, _ = cli("--help")
        assert code == 0
        assert "grainy" in out
