"""Command line behavior.

Outputs are frozen as exact text because the tool promises byte stable
output; failures are checked through exit codes and the symf: prefix on
stderr.
"""

import json
import subprocess
import sys

import pytest

from symf.cli import main

TABLE_R3 = (
    "chi \\ class  [3]  [2,1]  [1,1,1]\n"
    "[3]            1      1        1\n"
    "[2,1]         -1      0        2\n"
    "[1,1,1]        1     -1        1\n"
)

TABLE_R4 = (
    "chi \\ class  [4]  [3,1]  [2,2]  [2,1,1]  [1,1,1,1]\n"
    "[4]            1      1      1        1          1\n"
    "[3,1]         -1      0     -1        1          3\n"
    "[2,2]          0     -1      2        0          2\n"
    "[2,1,1]        1      0     -1       -1          3\n"
    "[1,1,1,1]     -1      1      1       -1          1\n"
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_schur_output(self, capsys):
        assert run(capsys, "eval", "h2[h2]") == (0, "s[4] + s[2,2]\n", "")

    def test_basis_flag(self, capsys):
        code, out, err = run(capsys, "eval", "h2[h2]", "--basis", "p")
        assert code == 0
        assert out == "1/4*p[4] + 3/8*p[2,2] + 1/4*p[2,1,1] + 1/8*p[1,1,1,1]\n"

    def test_rational_result(self, capsys):
        assert run(capsys, "eval", "scalar(h2[h2], h[2,2])") == (0, "2\n", "")

    def test_json_symfn(self, capsys):
        code, out, err = run(capsys, "eval", "h2[h2]", "--json")
        assert code == 0
        assert out == ('{"basis": "s", "terms": [{"partition": [4], '
                       '"coeff": "1"}, {"partition": [2, 2], "coeff": "1"}]}\n')
        doc = json.loads(out)
        assert doc["basis"] == "s"
        assert [t["partition"] for t in doc["terms"]] == [[4], [2, 2]]

    def test_json_rational(self, capsys):
        code, out, err = run(capsys, "eval", "scalar(h2, h2)", "--json")
        assert (code, out) == (0, '{"rational": "1"}\n')

    def test_json_partition(self, capsys):
        code, out, err = run(capsys, "eval", "[2,1]", "--json")
        assert (code, out) == (0, '{"partition": [2, 1]}\n')

    def test_json_respects_basis(self, capsys):
        code, out, err = run(capsys, "eval", "s2", "--basis", "p", "--json")
        doc = json.loads(out)
        assert doc["basis"] == "p"
        assert {tuple(t["partition"]): t["coeff"] for t in doc["terms"]} == {
            (2,): "1/2", (1, 1): "1/2"}


class TestInv:
    def test_sl_rectangle(self, capsys):
        code, out, err = run(capsys, "inv", "--family", "sl",
                             "--n", "2", "--r", "4")
        assert (code, out) == (0, "s[2,2]\n")

    def test_perm_in_h_basis(self, capsys):
        code, out, err = run(capsys, "inv", "--family", "perm",
                             "--n", "2", "--r", "3", "--basis", "h")
        assert (code, out) == (0, "h[3] + h[2,1]\n")

    def test_functor_flag(self, capsys):
        code, out, err = run(capsys, "inv", "--family", "sl", "--n", "2",
                             "--functor", "h4", "--r", "2")
        assert (code, out) == (0, "s[2]\n")


class TestHilbert:
    def test_binary_quartics(self, capsys):
        code, out, err = run(capsys, "hilbert", "--family", "sl", "--n", "2",
                             "--functor", "h4", "--r", "6")
        assert (code, out) == (0, "2\n")


class TestDeals:
    def test_count(self, capsys):
        code, out, err = run(capsys, "deals", "--m", "2", "--n", "3")
        assert (code, out) == (0, "5\n")

    def test_cycle_index(self, capsys):
        code, out, err = run(capsys, "deals", "--m", "2", "--n", "2",
                             "--cycle-index")
        assert (code, out) == (0, "1/2*p[2] + 3/2*p[1,1]\n")


class TestRegular:
    def test_count(self, capsys):
        code, out, err = run(capsys, "regular", "--n", "4", "--k", "2")
        assert (code, out) == (0, "5\n")

    def test_cycle_index(self, capsys):
        code, out, err = run(capsys, "regular", "--n", "3", "--k", "2",
                             "--cycle-index")
        assert (code, out) == (0, "2/3*p[3] + 3/2*p[2,1] + 5/6*p[1,1,1]\n")

    def test_impossible_degree_sequence_counts_zero(self, capsys):
        code, out, err = run(capsys, "regular", "--n", "3", "--k", "3")
        assert (code, out) == (0, "0\n")


class TestTable:
    def test_r3_layout(self, capsys):
        code, out, err = run(capsys, "table", "--r", "3")
        assert (code, out) == (0, TABLE_R3)

    def test_r4_layout(self, capsys):
        code, out, err = run(capsys, "table", "--r", "4")
        assert (code, out) == (0, TABLE_R4)


class TestSelftest:
    def test_small_run_passes(self, capsys):
        code, out, err = run(capsys, "selftest", "--max-degree", "4")
        assert code == 0
        lines = out.rstrip("\n").split("\n")
        assert len(lines) == 11
        assert all(line.startswith("ok ") for line in lines)


FAILURES = [
    (1, ["nope"]),
    (1, []),
    (1, ["eval"]),
    (1, ["inv", "--family", "xx", "--n", "2", "--r", "1"]),
    (1, ["deals", "--m", "2"]),
    (1, ["deals", "--m", "0", "--n", "3"]),
    (1, ["inv", "--family", "sl", "--n", "0", "--r", "1"]),
    (1, ["inv", "--family", "sp", "--n", "2", "--r", "-1"]),
    (2, ["eval", "q2"]),
    (2, ["eval", "h2 +"]),
    (2, ["eval", "fundamentalish(h2)"]),
    (3, ["inv", "--family", "sl", "--n", "2",
         "--functor", "h2 - h2", "--r", "1"]),
    (3, ["regular", "--n", "3", "--k", "3", "--cycle-index"]),
    (4, ["table", "--r", "21"]),
    (4, ["eval", "p21"]),
]


class TestExitCodes:
    @pytest.mark.parametrize("expected,argv", FAILURES,
                             ids=[" ".join(a) or "(empty)" for _, a in FAILURES])
    def test_failure(self, capsys, expected, argv):
        code, out, err = run(capsys, *argv)
        assert code == expected
        assert out == ""
        assert err.startswith("symf: ")

    def test_success_is_zero(self, capsys):
        code, out, err = run(capsys, "eval", "h2")
        assert code == 0 and err == ""


class TestDeterminism:
    def test_repeated_runs_identical(self, capsys):
        first = run(capsys, "table", "--r", "6")
        second = run(capsys, "table", "--r", "6")
        assert first == second
        third = run(capsys, "eval", "h3[e2]", "--basis", "m")
        fourth = run(capsys, "eval", "h3[e2]", "--basis", "m")
        assert third == fourth


class TestPackaging:
    def test_module_entry_point(self):
        proc = subprocess.run([sys.executable, "-m", "symf", "eval", "h2[h2]"],
                              capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout == "s[4] + s[2,2]\n"

    def test_console_script_registered(self):
        from importlib.metadata import entry_points

        scripts = entry_points(group="console_scripts")
        names = {ep.name: ep.value for ep in scripts}
        assert names.get("symf") == "symf.cli:main"
