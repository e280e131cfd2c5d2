"""Command-line interface: output formats, determinism, exit codes."""

import json
import shutil
import subprocess

import pytest

from qweights.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestQAnalogue:
    def test_worked_example(self, capsys):
        code, out, _ = run(capsys, "qanalogue", "A2", "--lambda", "1,1",
                           "--mu", "0,0")
        assert code == 0
        assert out == "1*q^1 + 1*q^2\n"

    def test_json_shape(self, capsys):
        code, out, _ = run(capsys, "qanalogue", "G2", "--lambda", "1,0",
                           "--mu", "0,0", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload == {"root_system": "G2", "lambda": [1, 0], "mu": [0, 0],
                           "poly": [[3, "1"]], "text": "1*q^3"}

    def test_json_deterministic(self, capsys):
        args = ("table", "B2", "--lambda", "0,2", "--format", "json")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_latex(self, capsys):
        code, out, _ = run(capsys, "qanalogue", "A2", "--lambda", "1,1",
                           "--mu=-1,-1", "--format", "latex")
        assert code == 0
        assert out == "$-q^{2} + q^{3} + q^{4}$\n"


class TestTable:
    def test_row_count_and_content(self, capsys):
        code, out, _ = run(capsys, "table", "A2", "--lambda", "1,1",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["rows"]) == 7
        zero_row = [r for r in payload["rows"] if r["weight"] == [0, 0]][0]
        assert zero_row["multiplicity"] == 2
        assert zero_row["text"] == "1*q^1 + 1*q^2"

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "table", "A2", "--lambda", "1,0",
                           "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "weight,multiplicity,q-analogue"
        assert len(lines) == 4

    def test_latex_table(self, capsys):
        code, out, _ = run(capsys, "table", "A2", "--lambda", "1,0",
                           "--format", "latex")
        assert code == 0
        assert out.startswith("\\begin{tabular}")
        assert "\\end{tabular}" in out

    def test_rejects_non_dominant(self, capsys):
        code, _, err = run(capsys, "table", "A2", "--lambda=-1,0")
        assert code == 2
        assert "dominant" in err


class TestRootsAndExponents:
    def test_roots_json(self, capsys):
        code, out, _ = run(capsys, "roots", "G2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["exponents"] == [1, 5]
        assert payload["coxeter_number"] == 6
        assert len(payload["positive_roots"]) == 6
        assert payload["positive_roots"][-1]["root_coords"] == [3, 2]

    def test_gen_exponents(self, capsys):
        code, out, _ = run(capsys, "gen-exponents", "G2", "--lambda", "0,1")
        assert code == 0
        assert out == "1 5\n"
        code, out, _ = run(capsys, "gen-exponents", "B3", "--lambda", "2,0,0",
                           "--format", "json")
        assert json.loads(out)["exponents"] == [2, 4, 6]

    def test_gen_exponents_needs_root_lattice(self, capsys):
        code, _, err = run(capsys, "gen-exponents", "A2", "--lambda", "1,0")
        assert code == 2


class TestCherednik:
    def test_closed_form_rows(self, capsys):
        code, out, _ = run(capsys, "cherednik", "A2", "--max-height", "3",
                           "--format", "json")
        assert code == 0
        rows = {tuple(r["root_coords"]): r for r in json.loads(out)["rows"]}
        assert rows[(0, 0)]["text"] == "1*q^0"
        assert rows[(1, 1)]["is_root"] is True
        assert rows[(1, 1)]["text"] == "-1*q^1 + 1*q^2"
        assert rows[(2, 1)]["is_root"] is False
        assert rows[(2, 1)]["text"] == "1*q^0 + -1*q^1 + -1*q^2 + 1*q^3"

    def test_negative_bound(self, capsys):
        code, _, err = run(capsys, "cherednik", "A2", "--max-height", "-1")
        assert code == 2


class TestVerify:
    def test_all_g2(self, capsys):
        code, out, _ = run(capsys, "verify", "all", "G2")
        assert code == 0
        lines = out.strip().splitlines()
        assert all(line.startswith("PASS") for line in lines)
        names = {line.split()[1] for line in lines}
        # minuscule is skipped (G2 has none); little-adjoint runs
        assert "little-adjoint" in names
        assert "minuscule" not in names

    def test_all_a3_includes_minuscule_skips_little(self, capsys):
        code, out, _ = run(capsys, "verify", "all", "A3")
        assert code == 0
        names = [line.split()[1] for line in out.strip().splitlines()]
        assert "minuscule" in names
        assert "little-adjoint" not in names

    def test_single_identity_json(self, capsys):
        code, out, _ = run(capsys, "verify", "main", "B2", "--lambda", "0,2",
                           "--gamma", "1,0", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload[0]["status"] == "pass"
        assert payload[0]["inputs"]["lambda"] == [0, 2]

    def test_usage_errors(self, capsys):
        assert run(capsys, "verify", "little-adjoint", "A2")[0] == 2
        assert run(capsys, "verify", "minuscule", "G2")[0] == 2
        assert run(capsys, "qanalogue", "A2", "--lambda", "1,x",
                   "--mu", "0,0")[0] == 2
        assert run(capsys, "qanalogue", "A2", "--lambda", "1,1,1",
                   "--mu", "0,0")[0] == 2
        assert run(capsys, "roots", "H3")[0] == 2

    def test_verify_alpha_index(self, capsys):
        code, out, _ = run(capsys, "verify", "subregular", "C3",
                           "--lambda", "2,0,0", "--alpha-index", "1")
        assert code == 0
        assert out.startswith("PASS subregular C3")


class TestGuardsAndBackend:
    def test_rank_guard(self, capsys):
        code, _, err = run(capsys, "roots", "E8")
        assert code == 2
        assert "unsafe_large_rank" in err

    def test_unsafe_flag_lifts_guard(self, capsys):
        code, out, _ = run(capsys, "roots", "E8", "--unsafe-large-rank",
                           "--format", "json")
        assert code == 0
        assert len(json.loads(out)["positive_roots"]) == 120

    def test_backend(self, capsys):
        code, out, _ = run(capsys, "backend")
        assert code == 0
        assert out.strip() in ("compiled", "pure")


@pytest.mark.skipif(shutil.which("qweights") is None,
                    reason="entry point not installed")
def test_installed_entry_point():
    out = subprocess.run(["qweights", "qanalogue", "A2", "--lambda", "1,1",
                          "--mu", "0,0"], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout == "1*q^1 + 1*q^2\n"
