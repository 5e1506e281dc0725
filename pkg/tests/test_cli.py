import json

import pytest

from chebident.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr().out


class TestPoly:
    def test_pretty_golden(self, capsys):
        code, out = invoke(capsys, "poly", "--family", "U", "--n", "2")
        assert code == 0
        assert out == "4*x^2 - 1\n"

    def test_json_triples(self, capsys):
        code, out = invoke(
            capsys, "poly", "--family", "Legendre", "--n", "2", "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == [[2, "3", "2"], [0, "-1", "2"]]

    def test_csv(self, capsys):
        code, out = invoke(capsys, "poly", "--family", "V", "--n", "1", "--format", "csv")
        assert code == 0
        assert out == "1,2,1\n0,-1,1\n"

    def test_higher_order(self, capsys):
        code, out = invoke(capsys, "poly", "--family", "U", "--n", "1", "--alpha", "2")
        assert code == 0
        assert out == "4*x\n"

    def test_classical_higher_order_is_usage_error(self, capsys):
        code = run(["poly", "--family", "T_classical", "--n", "1", "--alpha", "2"])
        capsys.readouterr()
        assert code == 2

    def test_negative_n_is_usage_error(self, capsys):
        code = run(["poly", "--family", "U", "--n", "-3"])
        capsys.readouterr()
        assert code == 2


class TestTriangle:
    def test_csv_golden(self, capsys):
        code, out = invoke(capsys, "triangle", "--n-max", "4", "--format", "csv")
        assert code == 0
        assert out == "1\n1,1\n3,3,1\n15,15,6,1\n"

    def test_pretty(self, capsys):
        code, out = invoke(capsys, "triangle", "--n-max", "2")
        assert code == 0
        assert out == "N=1: 1\nN=2: 1 1\n"

    def test_json_schema_and_round_trip(self, capsys):
        code, out = invoke(capsys, "triangle", "--n-max", "4", "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert rows[2] == {"N": 3, "a": ["3", "3", "1"]}
        # big integers ride as decimal strings; re-rendering reproduces bytes
        assert json.dumps(rows, separators=(",", ":")) + "\n" == out

    def test_rejects_zero_rows(self, capsys):
        code = run(["triangle", "--n-max", "0"])
        capsys.readouterr()
        assert code == 2


class TestVerify:
    def test_small_grid_passes(self, capsys):
        code, out = invoke(
            capsys, "verify", "all", "--n-max", "4", "--N-max", "2", "--format", "json"
        )
        assert code == 0
        entries = json.loads(out)
        assert all(e["pass"] for e in entries)
        assert {e["identity"] for e in entries} == {
            "intro_U_from_T",
            "U_from_Legendre",
            "Ualpha_from_Legendre",
            "thm2",
            "cor3",
            "cor4_reconstructed",
            "thm5",
            "thm6",
            "thm7",
        }
        assert set(entries[0]) == {"identity", "n", "N", "pass", "residual", "ms"}

    def test_byte_identical_runs(self, capsys):
        args = ("verify", "all", "--n-max", "3", "--N-max", "2", "--format", "json")
        code1, out1 = invoke(capsys, *args)
        code2, out2 = invoke(capsys, *args)
        assert (code1, code2) == (0, 0)
        assert out1 == out2

    def test_json_round_trip(self, capsys):
        _, out = invoke(
            capsys, "verify", "thm6", "--n-max", "2", "--N-max", "2", "--format", "json"
        )
        assert json.dumps(json.loads(out), separators=(",", ":")) + "\n" == out

    def test_single_identity_csv(self, capsys):
        code, out = invoke(
            capsys, "verify", "thm5", "--n-max", "2", "--N-max", "1", "--format", "csv"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "identity,n,N,pass,residual,ms"
        assert lines[1] == "thm5,0,1,true,0,0"
        assert len(lines) == 4

    def test_numeric_mode(self, capsys):
        code, out = invoke(
            capsys,
            "verify", "thm2", "--n-max", "3", "--N-max", "2",
            "--mode", "numeric", "--format", "json",
        )
        assert code == 0
        assert all(e["residual"] == "" for e in json.loads(out))

    def test_classical_thm7_fails_with_exit_1(self, capsys):
        code, out = invoke(
            capsys,
            "verify", "thm7", "--n-max", "2", "--N-max", "1",
            "--first-kind", "classical",
        )
        assert code == 1
        assert "FAIL" in out

    def test_timings_flag_changes_json(self, capsys):
        args = ("verify", "thm2", "--n-max", "1", "--N-max", "1", "--format", "json")
        _, plain = invoke(capsys, *args)
        _, timed = invoke(capsys, *args, "--timings")
        assert all(e["ms"] == 0 for e in json.loads(plain))
        assert json.loads(timed)  # still valid JSON with real ms values

    def test_output_file(self, tmp_path, capsys):
        path = tmp_path / "report.json"
        code, out = invoke(
            capsys,
            "verify", "thm6", "--n-max", "1", "--N-max", "1",
            "--format", "json", "--output", str(path),
        )
        assert code == 0
        assert out == ""
        assert json.loads(path.read_text())[0]["identity"] == "thm6"

    def test_unknown_identity_is_usage_error(self, capsys):
        code = run(["verify", "thm9", "--n-max", "1", "--N-max", "1"])
        capsys.readouterr()
        assert code == 2


class TestDefiningRelation:
    def test_passes(self, capsys):
        code, out = invoke(capsys, "defining-relation", "--N-max", "3", "--order", "12")
        assert code == 0
        assert out.splitlines()[0] == "PASS defining_relation N=1 n=12"
        assert out.splitlines()[-1] == "all 3 cells passed"

    def test_order_must_cover_n_max(self, capsys):
        code = run(["defining-relation", "--N-max", "6", "--order", "4"])
        capsys.readouterr()
        assert code == 2


class TestUsage:
    def test_no_command(self, capsys):
        code = run([])
        capsys.readouterr()
        assert code == 2

    def test_unknown_command(self, capsys):
        code = run(["frobnicate"])
        capsys.readouterr()
        assert code == 2

    def test_missing_required_flag(self, capsys):
        code = run(["verify", "all", "--n-max", "3"])
        capsys.readouterr()
        assert code == 2

    def test_help_exits_zero(self, capsys):
        code = run(["--help"])
        capsys.readouterr()
        assert code == 0
