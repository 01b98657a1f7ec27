import json
import os

import pytest

from grasshopper.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestConstruct:
    def test_circle_antipodal_odd_writes_pair(self, tmp_path, capsys):
        out = tmp_path / "odd.json"
        code, stdout, _ = run(
            ["construct", "circle-antipodal-odd", "--p", "3", "--q", "8",
             "--out", str(out)], capsys)
        assert code == 0
        payload = json.loads(out.read_text())
        assert set(payload) == {"type", "block_lawn", "demi_lawn"}

    def test_sphere_podd(self, tmp_path, capsys):
        out = tmp_path / "podd.json"
        code, _, _ = run(
            ["construct", "sphere-podd", "--p", "3", "--q", "7", "--r", "1e-3",
             "--out", str(out)], capsys)
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["case"] == "podd"
        assert len(payload["caps"]) == 8

    def test_bad_flags_usage_error(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["construct", "circle-general", "--nonsense"])
        assert err.value.code == 2

    def test_domain_error_exit_2(self, tmp_path, capsys):
        code, _, stderr = run(
            ["construct", "circle-general", "--L-pi", "1/3", "--p", "2", "--q", "4",
             "--out", str(tmp_path / "x.json")], capsys)
        assert code == 2
        assert "reduced" in stderr

    def test_validity_error_exit_2(self, tmp_path, capsys):
        code, _, stderr = run(
            ["construct", "sphere-peven", "--p", "6", "--q", "13", "--r", "0.5",
             "--out", str(tmp_path / "x.json")], capsys)
        assert code == 2

    def test_outdir_env_var(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("GRASSHOPPER_OUTDIR", str(tmp_path))
        code, stdout, _ = run(
            ["construct", "circle-antipodal-even", "--q", "5"], capsys)
        assert code == 0
        assert stdout.strip().startswith(str(tmp_path))


class TestRetention:
    def test_retention_csv(self, tmp_path, capsys):
        lawn_path = tmp_path / "lawn.json"
        run(["construct", "circle-antipodal-even", "--q", "5", "--out",
             str(lawn_path)], capsys)
        out = tmp_path / "r.csv"
        code, _, _ = run(
            ["retention", "--lawn", str(lawn_path), "--jump-p", "2", "--jump-q", "5",
             "--out", str(out)], capsys)
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0].startswith("# grasshopper-csv v1")
        assert lines[1] == ("jump_num,jump_den_or_float,construction,retention_num,"
                            "retention_den,bound,attained_flag")
        assert lines[2].split(",")[3:5] == ["1", "1"]

    def test_two_lawn_mode(self, tmp_path, capsys):
        a = tmp_path / "a.json"
        run(["construct", "circle-antipodal-even", "--q", "3", "--out", str(a)], capsys)
        out = tmp_path / "two.csv"
        code, _, _ = run(
            ["retention", "--lawn", str(a), "--lawn-b", str(a), "--jump-p", "2",
             "--jump-q", "3", "--out", str(out)], capsys)
        assert code == 0

    def test_missing_jump_is_usage_error(self, tmp_path, capsys):
        a = tmp_path / "a.json"
        run(["construct", "circle-antipodal-even", "--q", "3", "--out", str(a)], capsys)
        code, _, _ = run(["retention", "--lawn", str(a)], capsys)
        assert code == 2


class TestVerify:
    def test_circle_exact_suite_passes(self, tmp_path, capsys):
        out = tmp_path / "v.csv"
        code, stdout, _ = run(["verify", "circle-exact", "--out", str(out)], capsys)
        assert code == 0
        assert "FAIL" not in stdout
        assert out.read_text().count("true") >= 10

    def test_orbit_suite_small(self, tmp_path, capsys):
        code, stdout, _ = run(
            ["verify", "circle-orbit", "--max-q", "6", "--out",
             str(tmp_path / "o.csv")], capsys)
        assert code == 0

    def test_unknown_suite_rejected(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["verify", "nonsense"])
        assert err.value.code == 2

    def test_sphere_improvement_row(self, tmp_path, capsys):
        out = tmp_path / "imp.csv"
        code, stdout, _ = run(
            ["verify", "sphere-improvement", "--phi-case", "irrational",
             "--phi-rad", "1.2", "--r", "1e-3", "--out", str(out)], capsys)
        assert code == 0
        assert "PASS" in stdout


class TestSweep:
    def test_rational_grid_values(self, tmp_path, capsys):
        out = tmp_path / "sweep.csv"
        code, _, _ = run(["sweep", "--max-q", "6", "--out", str(out)], capsys)
        assert code == 0
        rows = out.read_text().splitlines()[2:]
        table = {tuple(r.split(",")[:2]): r.split(",")[2:] for r in rows}
        # odd-p rationals dip to 1 - 1/q in one-lawn mode
        assert table[("1", "3")][0] == "2/3"
        assert table[("1", "3")][2] == "1/1"  # two-lawn mode: q odd stays 1
        assert table[("1", "6")][2] == "5/6"  # q even dips in two-lawn mode
        assert table[("2", "5")][0] == "1/1"

    def test_float_grid_suprema(self, tmp_path, capsys):
        out = tmp_path / "fsweep.csv"
        code, _, _ = run(
            ["sweep", "--grid-start", "0.1", "--grid-stop", "3.0", "--grid-n", "7",
             "--out", str(out)], capsys)
        assert code == 0
        rows = [r.split(",") for r in out.read_text().splitlines()[2:]]
        assert all(r[2] == "1" and r[3] == "false" for r in rows)

    def test_byte_identical_reruns(self, tmp_path, capsys):
        out1, out2 = tmp_path / "s1.csv", tmp_path / "s2.csv"
        run(["sweep", "--max-q", "5", "--out", str(out1)], capsys)
        run(["sweep", "--max-q", "5", "--out", str(out2)], capsys)
        assert out1.read_bytes() == out2.read_bytes()
