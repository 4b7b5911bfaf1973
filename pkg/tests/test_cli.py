"""CLI surface: file formats, determinism, exit codes, parameter messages."""

import math
import os

import numpy as np
import pytest

from uvpackets import cli
from uvpackets.fields import Field2D, Grid2D, sample


def read(path):
    with open(path, "rb") as fh:
        return fh.read()


class TestWriteCsv:
    def test_zero_field_line_count(self, tmp_path):
        grid = Grid2D(0, 1, 0, 1, 3, 3)
        f = Field2D(grid, np.zeros((3, 3)))
        out = tmp_path / "zero.csv"
        cli.write_csv(f, "abs2", str(out))
        lines = read(out).decode().split("\n")
        assert lines[0] == "u,v,value"
        assert len(lines) == 1 + 9 + 1  # header + rows + trailing newline
        assert lines[1] == "0.0,0.0,0.0"

    def test_row_order_v_outer(self, tmp_path):
        grid = Grid2D(0, 1, 10, 11, 3, 3)
        f = sample(grid, lambda U, V: U + V)
        out = tmp_path / "order.csv"
        cli.write_csv(f, "re", str(out))
        rows = read(out).decode().strip().split("\n")[1:]
        first_three_v = [r.split(",")[1] for r in rows[:3]]
        assert first_three_v == ["10.0", "10.0", "10.0"]

    def test_shortest_roundtrip_value(self, tmp_path):
        # 2 e^{-4} survives a text round trip exactly
        grid = Grid2D(-1, 1, -1, 1, 3, 3)
        val = 2 * math.exp(-4.0)
        f = Field2D(grid, np.full((3, 3), val))
        out = tmp_path / "rt.csv"
        cli.write_csv(f, "re", str(out))
        row = read(out).decode().split("\n")[1]
        assert float(row.split(",")[2]) == val

    def test_series_writer(self, tmp_path):
        out = tmp_path / "series.csv"
        cli.write_csv_series(np.array([0.0, 0.5]), np.array([1.0, 0.25]), str(out))
        assert read(out).decode() == "u,value\n0.0,1.0\n0.5,0.25\n"

    def test_lf_endings(self, tmp_path):
        grid = Grid2D(0, 1, 0, 1, 3, 3)
        f = Field2D(grid, np.zeros((3, 3)))
        out = tmp_path / "lf.csv"
        cli.write_csv(f, "abs2", str(out))
        assert b"\r" not in read(out)


class TestWritePgm:
    def test_zero_field(self, tmp_path):
        grid = Grid2D(0, 1, 0, 1, 3, 3)
        out = tmp_path / "zero.pgm"
        cli.write_pgm(Field2D(grid, np.zeros((3, 3))), "abs2", str(out))
        text = read(out).decode().strip().split("\n")
        assert text[0] == "P2"
        assert text[1] == "3 3"
        assert text[2] == "255"
        assert all(px == "0" for row in text[3:] for px in row.split())

    def test_single_max_pixel(self, tmp_path):
        grid = Grid2D(0, 1, 0, 1, 3, 3)
        vals = np.zeros((3, 3))
        vals[1, 2] = 2.0
        out = tmp_path / "one.pgm"
        cli.write_pgm(Field2D(grid, vals), "re2", str(out))
        rows = read(out).decode().strip().split("\n")[3:]
        pixels = [int(x) for row in rows for x in row.split()]
        assert pixels.count(255) == 1
        assert max(pixels) == 255

    def test_signed_quantity_rejected(self, tmp_path):
        grid = Grid2D(0, 1, 0, 1, 3, 3)
        with pytest.raises(ValueError):
            cli.write_pgm(Field2D(grid, np.ones((3, 3))), "re",
                          str(tmp_path / "bad.pgm"))


class TestCommands:
    def test_free_csv_deterministic(self, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        args = ["free", "--alpha", "1", "--d", "2", "--nu", "31", "--nv", "31",
                "--quantity", "abs2", "--format", "csv"]
        assert cli.main(args + ["--out", str(a)]) == 0
        assert cli.main(args + ["--out", str(b)]) == 0
        assert read(a) == read(b)
        assert read(a).startswith(b"u,v,value\n")

    def test_free_pgm(self, tmp_path):
        out = tmp_path / "f.pgm"
        rc = cli.main(["free", "--alpha", "5", "--d", "1.5", "--nu", "61",
                       "--nv", "61", "--quantity", "abs2", "--format", "pgm",
                       "--out", str(out)])
        assert rc == 0
        header = read(out).decode().split("\n")[:3]
        assert header == ["P2", "61 61", "255"]

    def test_box_defaults_to_box_domain(self, tmp_path):
        out = tmp_path / "box.csv"
        rc = cli.main(["box", "--L", "4", "--alpha", "5", "--d", "1.5",
                       "--nmax", "60", "--nu", "41", "--nv", "41",
                       "--out", str(out)])
        assert rc == 0
        rows = read(out).decode().strip().split("\n")[1:]
        first = rows[0].split(",")
        assert float(first[0]) == -2.0 and float(first[1]) == -2.0

    def test_slope_columns(self, tmp_path):
        out = tmp_path / "slope.csv"
        rc = cli.main(["slope", "--alpha", "1", "--d", "4", "--umin", "-8",
                       "--umax", "8", "--nu", "801", "--out", str(out)])
        assert rc == 0
        lines = read(out).decode().strip().split("\n")
        assert lines[0] == "u,psi0,slope_im"
        assert len(lines) == 802
        # slope is odd: value at -8 is minus the value at +8
        first = [float(x) for x in lines[1].split(",")]
        last = [float(x) for x in lines[-1].split(",")]
        assert first[2] == pytest.approx(-last[2], abs=1e-15)

    def test_moments_stdout(self, capsys):
        rc = cli.main(["moments", "--alpha", "1", "--d", "4"])
        assert rc == 0
        out = capsys.readouterr().out
        lines = dict(l.split(" = ") for l in out.strip().split("\n"))
        assert float(lines["product"]) == pytest.approx(0.25, rel=0.05)

    def test_classical_csv(self, tmp_path):
        out = tmp_path / "scan.csv"
        rc = cli.main(["classical", "--alphas", "1,4", "--d", "4",
                       "--v-probe", "2", "--out", str(out)])
        assert rc == 0
        lines = read(out).decode().strip().split("\n")
        assert lines[0] == "alpha,fwhm,crest"
        rows = [list(map(float, l.split(","))) for l in lines[1:]]
        assert rows[1][1] / rows[0][1] == pytest.approx(0.5, abs=0.05)

    def test_validate_plumbing(self, tmp_path, monkeypatch):
        from uvpackets import suite

        def fake_run_all(progress=None):
            res = [suite.CriterionResult(1, "stub", True, "ok")]
            if progress:
                progress(res[0])
            return res

        monkeypatch.setattr(suite, "run_all", fake_run_all)
        monkeypatch.setattr(suite, "erratum_findings", lambda: ["a | b | c | d"])
        out = tmp_path / "report.txt"
        assert cli.main(["validate", "--out", str(out)]) == 0
        text = read(out).decode()
        assert "1 PASS stub" in text
        assert "a | b | c | d" in text

        def fake_fail(progress=None):
            return [suite.CriterionResult(2, "stub", False, "boom")]

        monkeypatch.setattr(suite, "run_all", fake_fail)
        assert cli.main(["validate", "--out", str(out)]) == 1


class TestExitCodes:
    def test_invalid_alpha_names_invariant(self, tmp_path, capsys):
        rc = cli.main(["free", "--alpha", "-1", "--d", "2",
                       "--out", str(tmp_path / "x.csv")])
        assert rc == 2
        err = capsys.readouterr().err
        assert "alpha must be > 0" in err

    def test_invalid_grid_names_invariant(self, tmp_path, capsys):
        rc = cli.main(["free", "--alpha", "1", "--d", "2", "--umin", "5",
                       "--umax", "-5", "--out", str(tmp_path / "x.csv")])
        assert rc == 2
        assert "u_min must be < u_max" in capsys.readouterr().err

    def test_box_offset_outside(self, tmp_path, capsys):
        rc = cli.main(["box", "--L", "4", "--alpha", "5", "--d", "3",
                       "--out", str(tmp_path / "x.csv")])
        assert rc == 2
        assert "|d| must be < L/2" in capsys.readouterr().err

    def test_io_failure(self, tmp_path, capsys):
        rc = cli.main(["free", "--alpha", "1", "--d", "2", "--nu", "11",
                       "--nv", "11",
                       "--out", str(tmp_path / "missing" / "x.csv")])
        assert rc == 3
        assert "i/o failure" in capsys.readouterr().err

    def test_bad_alphas_list(self, tmp_path, capsys):
        rc = cli.main(["classical", "--alphas", "1,zap", "--d", "1",
                       "--out", str(tmp_path / "x.csv")])
        assert rc == 2
