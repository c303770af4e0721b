"""End-to-end CLI behavior: exit codes, output formats, figure CSVs."""

import csv
import json
from dataclasses import asdict

from polydgamma import CheckReport
from polydgamma.cli import main


class TestExitCodes:
    def test_eval_ok(self, capsys):
        assert main(["eval", "--n", "2", "--x", "1"]) == 0
        out = capsys.readouterr().out
        assert "value=" in out and "method=series" in out

    def test_eval_domain_error(self, capsys):
        assert main(["eval", "--n", "2", "--x", "-1"]) == 2
        assert "error" in capsys.readouterr().err

    def test_eval_order_too_low(self, capsys):
        assert main(["eval", "--n", "1", "--x", "1"]) == 2

    def test_unknown_check_id(self, capsys):
        assert main(["check", "--id", "nonsense"]) == 2

    def test_gap_omega_counterexample(self, capsys):
        code = main(["check", "--id", "F-cm", "--n", "3", "--omega", "0.6",
                     "--depth", "2", "--grid-count", "8"])
        assert code == 1

    def test_single_check_pass(self, capsys):
        assert main(["check", "--id", "turan", "--n", "2",
                     "--grid-count", "10"]) == 0

    def test_audit_always_zero(self, capsys):
        assert main(["audit"]) == 0

    def test_limit(self, capsys):
        assert main(["limit", "--n", "2", "--x-max", "10000"]) == 0
        assert "limit -1" in capsys.readouterr().out


class TestEvalOutputs:
    def test_anchor_value(self, capsys):
        main(["eval", "--n", "2", "--x", "1", "--format", "json"])
        d = json.loads(capsys.readouterr().out)
        assert abs(d["value"] - (-3.2898681336964528)) < 1e-10
        assert d["method"] == "series"

    def test_didouble_anchor(self, capsys):
        main(["eval", "--psi2", "--x", "1", "--format", "json"])
        d = json.loads(capsys.readouterr().out)
        assert abs(d["value"] - 1.1582771316968601) < 1e-10

    def test_method_selection(self, capsys):
        main(["eval", "--n", "3", "--x", "2", "--method", "integral",
              "--format", "json"])
        d = json.loads(capsys.readouterr().out)
        assert d["method"] == "integral"


class TestCheckJson:
    def test_schema_and_round_trip(self, capsys):
        main(["check", "--id", "turan", "--n", "2", "--grid-count", "10",
              "--format", "json"])
        d = json.loads(capsys.readouterr().out)
        for key in ("check_id", "params", "passed", "tolerance", "witnesses",
                    "counterexamples"):
            assert key in d
        report = CheckReport.from_dict(d)
        assert asdict(CheckReport.from_dict(report.to_dict())) == asdict(report)

    def test_limit_json(self, capsys):
        main(["limit", "--n", "3", "--x-max", "10000", "--format", "json"])
        d = json.loads(capsys.readouterr().out)
        assert abs(d["scaled_value"] - d["limit"]) < 4e-4


class TestAuditJson:
    def test_schema(self, capsys):
        main(["audit", "--format", "json"])
        entries = json.loads(capsys.readouterr().out)
        assert len(entries) >= 10
        for e in entries:
            assert {"identity_id", "status", "max_deviation"} <= set(e)
            assert e["status"] in ("confirmed", "discrepancy")


class TestFigures:
    def _read(self, path):
        with open(path, encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
        return rows[0], rows[1:]

    def test_figure2_ordering(self, tmp_path, capsys):
        out = tmp_path / "fig2.csv"
        assert main(["figure", "--id", "2", "--out", str(out)]) == 0
        header, data = self._read(out)
        assert header == ["x", "lhs", "rhs"]
        assert len(data) == 400
        assert all(float(r[2]) >= float(r[1]) for r in data)

    def test_figure3_settles(self, tmp_path, capsys):
        out = tmp_path / "fig3.csv"
        main(["figure", "--id", "3", "--out", str(out)])
        header, data = self._read(out)
        assert header == ["x", "x_psi2_2"]
        assert abs(float(data[-1][0]) - 40000) < 1e-6
        assert abs(float(data[-1][1]) + 1) < 1e-4

    def test_figure4_negative(self, tmp_path, capsys):
        out = tmp_path / "fig4.csv"
        main(["figure", "--id", "4", "--out", str(out)])
        header, data = self._read(out)
        assert header == ["a", "I1_n3", "I1_n4"]
        assert all(float(r[1]) < 0 and float(r[2]) < 0 for r in data)

    def test_figure1_alternating_columns(self, tmp_path, capsys):
        out = tmp_path / "fig1.csv"
        main(["figure", "--id", "1", "--out", str(out)])
        header, data = self._read(out)
        assert header == ["x", "d0", "d1", "d2", "d3", "d4", "d5"]
        # psi2^(3+k) has sign (-1)^(3+k+1) = (-1)^k.
        for row in data[:: 40]:
            for k in range(6):
                assert (-1) ** k * float(row[k + 1]) > 0

    def test_csv_locale_independent(self, tmp_path, capsys):
        out = tmp_path / "fig5.csv"
        main(["figure", "--id", "5", "--out", str(out)])
        text = out.read_text(encoding="utf-8")
        assert ";" not in text
        header, data = self._read(out)
        for row in data:
            for cell in row:
                float(cell)  # parses with dot decimal separator
                assert "," not in cell

    def test_bad_figure_id(self, capsys):
        assert main(["figure", "--id", "7"]) == 2

    def test_unwritable_path(self, capsys):
        assert main(["figure", "--id", "3",
                     "--out", "/nonexistent-dir/f.csv"]) == 2
