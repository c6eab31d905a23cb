import json

import numpy as np
import pytest

from dualnum.cli import ResultRecord, main, read_xy_csv
from dualnum import ValidationError
from dualnum import fixtures


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


COMMANDS = ["nr-example1", "mechanism", "spline", "diffusivity", "duffing"]


class TestExitCodes:
    @pytest.mark.parametrize("command", COMMANDS)
    def test_success_is_zero(self, capsys, command):
        code, out, _ = run(capsys, command)
        assert code == 0
        assert out

    def test_usage_error_is_one(self, capsys):
        code, _, _ = run(capsys, "no-such-command")
        assert code == 1

    def test_validation_error_is_one(self, capsys, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("1.0, 2.0\n0.5, 1.0\n")
        code, _, err = run(capsys, "spline", "--csv", str(bad))
        assert code == 1
        assert "increasing" in err

    def test_numerical_failure_is_two(self, capsys, tmp_path):
        monotone = tmp_path / "monotone.csv"
        data = fixtures.monotone_fixture()
        monotone.write_text(
            "\n".join(f"{x},{y}" for x, y in zip(data.x, data.y)))
        code, _, err = run(capsys, "diffusivity", "--csv", str(monotone))
        assert code == 2
        assert "extremum" in err

    def test_out_of_range_at_is_one(self, capsys):
        code, _, err = run(capsys, "spline", "--at", "99.0")
        assert code == 1

    def test_bad_precision_is_one(self, capsys):
        code, _, _ = run(capsys, "spline", "--precision", "0")
        assert code == 1


class TestChecks:
    @pytest.mark.parametrize("command", COMMANDS)
    def test_fixture_checks_pass(self, capsys, command):
        code, payload, _ = run_json(capsys, command, "--check")
        assert code == 0
        assert payload["status"] == "ok"
        assert payload["checks"]
        assert all(c["pass"] for c in payload["checks"])

    def test_check_failure_sets_exit_code(self, capsys):
        # values at a different evaluation point cannot match the fixture
        code, payload, _ = run_json(capsys, "duffing", "--t", "0.5", "--check")
        assert code == 2
        assert payload["status"] == "check-failed"

    def test_mechanism_identity_residual_check(self, capsys):
        code, payload, _ = run_json(capsys, "mechanism", "--fn", "identity",
                                    "--check")
        assert code == 0
        labels = [r["label"] for r in payload["results"]]
        assert labels == ["phi(x0)", "residual"]
        residual = payload["results"][1]["value"]
        assert abs(residual) <= 1e-9


class TestJsonOutput:
    def test_schema_and_round_trip(self, capsys):
        code, payload, _ = run_json(capsys, "nr-example1")
        assert code == 0
        assert set(payload) == {"results", "status"}
        assert payload["status"] == "ok"
        for row in payload["results"]:
            assert set(row) == {"label", "value", "first", "second",
                                "provenance"}
            record = ResultRecord.from_dict(row)
            assert record.to_dict() == row

    def test_byte_identical_reruns(self, capsys):
        _, first, _ = run(capsys, "duffing", "--json")
        _, second, _ = run(capsys, "duffing", "--json")
        assert first == second

    def test_full_precision_in_json(self, capsys):
        _, payload, _ = run_json(capsys, "nr-example1")
        u = payload["results"][0]["value"]
        assert abs(u - 1.3085322276188784) < 1e-12


class TestHumanOutput:
    def test_default_four_digits(self, capsys):
        code, out, _ = run(capsys, "duffing")
        assert code == 0
        assert "-0.7475" in out  # value rounds to 4 digits

    def test_precision_flag(self, capsys):
        _, out, _ = run(capsys, "duffing", "--precision", "7")
        assert "-0.7474761" in out


class TestCsvIngestion:
    def test_round_trip_with_header(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("freq,amp\n1.0, 2.0\n2.0, 3.0\n3.0, 1.0\n")
        data = read_xy_csv(str(path))
        assert np.allclose(data.x, [1.0, 2.0, 3.0])
        assert np.allclose(data.y, [2.0, 3.0, 1.0])

    def test_whitespace_separated(self, tmp_path):
        path = tmp_path / "data.txt"
        path.write_text("1.0 2.0\n2.5\t3.0\n")
        data = read_xy_csv(str(path))
        assert np.allclose(data.x, [1.0, 2.5])

    def test_error_carries_line_number(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("1.0, 2.0\n2.0, oops\n")
        with pytest.raises(ValidationError, match=":2:"):
            read_xy_csv(str(path))

    def test_wrong_column_count(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("1.0, 2.0, 3.0\n")
        with pytest.raises(ValidationError, match=":1:"):
            read_xy_csv(str(path))

    def test_unsorted_rows_rejected(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("2.0, 1.0\n1.0, 2.0\n")
        with pytest.raises(ValidationError, match="increasing"):
            read_xy_csv(str(path))

    def test_missing_file(self):
        with pytest.raises(ValidationError):
            read_xy_csv("/nonexistent/file.csv")

    def test_too_few_rows(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("1.0, 2.0\n")
        with pytest.raises(ValidationError, match="2 data rows"):
            read_xy_csv(str(path))


class TestCommandBehaviour:
    def test_spline_accepts_user_csv(self, capsys, tmp_path):
        path = tmp_path / "quad.csv"
        xs = np.linspace(0.5, 4.0, 15)
        path.write_text("\n".join(f"{x},{x * x}" for x in xs))
        code, payload, _ = run_json(capsys, "spline", "--csv", str(path),
                                    "--at", "2.0")
        assert code == 0
        y_row = payload["results"][0]
        assert abs(y_row["value"] - 4.0) < 1e-3
        assert abs(y_row["first"] - 4.0) < 1e-2

    def test_diffusivity_thickness_scales_result(self, capsys):
        _, base, _ = run_json(capsys, "diffusivity")
        _, doubled, _ = run_json(capsys, "diffusivity", "--thickness",
                                 str(2 * fixtures.SAMPLE_THICKNESS))
        alpha = [r for r in base["results"] if r["label"] == "alpha_s"][0]
        alpha2 = [r for r in doubled["results"] if r["label"] == "alpha_s"][0]
        assert alpha2["value"] == pytest.approx(2 * alpha["value"], rel=1e-12)

    def test_diffusivity_in_range_start_honoured(self, capsys):
        peak = fixtures.radiometry_peak_frequency()
        code, payload, _ = run_json(capsys, "diffusivity", "--x0", str(peak))
        assert code == 0
        f1 = payload["results"][0]
        assert f1["value"] == pytest.approx(peak, rel=1e-6)

    def test_duffing_time_flag(self, capsys):
        code, payload, _ = run_json(capsys, "duffing", "--t", "2.0")
        assert code == 0
        from dualnum import duffing_problem, rk4
        want, _ = rk4(duffing_problem(100), 2.0)
        assert payload["results"][0]["value"] == pytest.approx(want, abs=0)

    def test_mechanism_x0_flag(self, capsys):
        code, payload, _ = run_json(capsys, "mechanism", "--x0", "1.5")
        assert code == 0
        assert payload["status"] == "ok"
