from __future__ import annotations

import json

import pytest

from src.catalog.morphisms import phi
from src.main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main

ENV_KEYS = ("QDR_PREC", "QDR_FORMAT", "QDR_LOG_DIR", "QDR_LOG_LEVEL", "QDR_MAX_WORD_LENGTH", "QDR_SHOW_NOTES")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch) -> None:
    for key in ENV_KEYS:
        monkeypatch.delenv(key, raising=False)


def test_unknown_suite_is_a_usage_error(capsys) -> None:
    assert main(["verify", "S9"]) == EXIT_USAGE
    assert "Unknown suite 'S9'" in capsys.readouterr().err


def test_precision_below_the_minimum(capsys) -> None:
    assert main(["eval", "x", "--prec", "2"]) == EXIT_USAGE


def test_missing_command() -> None:
    assert main([]) == EXIT_USAGE


def test_bad_environment_precision(monkeypatch, capsys) -> None:
    monkeypatch.setenv("QDR_PREC", "two")
    assert main(["eval", "x"]) == EXIT_USAGE
    assert "Config error: QDR_PREC" in capsys.readouterr().err


def test_eval_prints_the_normal_form(capsys) -> None:
    assert main(["eval", "x*y - q*y*x"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "0"


def test_eval_json(capsys) -> None:
    assert main(["eval", "(1 + x)^-1", "--prec", "4", "--format", "json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["exact"] is False
    assert document["value"].endswith("O(x^4)")


def test_eval_parse_error(capsys) -> None:
    assert main(["eval", "x +"]) == EXIT_FAILURE
    err = capsys.readouterr().err
    assert "FAILED\nReason: " in err
    assert "unexpected end of input" in err


def test_apply_phi(capsys) -> None:
    assert main(["apply", "phi", "y", "--format", "json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["morphism"] == "phi"
    assert document["exact"] is True
    assert document["value"] == phi().image_y.render()


def test_apply_unknown_morphism() -> None:
    assert main(["apply", "chi", "x"]) == EXIT_USAGE


def test_z_coefficients_of_psi(capsys) -> None:
    assert main(["z-coeffs", "psi", "2", "--prec", "6"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "psi: s = 1"
    assert [line.split(" = ")[0] for line in lines[1:]] == ["z_0", "z_1", "z_2"]


def test_z_coefficients_of_tau(capsys) -> None:
    assert main(["z-coeffs", "tau", "1", "--format", "json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["s"] == -1
    assert document["corrections"] == []


def test_express_finds_r20(capsys) -> None:
    assert main(["express", "R20", "--gens", "theta1; theta2; theta3", "--max-len", "2"]) == EXIT_OK
    assert "theta1*theta1" in capsys.readouterr().out


def test_express_reports_not_found(capsys) -> None:
    assert main(["express", "x", "--gens", "theta1;theta2", "--max-len", "1"]) == EXIT_FAILURE
    assert capsys.readouterr().out.startswith("not_found")


def test_verify_suite_file(tmp_path, capsys) -> None:
    path = tmp_path / "mine.txt"
    path.write_text("q-commute, xy, x*y, q*y*x, exact\n", encoding="utf-8")
    assert main(["verify", "--suite-file", str(path), "--format", "json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["suite"] == "mine"
    assert document["results"][0]["status"] == "pass"


def test_verify_failing_suite_file(tmp_path, capsys) -> None:
    path = tmp_path / "bad.txt"
    path.write_text("wrong, xy, x, y, exact\n", encoding="utf-8")
    assert main(["verify", "--suite-file", str(path)]) == EXIT_FAILURE
    assert "0/1 passed" in capsys.readouterr().out


def test_malformed_suite_file(tmp_path, capsys) -> None:
    path = tmp_path / "broken.txt"
    path.write_text("wrong, xy, x\n", encoding="utf-8")
    assert main(["verify", "--suite-file", str(path)]) == EXIT_USAGE
    assert "line 1:" in capsys.readouterr().err


def test_missing_suite_file(tmp_path) -> None:
    assert main(["verify", "--suite-file", str(tmp_path / "absent.txt")]) == EXIT_USAGE


def test_log_file_and_saved_report(tmp_path, capsys) -> None:
    log_file = tmp_path / "run" / "run.log"
    suite = tmp_path / "one.txt"
    suite.write_text("one, xy, 1, 1, exact\n", encoding="utf-8")
    assert main(["verify", "--suite-file", str(suite), "--log-file", str(log_file)]) == EXIT_OK
    assert "identity one: pass" in log_file.read_text(encoding="utf-8")
    (report,) = (tmp_path / "run" / "reports").iterdir()
    assert report.suffix == ".txt"
