from __future__ import annotations

import logging

from src.catalog.identities import Claim, Equation, Identity, Observation, evaluate_identity, run_identities
from src.rings.scalar_field import ScalarK
from src.rings.skew_laurent import SkewLaurentPoly
from src.rings.skew_series import to_series
from src.utils.reports import EXACT, FAIL, INCONCLUSIVE, PASS

X = SkewLaurentPoly.x()
Y = SkewLaurentPoly.y()


def _identity(*checks, name: str = "sample") -> Identity:
    return Identity(name, "test", lambda precision: list(checks))


def test_exact_equation_passes_in_exact_mode() -> None:
    report = evaluate_identity(_identity(Equation("xy = q*yx", X * Y, ScalarK.q() * Y * X)), 6)
    assert report.status == PASS
    assert report.mode == EXACT
    assert report.witness is None


def test_series_equation_reports_its_window() -> None:
    lhs = to_series(1 + X, 5).invert()
    rhs = to_series(1 + X, 7).invert()
    report = evaluate_identity(_identity(Equation("geometric", lhs, rhs)), 5)
    assert report.status == PASS
    assert report.mode == "precision(5)"


def test_failure_names_the_first_differing_power() -> None:
    report = evaluate_identity(_identity(Equation("x = y", X, Y)), 6)
    assert report.status == FAIL
    assert report.witness.startswith("x = y: sides differ at x^0")


def test_undecided_claim_is_inconclusive() -> None:
    report = evaluate_identity(_identity(Claim("open", None, "search exhausted")), 6)
    assert report.status == INCONCLUSIVE
    assert report.witness == "open: search exhausted"


def test_failure_wins_over_inconclusive() -> None:
    report = evaluate_identity(_identity(Claim("open", None), Claim("broken", False), Claim("fine", True)), 6)
    assert report.status == FAIL
    assert report.witness == "broken: does not hold"


def test_algebra_errors_become_failures() -> None:
    def check(precision: int):
        return [Equation("inverse", (1 + X).invert_unit(), X)]

    report = evaluate_identity(Identity("non-unit", "test", check), 6)
    assert report.status == FAIL
    assert report.witness.startswith("NotAUnitError: ")


def test_note_is_carried_into_the_report() -> None:
    identity = Identity("noted", "test", lambda precision: [Claim("ok", True)], note="printed differently")
    assert evaluate_identity(identity, 6).note == "printed differently"


def test_failures_are_logged_as_errors(caplog) -> None:
    logger = logging.getLogger("tests.identities")
    with caplog.at_level(logging.INFO, logger="tests.identities"):
        reports = run_identities([_identity(Claim("ok", True), name="good"), _identity(Claim("bad", False), name="bad")], 6, logger)
    assert [report.status for report in reports] == [PASS, FAIL]
    levels = {record.getMessage().split(":")[0]: record.levelno for record in caplog.records}
    assert levels["identity good"] == logging.INFO
    assert levels["identity bad"] == logging.ERROR


def test_claim_decided_on_a_window_reports_precision_mode() -> None:
    report = evaluate_identity(_identity(Claim("conjugation", True, window=5), Claim("shape", True)), 8)
    assert report.status == PASS
    assert report.mode == "precision(5)"


def test_observations_become_remarks_without_changing_the_status() -> None:
    checks = (Claim("ok", True), Observation("scalar", "not a scalar multiple"), Observation("sign", "+1"))
    report = evaluate_identity(_identity(*checks), 6)
    assert report.status == PASS
    assert report.mode == EXACT
    assert report.witness is None
    assert report.remark == "scalar: not a scalar multiple; sign: +1"
