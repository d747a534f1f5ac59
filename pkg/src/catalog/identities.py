"""Identity checks and their reports.

An identity is a named function of the precision returning a list of checks: an ``Equation``
compares two elements (exactly when both are polynomials, to precision otherwise), a
``Claim`` records an already decided fact such as a valuation or a search result, and an
``Observation`` is an exploratory finding carried into the report without affecting its status.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Union

from ..errors import AlgebraError
from ..rings.skew_laurent import SkewLaurentPoly
from ..rings.skew_series import DifferAt, Element, equal_to_precision
from ..utils.logging_utils import abbreviate
from ..utils.reports import EXACT, FAIL, INCONCLUSIVE, PASS, IdentityReport, precision_mode


@dataclass(frozen=True)
class Equation:
    label: str
    lhs: Element
    rhs: Element


@dataclass(frozen=True)
class Claim:
    label: str
    holds: bool | None
    detail: str | None = None
    # set when the claim was decided on a truncated series window
    window: int | None = None


@dataclass(frozen=True)
class Observation:
    label: str
    detail: str


Check = Union[Equation, Claim, Observation]


@dataclass(frozen=True)
class Identity:
    name: str
    suite: str
    check: Callable[[int], list[Check]]
    note: str | None = None


@dataclass(frozen=True)
class _Outcome:
    status: str
    exact: bool
    window: int | None
    witness: str | None = None


def _compare(equation: Equation) -> _Outcome:
    exact = isinstance(equation.lhs, SkewLaurentPoly) and isinstance(equation.rhs, SkewLaurentPoly)
    outcome = equal_to_precision(equation.lhs, equation.rhs)
    if isinstance(outcome, DifferAt):
        variable = equation.lhs.tag.split("/")[0]
        witness = f"{equation.label}: sides differ at {variable}^{outcome.exponent} by {outcome.delta.render()}"
        return _Outcome(FAIL, exact, None, witness)
    if exact:
        return _Outcome(PASS, True, None)
    lowest = min(_valuation(equation.lhs), _valuation(equation.rhs))
    if outcome.precision <= lowest:
        return _Outcome(INCONCLUSIVE, False, outcome.precision, f"{equation.label}: no coefficient agreed")
    return _Outcome(PASS, False, outcome.precision)


def _valuation(value: Element) -> int:
    if isinstance(value, SkewLaurentPoly):
        return value.valuation() if value else 0
    return value.valuation


def _judge(check: Equation | Claim) -> _Outcome:
    if isinstance(check, Equation):
        return _compare(check)
    exact = check.window is None
    if check.holds is None:
        return _Outcome(INCONCLUSIVE, exact, check.window, f"{check.label}: {check.detail or 'undecided'}")
    if not check.holds:
        return _Outcome(FAIL, exact, check.window, f"{check.label}: {check.detail or 'does not hold'}")
    return _Outcome(PASS, exact, check.window)


def evaluate_identity(identity: Identity, precision: int, logger: logging.Logger | None = None) -> IdentityReport:
    """Run one identity; algebra failures become a fail report instead of propagating."""
    started = time.perf_counter()
    status, witness = PASS, None
    exact, window = True, None
    remarks: list[str] = []
    try:
        for check in identity.check(precision):
            if isinstance(check, Observation):
                remarks.append(f"{check.label}: {check.detail}")
                continue
            outcome = _judge(check)
            exact = exact and outcome.exact
            if outcome.window is not None:
                window = outcome.window if window is None else min(window, outcome.window)
            if outcome.status == FAIL:
                status, witness = FAIL, outcome.witness
                break
            if outcome.status == INCONCLUSIVE and status == PASS:
                status, witness = INCONCLUSIVE, outcome.witness
    except AlgebraError as exc:
        status, witness = FAIL, f"{type(exc).__name__}: {exc}"
    elapsed = (time.perf_counter() - started) * 1000
    mode = EXACT if exact else precision_mode(window if window is not None else precision)
    report = IdentityReport(
        identity.name,
        status,
        mode,
        elapsed,
        abbreviate(witness) if witness is not None else None,
        identity.note,
        abbreviate("; ".join(remarks), 240) if remarks else None,
    )
    if logger is not None:
        if report.passed:
            logger.info("identity %s: %s, %s, %.1f ms", report.name, report.status, report.mode, elapsed)
        else:
            logger.error("identity %s: %s (%s)", report.name, report.status, report.witness)
    return report


def run_identities(
    identities: Iterable[Identity], precision: int, logger: logging.Logger | None = None
) -> list[IdentityReport]:
    return [evaluate_identity(identity, precision, logger) for identity in identities]
