import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any

from basicset_kit import SCHEMA
from basicset_kit.codec import encode_multipartition
from basicset_kit.multipartitions import Multipartition

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class PairOutcome:
    matched: bool = False
    asserted: int = 0
    violated: bool = False
    detail: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True, slots=True)
class Counterexample:
    left: Multipartition
    right: Multipartition
    detail: dict[str, Any]

    def to_json(self) -> dict[str, Any]:
        return {
            "left": encode_multipartition(self.left),
            "right": encode_multipartition(self.right),
            **self.detail,
        }


@dataclass(frozen=True, slots=True)
class SweepReport:
    check: str
    parameters: dict[str, Any]
    tested: int
    matched: int
    asserted: int
    counterexamples: tuple[Counterexample, ...]
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def first_counterexample(self) -> Counterexample | None:
        return self.counterexamples[0] if self.counterexamples else None

    def to_json(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "check": self.check,
            "parameters": self.parameters,
            "passed": self.passed,
            "tested": self.tested,
            "matched": self.matched,
            "asserted": self.asserted,
            "counterexamples": [c.to_json() for c in self.counterexamples],
            "notes": list(self.notes),
        }

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"{self.check}: {verdict} "
            f"(tested={self.tested}, matched={self.matched}, "
            f"asserted={self.asserted}, counterexamples={len(self.counterexamples)})"
        )


Evaluate = Callable[[Multipartition, Multipartition], PairOutcome]


def _row(
    evaluate: Evaluate, labels: Sequence[Multipartition], left: Multipartition
) -> list[PairOutcome]:
    return [evaluate(left, right) for right in labels]


def sweep_pairs(
    check: str,
    parameters: dict[str, Any],
    labels: Sequence[Multipartition],
    evaluate: Evaluate,
    *,
    jobs: int = 1,
    notes: Sequence[str] = (),
) -> SweepReport:
    row = partial(_row, evaluate, labels)
    if jobs > 1 and len(labels) > 1:
        logger.debug("%s: %d rows over %d workers", check, len(labels), jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(row, labels, chunksize=max(1, len(labels) // (4 * jobs))))
    else:
        rows = [row(left) for left in labels]

    return collect(check, parameters, labels, rows, notes=notes)


def sweep_labels(
    check: str,
    parameters: dict[str, Any],
    labels: Sequence[Multipartition],
    evaluate: Callable[[Multipartition], PairOutcome],
    *,
    notes: Sequence[str] = (),
) -> SweepReport:
    counterexamples: list[Counterexample] = []
    asserted = 0
    for label in labels:
        outcome = evaluate(label)
        asserted += outcome.asserted
        if outcome.violated:
            counterexamples.append(Counterexample(label, label, outcome.detail))
            logger.warning("%s: counterexample %s", check, label)

    report = SweepReport(
        check=check,
        parameters=parameters,
        tested=len(labels),
        matched=len(labels),
        asserted=asserted,
        counterexamples=tuple(counterexamples),
        notes=tuple(notes),
    )
    logger.info(report.summary())
    return report


def collect(
    check: str,
    parameters: dict[str, Any],
    labels: Sequence[Multipartition],
    rows: Sequence[Sequence[PairOutcome]],
    *,
    notes: Sequence[str] = (),
) -> SweepReport:
    tested = matched = asserted = 0
    counterexamples: list[Counterexample] = []

    for left, outcomes in zip(labels, rows, strict=True):
        for right, outcome in zip(labels, outcomes, strict=True):
            tested += 1
            matched += outcome.matched
            asserted += outcome.asserted
            if outcome.violated:
                counterexamples.append(Counterexample(left, right, outcome.detail))
                logger.warning("%s: counterexample %s vs %s", check, left, right)

    report = SweepReport(
        check=check,
        parameters=parameters,
        tested=tested,
        matched=matched,
        asserted=asserted,
        counterexamples=tuple(counterexamples),
        notes=tuple(notes),
    )
    logger.info(report.summary())
    return report
