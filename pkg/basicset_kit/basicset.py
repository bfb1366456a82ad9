"""
Abstract verification of the basic-set conditions on a decomposition matrix.

Given D with rows indexed by all labels and columns by a candidate basic
set, and an ordering function f on the rows:

    d_{E,E} = 1                         for every column E
    d_{F,E} != 0 and F != E  =>  f(E) < f(F)

Completeness of the simple modules indexed by the columns cannot be seen in
D and is recorded as an assumption of every report.
"""

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal

from basicset_kit import SCHEMA, KitError
from basicset_kit.codec import (
    DecodeError,
    decode_multipartition,
    encode_multipartition,
    format_rational,
    parse_rational,
)
from basicset_kit.crystal import uglov_multipartitions
from basicset_kit.kappa import a_function
from basicset_kit.multipartitions import ChargeParams, Multipartition

logger = logging.getLogger(__name__)

Reason = Literal["diagonal", "order"]
OrderingFunction = Mapping[Multipartition, Fraction]

COMPLETENESS = (
    "the simple modules indexed by the columns are pairwise non-isomorphic "
    "and exhaust the simple modules (not checked)"
)


class MalformedMatrixError(KitError):
    pass


@dataclass(frozen=True, slots=True)
class DecompMatrix:
    rows: tuple[Multipartition, ...]
    cols: tuple[Multipartition, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows, cols = tuple(self.rows), tuple(self.cols)
        entries = tuple(tuple(row) for row in self.entries)

        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            err = "Row and column labels must be distinct"
            raise MalformedMatrixError(err)
        if missing := [str(col) for col in cols if col not in rows]:
            err = f"Column labels missing from the rows: {', '.join(missing)}"
            raise MalformedMatrixError(err)
        if len(entries) != len(rows) or any(len(row) != len(cols) for row in entries):
            err = f"Entries must form a {len(rows)}x{len(cols)} grid"
            raise MalformedMatrixError(err)
        for row in entries:
            for value in row:
                if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                    err = f"Entries must be nonnegative integers, got {value!r}"
                    raise MalformedMatrixError(err)

        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def entry(self, row: Multipartition, col: Multipartition) -> int:
        return self.entries[self.rows.index(row)][self.cols.index(col)]

    def to_json(self) -> dict[str, Any]:
        return {
            "rows": [encode_multipartition(label) for label in self.rows],
            "cols": [encode_multipartition(label) for label in self.cols],
            "entries": [list(row) for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj: Any) -> "DecompMatrix":
        if not isinstance(obj, dict) or set(obj) != {"rows", "cols", "entries"}:
            err = 'A matrix must be an object with keys "rows", "cols" and "entries"'
            raise MalformedMatrixError(err)
        if not isinstance(obj["entries"], list) or not all(
            isinstance(row, list) for row in obj["entries"]
        ):
            err = "Matrix entries must be an array of arrays"
            raise MalformedMatrixError(err)
        try:
            rows = tuple(decode_multipartition(label) for label in obj["rows"])
            cols = tuple(decode_multipartition(label) for label in obj["cols"])
        except (DecodeError, TypeError) as exc:
            err = f"Invalid matrix label: {exc}"
            raise MalformedMatrixError(err) from exc
        return cls(rows, cols, tuple(tuple(row) for row in obj["entries"]))


@dataclass(frozen=True, slots=True)
class Violation:
    row: Multipartition
    col: Multipartition
    reason: Reason

    def to_json(self) -> dict[str, Any]:
        return {
            "row": encode_multipartition(self.row),
            "col": encode_multipartition(self.col),
            "reason": self.reason,
        }


@dataclass(frozen=True, slots=True)
class BasicSetReport:
    passed: bool
    violations: tuple[Violation, ...]
    assumptions: tuple[str, ...]
    columns_checked: int

    def to_json(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "check": "verify-basic-set",
            "passed": self.passed,
            "columns_checked": self.columns_checked,
            "violations": [violation.to_json() for violation in self.violations],
            "assumptions": list(self.assumptions),
        }


def _precedes(lower: Fraction, higher: Fraction, *, integral_gaps: bool) -> bool:
    gap = higher - lower
    if integral_gaps:
        return gap > 0 and gap.denominator == 1
    return gap > 0


def verify_basic_set(
    matrix: DecompMatrix, f: OrderingFunction, *, integral_gaps: bool = False
) -> BasicSetReport:
    if missing := [str(row) for row in matrix.rows if row not in f]:
        err = f"The ordering function is undefined on {', '.join(missing)}"
        raise MalformedMatrixError(err)

    violations: list[Violation] = []
    for j, col in enumerate(matrix.cols):
        if matrix.entry(col, col) != 1:
            violations.append(Violation(col, col, "diagonal"))
        for i, row in enumerate(matrix.rows):
            if row == col or matrix.entries[i][j] == 0:
                continue
            if not _precedes(Fraction(f[col]), Fraction(f[row]), integral_gaps=integral_gaps):
                violations.append(Violation(row, col, "order"))

    for violation in violations:
        logger.warning("basic set: %s violation at (%s, %s)", violation.reason, violation.row, violation.col)

    return BasicSetReport(
        passed=not violations,
        violations=tuple(violations),
        assumptions=(COMPLETENESS,),
        columns_checked=len(matrix.cols),
    )


def a_function_ordering(
    labels: Iterable[Multipartition], params: ChargeParams
) -> dict[Multipartition, Fraction]:
    return {label: a_function(label, params) for label in labels}


def encode_ordering(f: OrderingFunction, labels: Sequence[Multipartition]) -> dict[str, Any]:
    return {
        "values": [
            {"label": encode_multipartition(label), "value": format_rational(f[label])}
            for label in labels
        ]
    }


def decode_ordering(obj: Any) -> dict[Multipartition, Fraction]:
    if not isinstance(obj, dict) or not isinstance(obj.get("values"), list):
        err = 'An ordering must be an object {"values": [...]}'
        raise DecodeError(err)

    result: dict[Multipartition, Fraction] = {}
    for item in obj["values"]:
        if not isinstance(item, dict) or set(item) != {"label", "value"}:
            err = f'Ordering values need "label" and "value", got {item!r}'
            raise DecodeError(err)
        if not isinstance(item["value"], str):
            err = f'Ordering values must be "p/q" strings, got {item["value"]!r}'
            raise DecodeError(err)
        label = decode_multipartition(item["label"])
        if label in result:
            err = f"Duplicate ordering label {label}"
            raise DecodeError(err)
        result[label] = parse_rational(item["value"])
    return result


def drop_zero_rows(matrix: DecompMatrix) -> DecompMatrix:
    keep = [
        i
        for i, (row, entries) in enumerate(zip(matrix.rows, matrix.entries, strict=True))
        if row in matrix.cols or any(entries)
    ]
    return DecompMatrix(
        tuple(matrix.rows[i] for i in keep),
        matrix.cols,
        tuple(matrix.entries[i] for i in keep),
    )


def predicted_basic_set(n: int, level: int, e: int, s: Sequence[int]) -> frozenset[Multipartition]:
    return uglov_multipartitions(n, level, e, s)
