import argparse
import csv
import io
import json
import logging
import os
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Literal, assert_never

from basicset_kit import SCHEMA, KitError, configure_logging
from basicset_kit.basicset import (
    DecompMatrix,
    MalformedMatrixError,
    a_function_ordering,
    decode_ordering,
    verify_basic_set,
)
from basicset_kit.codec import (
    DecodeError,
    encode_multipartition,
    encode_node,
    format_rational,
    parse_multipartition,
    parse_rational,
)
from basicset_kit.crystal import uglov_paths
from basicset_kit.dg import check_dg_implies_precedence, check_theorem_5_6
from basicset_kit.kappa import (
    a_table,
    check_dominance_monotonicity,
    check_node_addition,
    check_truncation_independence,
    kappa_summary,
)
from basicset_kit.multipartitions import (
    ChargeParams,
    Kind,
    Multipartition,
    SizeMismatchError,
    enumerate_multipartitions,
)
from basicset_kit.orders import check_order_axioms, check_prop_5_4
from basicset_kit.sweep import SweepReport

logger = logging.getLogger(__name__)

OUTPUT_DIR = "BASIC_SET_KIT_OUTPUT_DIR"

Format = Literal["json", "csv", "text"]
KappaCheck = Literal["truncation", "monotonicity", "node-addition"]

EXIT_PASS = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2


@dataclass(frozen=True, slots=True)
class RunConfig:
    command: str
    n: int = 0
    level: int = 1
    e: int = 1
    s: tuple[int, ...] | None = None
    u: tuple[Fraction, ...] | Literal["uglov"] = "uglov"
    kind: Kind | None = None
    fmt: Format = "json"
    jobs: int = 1
    seed: int = 0
    output: Path | None = None
    paths: bool = False
    k: int = 1
    matrix: Path | None = None
    f: str | None = None
    integral: bool = False
    mp: Multipartition | None = None
    check: KappaCheck = "truncation"
    samples: int = 1000

    def charge(self, level: int) -> tuple[int, ...]:
        s = self.s if self.s is not None else (0,) * level
        if len(s) != level:
            err = f"--s has {len(s)} entries but the level is {level}"
            raise SizeMismatchError(err)
        return s

    def params(self, level: int) -> ChargeParams:
        s = self.charge(level)
        if self.u == "uglov":
            return ChargeParams.uglov(self.e, s)
        return ChargeParams(self.e, s, self.u)


@dataclass(frozen=True, slots=True)
class Artifact:
    payload: dict[str, Any]
    header: tuple[str, ...] = ()
    rows: tuple[tuple[str, ...], ...] = ()
    lines: tuple[str, ...] = ()
    status: int = EXIT_PASS

    def render(self, fmt: Format) -> str:
        match fmt:
            case "json":
                return json.dumps(self.payload, indent=2, ensure_ascii=False) + "\n"
            case "csv":
                buffer = io.StringIO()
                writer = csv.writer(buffer, lineterminator="\n")
                writer.writerow(self.header)
                writer.writerows(self.rows)
                return buffer.getvalue()
            case "text":
                lines = self.lines or tuple(" ".join(row) for row in self.rows)
                return "".join(f"{line}\n" for line in lines)
            case _:
                assert_never(fmt)


def _report_artifact(report: SweepReport) -> Artifact:
    rows = tuple((str(c.left), str(c.right)) for c in report.counterexamples)
    return Artifact(
        payload=report.to_json(),
        header=("left", "right"),
        rows=rows,
        lines=(report.summary(), *report.notes, *(f"{left} vs {right}" for left, right in rows)),
        status=EXIT_PASS if report.passed else EXIT_COUNTEREXAMPLE,
    )


def _kind(config: RunConfig, default: Kind) -> Kind:
    return config.kind or default


def do_enumerate(config: RunConfig) -> Artifact:
    kind = _kind(config, "partition")
    labels = enumerate_multipartitions(config.n, config.level, kind)
    return Artifact(
        payload={
            "schema": SCHEMA,
            "command": "enumerate",
            "n": config.n,
            "level": config.level,
            "kind": kind,
            "count": len(labels),
            "multipartitions": [encode_multipartition(mp) for mp in labels],
        },
        header=("multipartition",),
        rows=tuple((str(mp),) for mp in labels),
    )


def do_a_table(config: RunConfig) -> Artifact:
    kind = _kind(config, "partition")
    params = config.params(config.level)
    table = a_table(config.n, config.level, params, kind)
    return Artifact(
        payload={
            "schema": SCHEMA,
            "command": "a-table",
            "n": config.n,
            "level": config.level,
            "kind": kind,
            "e": params.e,
            "s": list(params.s),
            "u": [format_rational(uj) for uj in params.u],
            "rows": [
                {"multipartition": encode_multipartition(mp), "a": format_rational(a)}
                for mp, a in table
            ],
        },
        header=("multipartition", "a"),
        rows=tuple((str(mp), format_rational(a)) for mp, a in table),
    )


def do_kappa(config: RunConfig) -> Artifact:
    if config.mp is None:
        err = "kappa needs --mp"
        raise KitError(err)
    summary = kappa_summary(config.mp, config.params(config.mp.level))
    row = (
        str(config.mp),
        str(summary["z"]),
        str(summary["r"]),
        " ".join(summary["entries"]),
        summary["n_t"],
        summary["a_t"],
    )
    return Artifact(
        payload={"schema": SCHEMA, "command": "kappa", **summary},
        header=("multipartition", "z", "r", "entries", "n_t", "a_t"),
        rows=(row,),
    )


def do_check_kappa(config: RunConfig) -> Artifact:
    params = config.params(config.level)
    match config.check:
        case "truncation":
            report = check_truncation_independence(
                config.n, config.level, params, _kind(config, "partition")
            )
        case "monotonicity":
            report = check_dominance_monotonicity(
                config.n, config.level, params, _kind(config, "composition"), jobs=config.jobs
            )
        case "node-addition":
            report = check_node_addition(config.n, config.level, params, jobs=config.jobs)
        case _:
            assert_never(config.check)
    return _report_artifact(report)


def do_check_prop54(config: RunConfig) -> Artifact:
    params = config.params(config.level)
    return _report_artifact(
        check_prop_5_4(
            config.n, config.level, params, _kind(config, "composition"), jobs=config.jobs
        )
    )


def do_check_thm56(config: RunConfig) -> Artifact:
    params = config.params(config.level)
    return _report_artifact(check_theorem_5_6(config.n, config.level, params, jobs=config.jobs))


def do_check_dg_precedence(config: RunConfig) -> Artifact:
    params = config.params(config.level)
    return _report_artifact(
        check_dg_implies_precedence(config.n, config.level, params, jobs=config.jobs)
    )


def do_check_order(config: RunConfig) -> Artifact:
    params = config.params(config.level)
    return _report_artifact(check_order_axioms(params, config.samples, config.seed))


def do_uglov(config: RunConfig) -> Artifact:
    if config.k != 1:
        err = f"--k {config.k} is not supported, only k = 1 (psi(h_0) = 1/e)"
        raise KitError(err)
    s = config.charge(config.level)

    paths = uglov_paths(config.n, config.level, config.e, s)
    entries: list[dict[str, Any]] = []
    for mp, path in paths.items():
        entry: dict[str, Any] = {"multipartition": encode_multipartition(mp)}
        if config.paths:
            entry["path"] = [[i, encode_node(node)] for i, node in path]
        entries.append(entry)

    rows = tuple(
        (str(mp), " ".join(f"{i}:{node}" for i, node in path)) if config.paths else (str(mp),)
        for mp, path in paths.items()
    )
    return Artifact(
        payload={
            "schema": SCHEMA,
            "command": "uglov",
            "n": config.n,
            "level": config.level,
            "e": config.e,
            "s": list(s),
            "count": len(paths),
            "multipartitions": entries,
        },
        header=("multipartition", "path") if config.paths else ("multipartition",),
        rows=rows,
    )


def _load_json(path: Path) -> Any:
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        err = f"{path} is not valid UTF-8 JSON: {exc}"
        raise DecodeError(err) from exc


def do_verify_basic_set(config: RunConfig) -> Artifact:
    if config.matrix is None or config.f is None:
        err = "verify-basic-set needs --matrix and --f"
        raise KitError(err)

    matrix = DecompMatrix.from_json(_load_json(config.matrix))
    if config.f == "a":
        levels = {row.level for row in matrix.rows}
        if not levels:
            err = "The matrix has no rows, so --f a has no labels to order"
            raise MalformedMatrixError(err)
        if len(levels) != 1:
            err = f"Matrix labels have mixed levels {sorted(levels)}"
            raise SizeMismatchError(err)
        f = a_function_ordering(matrix.rows, config.params(levels.pop()))
    else:
        f = decode_ordering(_load_json(Path(config.f)))

    report = verify_basic_set(matrix, f, integral_gaps=config.integral)
    rows = tuple((str(v.row), str(v.col), v.reason) for v in report.violations)
    verdict = "PASS" if report.passed else "FAIL"
    return Artifact(
        payload=report.to_json(),
        header=("row", "col", "reason"),
        rows=rows,
        lines=(
            f"verify-basic-set: {verdict} (columns={report.columns_checked}, violations={len(rows)})",
            *(" ".join(row) for row in rows),
        ),
        status=EXIT_PASS if report.passed else EXIT_COUNTEREXAMPLE,
    )


COMMANDS: dict[str, Callable[[RunConfig], Artifact]] = {
    "enumerate": do_enumerate,
    "a-table": do_a_table,
    "kappa": do_kappa,
    "check-kappa": do_check_kappa,
    "check-prop54": do_check_prop54,
    "check-thm56": do_check_thm56,
    "check-dg-precedence": do_check_dg_precedence,
    "check-order": do_check_order,
    "uglov": do_uglov,
    "verify-basic-set": do_verify_basic_set,
}


def _destination(output: Path) -> Path:
    directory = os.environ.get(OUTPUT_DIR)
    if directory and output.parent == Path():
        return Path(directory) / output
    return output


def run(config: RunConfig) -> int:
    try:
        artifact = COMMANDS[config.command](config)
        text = artifact.render(config.fmt)
        if config.output is None:
            sys.stdout.write(text)
        else:
            destination = _destination(config.output)
            destination.write_text(text, encoding="utf-8")
            logger.info("wrote %s", destination)
    except (KitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return artifact.status


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except DecodeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _multipartition(text: str) -> Multipartition:
    try:
        return parse_multipartition(text)
    except DecodeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _add_charge(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--e", type=int, default=1)
    parser.add_argument("--s", type=int, nargs="+", default=None)
    parser.add_argument(
        "--u",
        nargs="+",
        default=["uglov"],
        help='"uglov" (u_j = je/l) or one p/q rational per component',
    )


def _add_sweep(parser: argparse.ArgumentParser, *, kinds: bool = True) -> None:
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--level", type=int, required=True)
    if kinds:
        parser.add_argument("--kind", choices=("partition", "composition"), default=None)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="json")
    parser.add_argument("--output", type=Path, default=None)
    parser.add_argument("--jobs", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="basic-set-kit",
        description="Ariki-Koike multipartition combinatorics and basic-set checks",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("enumerate", help="list l-partitions or l-compositions of n")
    _add_sweep(sub)

    sub = commands.add_parser("a-table", help="a_t of every label of size n")
    _add_sweep(sub)
    _add_charge(sub)

    sub = commands.add_parser("kappa", help="kappa_t, n_t and a_t of one multipartition")
    sub.add_argument("--mp", type=_multipartition, required=True)
    _add_charge(sub)

    sub = commands.add_parser("check-kappa", help="sweeps on kappa and a_t")
    sub.add_argument("--check", choices=("truncation", "monotonicity", "node-addition"), default="truncation")
    _add_sweep(sub)
    _add_charge(sub)

    for name, kinds in (("check-prop54", True), ("check-thm56", False), ("check-dg-precedence", False)):
        sub = commands.add_parser(name, help="exhaustive pair sweep")
        _add_sweep(sub, kinds=kinds)
        _add_charge(sub)

    sub = commands.add_parser("check-order", help="random checks of the precedence order axioms")
    sub.add_argument("--level", type=int, required=True)
    sub.add_argument("--samples", type=int, default=1000)
    sub.add_argument("--seed", type=int, default=0)
    _add_charge(sub)

    sub = commands.add_parser("uglov", help="Uglov l-partitions of n")
    _add_sweep(sub, kinds=False)
    sub.add_argument("--e", type=int, required=True)
    sub.add_argument("--s", type=int, nargs="+", default=None)
    sub.add_argument("--paths", action="store_true")
    sub.add_argument("--k", type=int, default=1)

    sub = commands.add_parser("verify-basic-set", help="check a decomposition matrix")
    sub.add_argument("--matrix", type=Path, required=True)
    sub.add_argument("--f", required=True, help='"a" for a_t, or an ordering JSON file')
    sub.add_argument("--integral", action="store_true")
    _add_charge(sub)

    for sub in commands.choices.values():
        _add_common(sub)
    return parser


def _config(parser: argparse.ArgumentParser, args: argparse.Namespace) -> RunConfig:
    values = {
        name: getattr(args, name)
        for name in RunConfig.__dataclass_fields__
        if getattr(args, name, None) is not None
    }

    u = values.pop("u", ["uglov"])
    if u != ["uglov"]:
        try:
            values["u"] = tuple(_rational(text) for text in u)
        except argparse.ArgumentTypeError as exc:
            parser.error(f"argument --u: {exc}")
    if "s" in values:
        values["s"] = tuple(values["s"])
    return RunConfig(**values)


def main(argv: Sequence[str] | None = None) -> int:
    configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(_config(parser, args))
