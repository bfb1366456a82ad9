import json
import re
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from basicset_kit import KitError
from basicset_kit.multipartitions import (
    ChargeParams,
    InvalidMultipartitionError,
    InvalidNodeError,
    Multipartition,
    Node,
)


class DecodeError(KitError):
    pass


@dataclass(eq=False, frozen=True, slots=True)
class Failure:
    index: int
    error: Any


@dataclass(eq=False, frozen=True, slots=True)
class Success:
    index: int
    value: Any


State = Failure | Success
Parser = Callable[[int, str], State]


def eof() -> Parser:
    def parser(index: int, actual: str) -> State:
        if index >= len(actual):
            return Success(index, None)
        return Failure(index, "EOF")

    return parser


def literal(expected: str) -> Parser:
    def parser(index: int, actual: str) -> State:
        if actual.startswith(expected, index):
            return Success(index + len(expected), expected)
        return Failure(index, expected)

    return parser


def pattern(expected: str, groups: int | Iterable[int] = 0) -> Parser:
    compiled = re.compile(expected)
    if isinstance(groups, int):
        groups = (groups,)
    groups = tuple(groups)

    def parser(index: int, actual: str) -> State:
        match = compiled.match(actual, index)
        if match:
            return Success(match.end(), match.group(*groups))
        return Failure(index, expected)

    return parser


def sequence(*, of: list[Parser]) -> Parser:
    def parser(index: int, actual: str) -> State:
        values: list[Any] = []
        for p in of:
            match p(index, actual):
                case Success(next_index, value):
                    index = next_index
                    values.append(value)
                case Failure() as failure:
                    return failure
        return Success(index, values)

    return parser


def map(a: Parser, fn: Callable[[Any], Any]) -> Parser:  # noqa: A001
    def parser(index: int, actual: str) -> State:
        match a(index, actual):
            case Failure() as failure:
                return failure
            case Success(next_index, value):
                return Success(next_index, fn(value))

    return parser


def array0(*, of: Parser, separator: Parser) -> Parser:
    def parser(index: int, actual: str) -> State:
        values: list[Any] = []
        match of(index, actual):
            case Failure():
                return Success(index, values)
            case Success(next_index, value):
                index = next_index
                values.append(value)

        while True:
            match sequence(of=[separator, of])(index, actual):
                case Failure():
                    return Success(index, values)
                case Success(next_index, (_, value)):
                    index = next_index
                    values.append(value)

    return parser


def token(a: Parser) -> Parser:
    spaces = pattern(r"\s*")
    return map(sequence(of=[spaces, a, spaces]), lambda items: items[1])


def run(parser: Parser, text: str, what: str) -> Any:
    match sequence(of=[parser, eof()])(0, text):
        case Success(_, (value, _)):
            return value
        case Failure(index, error):
            err = f"Invalid {what} {text!r}: expected {error!r} at offset {index}"
            raise DecodeError(err)


def _to_fraction(groups: tuple[str, str | None]) -> Fraction | None:
    numerator, denominator = groups
    if denominator is not None and int(denominator) == 0:
        return None
    return Fraction(int(numerator), int(denominator or 1))


RATIONAL = map(pattern(r"(-?\d+)(?:/(\d+))?", groups=(1, 2)), _to_fraction)
INTEGER = map(token(pattern(r"\d+")), int)
COMMA = token(literal(","))
COMPONENT = map(
    sequence(of=[token(literal("(")), array0(of=INTEGER, separator=COMMA), token(literal(")"))]),
    lambda items: tuple(items[1]),
)
MULTIPARTITION = map(
    sequence(of=[token(literal("(")), array0(of=COMPONENT, separator=COMMA), token(literal(")"))]),
    lambda items: tuple(items[1]),
)


def parse_rational(text: str) -> Fraction:
    value = run(RATIONAL, text.strip(), "rational")
    if value is None:
        err = f"Invalid rational {text!r}: zero denominator"
        raise DecodeError(err)
    return value


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_multipartition(text: str) -> Multipartition:
    text = text.strip()
    if text.startswith("["):
        try:
            return decode_multipartition(json.loads(text))
        except json.JSONDecodeError as exc:
            err = f"Invalid multipartition {text!r}: {exc}"
            raise DecodeError(err) from exc

    components = run(MULTIPARTITION, text, "multipartition")
    try:
        return Multipartition(components)
    except InvalidMultipartitionError as exc:
        raise DecodeError(str(exc)) from exc


def encode_multipartition(mp: Multipartition) -> list[list[int]]:
    return [list(component) for component in mp.components]


def decode_multipartition(obj: Any) -> Multipartition:
    if not isinstance(obj, list) or not all(isinstance(c, list) for c in obj):
        err = f"A multipartition must be an array of arrays, got {obj!r}"
        raise DecodeError(err)
    if not all(_is_int(part) for component in obj for part in component):
        err = f"Multipartition parts must be integers, got {obj!r}"
        raise DecodeError(err)
    try:
        return Multipartition(tuple(tuple(component) for component in obj))
    except InvalidMultipartitionError as exc:
        raise DecodeError(str(exc)) from exc


def encode_node(node: Node) -> list[int]:
    return [node.a, node.b, node.c]


def decode_node(obj: Any) -> Node:
    if not isinstance(obj, list) or len(obj) != 3 or not all(_is_int(x) for x in obj):  # noqa: PLR2004
        err = f"A node must be an array [a,b,c] of integers, got {obj!r}"
        raise DecodeError(err)
    try:
        return Node(*obj)
    except InvalidNodeError as exc:
        raise DecodeError(str(exc)) from exc


def encode_params(params: ChargeParams) -> dict[str, Any]:
    return {
        "e": params.e,
        "s": list(params.s),
        "u": [format_rational(uj) for uj in params.u],
    }


def decode_params(obj: Any) -> ChargeParams:
    if not isinstance(obj, dict) or set(obj) != {"e", "s", "u"}:
        err = f'Charge params must be an object with keys "e", "s" and "u", got {obj!r}'
        raise DecodeError(err)
    if not isinstance(obj["s"], list) or not isinstance(obj["u"], list):
        err = f"s and u must be arrays, got {obj!r}"
        raise DecodeError(err)
    if not _is_int(obj["e"]) or not all(_is_int(sj) for sj in obj["s"]):
        err = f"e and s must be integers, got {obj!r}"
        raise DecodeError(err)
    if not all(isinstance(uj, str) for uj in obj["u"]):
        err = f'u must be a list of "p/q" strings, got {obj["u"]!r}'
        raise DecodeError(err)
    u = tuple(parse_rational(uj) for uj in obj["u"])
    return ChargeParams(e=obj["e"], s=tuple(obj["s"]), u=u)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def assert_failure(state: State, index: int, error: Any):
    assert isinstance(state, Failure)
    assert state.index == index
    assert state.error == error


def assert_success(state: State, index: int, value: Any):
    assert isinstance(state, Success)
    assert state.index == index
    assert state.value == value
