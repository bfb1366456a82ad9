"""
Multipartitions, their nodes and the node statistics.

A multipartition of level ℓ is a tuple of ℓ integer sequences. Each
sequence is a composition (nonnegative parts) and a partition when it is
weakly decreasing. Nodes are triples (a, b, c) = (row, column, component).

    cont(γ) = b - a
    ϑ(γ)    = cont(γ) + s_c   (charged content)
    η(γ)    = cont(γ) + t_c   (shifted charged content, t = s - u)
"""

from collections.abc import Generator, Iterable, Sequence
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import pairwise, product
from typing import Literal

from basicset_kit import KitError

Kind = Literal["partition", "composition"]


class InvalidMultipartitionError(KitError):
    pass


class InvalidNodeError(KitError):
    pass


class InadmissibleChargeError(KitError):
    pass


class SizeMismatchError(KitError):
    pass


@dataclass(frozen=True, slots=True, order=True)
class Node:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1 or self.c < 0:
            err = f"Invalid node {self}: rows and columns start at 1, components at 0"
            raise InvalidNodeError(err)

    @property
    def content(self) -> int:
        return self.b - self.a

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


@dataclass(frozen=True, slots=True)
class ChargeParams:
    e: int
    s: tuple[int, ...]
    u: tuple[Fraction, ...]

    t: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if isinstance(self.e, bool) or not isinstance(self.e, int) or self.e < 1:
            err = f"e must be a positive integer, got {self.e!r}"
            raise InadmissibleChargeError(err)

        s = tuple(self.s)
        u = tuple(self.u)
        if not s or len(s) != len(u):
            err = f"s and u must have the same positive length, got {len(s)} and {len(u)}"
            raise InadmissibleChargeError(err)
        if not all(_is_int(value) for value in s):
            err = f"s must be integers, got {s!r}"
            raise InadmissibleChargeError(err)
        if not all(_is_int(value) or isinstance(value, Fraction) for value in u):
            err = f"u must be integers or Fractions, got {u!r}"
            raise InadmissibleChargeError(err)
        u = tuple(Fraction(value) for value in u)

        for j in range(len(u)):
            for i in range(j):
                if not 0 < u[j] - u[i] < self.e:
                    err = f"0 < u_j - u_i < e violated at ({i},{j})"
                    raise InadmissibleChargeError(err)

        object.__setattr__(self, "s", s)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "t", tuple(sj - uj for sj, uj in zip(s, u, strict=True)))

    @classmethod
    def uglov(cls, e: int, s: Sequence[int]) -> "ChargeParams":
        level = len(s)
        return cls(e=e, s=tuple(s), u=tuple(Fraction(j * e, level) for j in range(level)))

    @property
    def level(self) -> int:
        return len(self.s)

    def translated(self, k: int) -> "ChargeParams":
        return replace(self, s=tuple(sj + k for sj in self.s))


def _is_int(value: object) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _canonical(parts: Iterable[int]) -> tuple[int, ...]:
    result = tuple(parts)
    for part in result:
        if not _is_int(part) or part < 0:
            err = f"Parts must be nonnegative integers, got {result!r}"
            raise InvalidMultipartitionError(err)

    end = len(result)
    while end and result[end - 1] == 0:
        end -= 1
    return result[:end]


@dataclass(frozen=True, slots=True)
class Multipartition:
    components: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        components = tuple(_canonical(component) for component in self.components)
        if not components:
            err = "A multipartition needs at least one component"
            raise InvalidMultipartitionError(err)
        object.__setattr__(self, "components", components)

    @classmethod
    def empty(cls, level: int) -> "Multipartition":
        return cls(((),) * level)

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(sum(component) for component in self.components)

    @property
    def is_partition(self) -> bool:
        return all(
            x >= y for component in self.components for x, y in pairwise(component)
        )

    def part(self, c: int, a: int) -> int:
        component = self.components[c]
        return component[a - 1] if a <= len(component) else 0

    def nodes(self) -> tuple[Node, ...]:
        return tuple(
            Node(a, b, c)
            for c, component in enumerate(self.components)
            for a, length in enumerate(component, 1)
            for b in range(1, length + 1)
        )

    def __contains__(self, node: object) -> bool:
        if not isinstance(node, Node) or node.c >= self.level:
            return False
        return node.b <= self.part(node.c, node.a)

    def add_node(self, node: Node, kind: Kind = "composition") -> "Multipartition":
        self._check_component(node)
        if node.b != self.part(node.c, node.a) + 1:
            err = f"Node {node} is not addable to {self}"
            raise InvalidMultipartitionError(err)
        return self._with_row(node, +1, kind)

    def remove_node(self, node: Node, kind: Kind = "composition") -> "Multipartition":
        self._check_component(node)
        if node.b != self.part(node.c, node.a):
            err = f"Node {node} is not removable from {self}"
            raise InvalidMultipartitionError(err)
        return self._with_row(node, -1, kind)

    def _check_component(self, node: Node) -> None:
        if node.c >= self.level:
            err = f"Component index {node.c} out of range for level {self.level}"
            raise InvalidNodeError(err)

    def _with_row(self, node: Node, delta: int, kind: Kind) -> "Multipartition":
        parts = list(self.components[node.c])
        parts.extend([0] * (node.a - len(parts)))
        parts[node.a - 1] += delta

        components = list(self.components)
        components[node.c] = tuple(parts)
        result = Multipartition(tuple(components))

        if kind == "partition" and not (self.is_partition and result.is_partition):
            err = f"Moving node {node} of {self} does not give an {self.level}-partition"
            raise InvalidMultipartitionError(err)
        return result

    def __str__(self) -> str:
        inner = ",".join(
            "(" + ",".join(str(part) for part in component) + ")"
            for component in self.components
        )
        return f"({inner})"


def cont(node: Node) -> int:
    return node.content


def charged_content(node: Node, s: Sequence[int]) -> int:
    if node.c >= len(s):
        err = f"Component index {node.c} out of range for level {len(s)}"
        raise InvalidNodeError(err)
    return node.content + s[node.c]


def theta(node: Node, params: ChargeParams) -> int:
    return charged_content(node, params.s)


def eta(node: Node, params: ChargeParams) -> Fraction:
    if node.c >= params.level:
        err = f"Component index {node.c} out of range for level {params.level}"
        raise InvalidNodeError(err)
    return node.content + params.t[node.c]


def composition_addable_nodes(mp: Multipartition) -> tuple[Node, ...]:
    return tuple(
        Node(a, mp.part(c, a) + 1, c)
        for c, component in enumerate(mp.components)
        for a in range(1, len(component) + 2)
    )


def partitions(n: int, largest: int | None = None) -> Generator[tuple[int, ...], None, None]:
    if n == 0:
        yield ()
        return
    for part in range(min(n, n if largest is None else largest), 0, -1):
        for rest in partitions(n - part, part):
            yield (part, *rest)


def compositions(n: int) -> Generator[tuple[int, ...], None, None]:
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in compositions(n - first):
            yield (first, *rest)


def _weak_compositions(n: int, level: int) -> Generator[tuple[int, ...], None, None]:
    if level == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _weak_compositions(n - first, level - 1):
            yield (first, *rest)


def canonical_key(mp: Multipartition) -> tuple[tuple[int, ...], ...]:
    # reverse-lexicographic per component; the trailing 0 sorts a sequence before its prefixes
    return tuple((*(-part for part in component), 0) for component in mp.components)


def enumerate_multipartitions(
    n: int, level: int, kind: Kind = "partition"
) -> tuple[Multipartition, ...]:
    if n < 0 or level < 1:
        err = f"Need n >= 0 and level >= 1, got n={n} and level={level}"
        raise InvalidMultipartitionError(err)

    generate = partitions if kind == "partition" else compositions
    result = [
        Multipartition(components)
        for sizes in _weak_compositions(n, level)
        for components in product(*(tuple(generate(k)) for k in sizes))
    ]
    return tuple(sorted(result, key=canonical_key))
