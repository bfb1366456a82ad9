import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

from basicset_kit import KitError
from basicset_kit.multipartitions import (
    InadmissibleChargeError,
    InvalidMultipartitionError,
    Multipartition,
    Node,
    SizeMismatchError,
    canonical_key,
    charged_content,
)

logger = logging.getLogger(__name__)

Mark = Literal["addable", "removable"]
Path = tuple[tuple[int, Node], ...]


class InvalidPathError(KitError):
    pass


@dataclass(frozen=True, slots=True)
class ResidueNode:
    node: Node
    residue: int


@dataclass(frozen=True, slots=True)
class Signature:
    residue: int
    entries: tuple[tuple[ResidueNode, Mark], ...]
    reduced: tuple[tuple[ResidueNode, Mark], ...]
    good: Node | None


def _check_partition(lam: Multipartition) -> None:
    if not lam.is_partition:
        err = f"{lam} is not an ℓ-partition"
        raise InvalidMultipartitionError(err)


def _check_e(e: int) -> None:
    if isinstance(e, bool) or not isinstance(e, int) or e < 1:
        err = f"e must be a positive integer, got {e!r}"
        raise InadmissibleChargeError(err)


def _check_charge(lam: Multipartition, e: int, s: Sequence[int]) -> None:
    if lam.level != len(s):
        err = f"{lam} has level {lam.level} but the charge has level {len(s)}"
        raise SizeMismatchError(err)
    _check_e(e)


def addable_nodes(lam: Multipartition) -> tuple[Node, ...]:
    _check_partition(lam)
    return tuple(
        Node(a, lam.part(c, a) + 1, c)
        for c, component in enumerate(lam.components)
        for a in range(1, len(component) + 2)
        if a == 1 or lam.part(c, a) < lam.part(c, a - 1)
    )


def removable_nodes(lam: Multipartition) -> tuple[Node, ...]:
    _check_partition(lam)
    return tuple(
        Node(a, length, c)
        for c, component in enumerate(lam.components)
        for a, length in enumerate(component, 1)
        if length > lam.part(c, a + 1)
    )


def _precedence_key(node: Node, s: Sequence[int]) -> tuple[int, int]:
    return charged_content(node, s), -node.c


def _reduce(entries: Sequence[tuple[ResidueNode, Mark]]) -> tuple[tuple[ResidueNode, Mark], ...]:
    stack: list[tuple[ResidueNode, Mark]] = []
    for entry in entries:
        if entry[1] == "addable" and stack and stack[-1][1] == "removable":
            stack.pop()
        else:
            stack.append(entry)
    return tuple(stack)


def signature(lam: Multipartition, i: int, e: int, s: Sequence[int]) -> Signature:
    _check_charge(lam, e, s)
    i %= e

    marked: list[tuple[Node, Mark]] = [
        *((node, "addable") for node in addable_nodes(lam)),
        *((node, "removable") for node in removable_nodes(lam)),
    ]
    marked = [(node, mark) for node, mark in marked if charged_content(node, s) % e == i]
    marked.sort(key=lambda item: _precedence_key(item[0], s))

    keys = [_precedence_key(node, s) for node, _ in marked]
    assert len(set(keys)) == len(keys), f"tied {i}-nodes in {lam}"

    entries = tuple((ResidueNode(node, i), mark) for node, mark in marked)
    reduced = _reduce(entries)
    addables = [entry.node for entry, mark in reduced if mark == "addable"]
    return Signature(i, entries, reduced, addables[-1] if addables else None)


def good_node(lam: Multipartition, i: int, e: int, s: Sequence[int]) -> Node | None:
    return signature(lam, i, e, s).good


def uglov_paths(n: int, level: int, e: int, s: Sequence[int]) -> dict[Multipartition, Path]:
    if n < 0 or level != len(s):
        err = f"Need n >= 0 and level = len(s), got n={n}, level={level}, s={tuple(s)}"
        raise SizeMismatchError(err)
    _check_e(e)

    frontier: dict[Multipartition, Path] = {Multipartition.empty(level): ()}
    for size in range(n):
        grown: dict[Multipartition, Path] = {}
        for lam in sorted(frontier, key=canonical_key):
            for i in range(e):
                node = good_node(lam, i, e, s)
                if node is None:
                    continue
                child = lam.add_node(node, "partition")
                grown.setdefault(child, (*frontier[lam], (i, node)))
        logger.debug("size %d: %d Uglov multipartitions", size + 1, len(grown))
        frontier = grown

    return {lam: frontier[lam] for lam in sorted(frontier, key=canonical_key)}


def uglov_multipartitions(n: int, level: int, e: int, s: Sequence[int]) -> frozenset[Multipartition]:
    return frozenset(uglov_paths(n, level, e, s))


def replay_path(path: Path, level: int, e: int, s: Sequence[int]) -> Multipartition:
    lam = Multipartition.empty(level)
    for step, (i, node) in enumerate(path):
        good = good_node(lam, i, e, s)
        if good != node:
            err = f"Step {step} of the path adds {node} but the good {i}-node of {lam} is {good}"
            raise InvalidPathError(err)
        lam = lam.add_node(node, "partition")
    return lam
