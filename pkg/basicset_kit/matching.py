from collections import deque
from collections.abc import Callable, Sequence
from typing import Generic, TypeVar

L = TypeVar("L")
R = TypeVar("R")
X = TypeVar("X")


class HopcroftKarp:
    def __init__(self, graph: Sequence[Sequence[int]], right_size: int):
        self.graph = graph
        self.pair_left: list[int | None] = [None] * len(graph)
        self.pair_right: list[int | None] = [None] * right_size
        self.distance: list[int | None] = [None] * len(graph)

    def maximum_matching(self) -> dict[int, int]:
        while self._bfs():
            for left in range(len(self.graph)):
                if self.pair_left[left] is None:
                    self._dfs(left)

        return {
            left: right
            for left, right in enumerate(self.pair_left)
            if right is not None
        }

    def _bfs(self) -> bool:
        queue: deque[int] = deque()
        for left, right in enumerate(self.pair_left):
            if right is None:
                self.distance[left] = 0
                queue.append(left)
            else:
                self.distance[left] = None

        found = False
        while queue:
            left = queue.popleft()
            for right in self.graph[left]:
                other = self.pair_right[right]
                if other is None:
                    found = True
                elif self.distance[other] is None:
                    self.distance[other] = self.distance[left] + 1  # type: ignore[operator]
                    queue.append(other)
        return found

    def _dfs(self, left: int) -> bool:
        for right in self.graph[left]:
            other = self.pair_right[right]
            if other is None or (
                self.distance[other] == self.distance[left] + 1  # type: ignore[operator]
                and self._dfs(other)
            ):
                self.pair_left[left] = right
                self.pair_right[right] = left
                return True

        self.distance[left] = None
        return False


class Bipartite(Generic[L, R, X]):
    def __init__(self, left: Sequence[L], right: Sequence[R], edge: Callable[[L, R], X | None]):
        self.left = left
        self.right = right
        self.labels: dict[tuple[int, int], X] = {}
        self.graph: list[list[int]] = [[] for _ in left]

        for i, lhs in enumerate(left):
            for j, rhs in enumerate(right):
                label = edge(lhs, rhs)
                if label is not None:
                    self.labels[i, j] = label
                    self.graph[i].append(j)

    def perfect_matching(self) -> list[tuple[L, R, X]] | None:
        if len(self.left) != len(self.right):
            return None

        matching = HopcroftKarp(self.graph, len(self.right)).maximum_matching()
        if len(matching) != len(self.left):
            return None

        return [
            (self.left[i], self.right[j], self.labels[i, j])
            for i, j in sorted(matching.items())
        ]


def perfect_matching(
    left: Sequence[L], right: Sequence[R], edge: Callable[[L, R], X | None]
) -> list[tuple[L, R, X]] | None:
    return Bipartite(left, right, edge).perfect_matching()
