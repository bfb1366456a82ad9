import random

from basicset_kit.matching import Bipartite, HopcroftKarp, perfect_matching

from .oracles import has_perfect_matching


def test_hopcroft_karp():
    assert HopcroftKarp([[0, 1], [0]], 2).maximum_matching() == {0: 1, 1: 0}
    assert HopcroftKarp([[0], [0]], 2).maximum_matching() in ({0: 0}, {1: 0})
    assert HopcroftKarp([], 0).maximum_matching() == {}


def test_perfect_matching():
    def edge(x: int, y: str) -> str | None:
        return f"{x}{y}" if y in {1: "ab", 2: "a", 3: "c"}[x] else None

    assert perfect_matching([1, 2, 3], ["a", "b", "c"], edge) == [
        (1, "b", "1b"),
        (2, "a", "2a"),
        (3, "c", "3c"),
    ]
    assert perfect_matching([1, 2], ["a", "b", "c"], edge) is None
    assert perfect_matching([], [], edge) == []


def test_no_perfect_matching():
    graph = Bipartite([1, 2, 3], ["a", "b", "c"], lambda x, y: True if x < 3 and y == "a" else None)
    assert graph.graph == [[0], [0], []]
    assert graph.perfect_matching() is None


def test_agrees_with_brute_force():
    rng = random.Random(20)
    for size in range(5):
        for _ in range(60):
            edges = {(i, j) for i in range(size) for j in range(size) if rng.random() < 0.4}

            def edge(i: int, j: int, edges=edges) -> bool | None:
                return True if (i, j) in edges else None

            left = list(range(size))
            matching = perfect_matching(left, left, edge)
            assert (matching is not None) == has_perfect_matching(left, left, edge)
            if matching is not None:
                assert sorted(j for _, j, _ in matching) == left
                assert all((i, j) in edges for i, j, _ in matching)
