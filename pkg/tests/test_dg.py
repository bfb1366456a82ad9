from fractions import Fraction

import pytest

from basicset_kit.dg import (
    check_dg_implies_precedence,
    check_theorem_5_6,
    dg_compatible,
    dg_edge,
    dg_mu,
)
from basicset_kit.multipartitions import (
    ChargeParams,
    Multipartition,
    Node,
    SizeMismatchError,
    enumerate_multipartitions,
)

from .oracles import has_perfect_matching


def mp(*components: tuple[int, ...]) -> Multipartition:
    return Multipartition(components)


def test_dg_mu():
    assert dg_mu(Node(1, 1, 1), Node(1, 1, 0), 2, (0, 0)) == 1
    assert dg_mu(Node(1, 1, 0), Node(1, 2, 0), 3, (0, 0)) == Fraction(2, 3)
    assert dg_mu(Node(1, 2, 0), Node(1, 1, 0), 2, (0,)) == Fraction(-1, 2)


def test_dg_edge():
    assert dg_edge(Node(1, 1, 1), Node(1, 1, 0), 2, (0, 0)) == 1
    assert dg_edge(Node(1, 1, 0), Node(1, 1, 1), 2, (0, 0)) is None
    assert dg_edge(Node(1, 1, 0), Node(1, 2, 1), 2, (0, 0)) is None
    assert dg_edge(Node(1, 1, 0), Node(1, 3, 1), 2, (0, 0)) == 1
    assert dg_edge(Node(1, 1, 0), Node(1, 2, 0), 3, (0, 0)) is None

    assert dg_edge(Node(1, 1, 0), Node(1, 3, 0), 2, (0,)) == 1
    assert dg_edge(Node(1, 1, 0), Node(1, 2, 0), 2, (0,)) is None
    assert dg_edge(Node(1, 3, 0), Node(1, 1, 0), 2, (0,)) is None

    for node in enumerate_multipartitions(3, 2)[4].nodes():
        assert dg_edge(node, node, 3, (1, 0)) == 0


def test_dg_compatible():
    lam = mp((2, 1), (1,))
    certificate = dg_compatible(lam, lam, 2, (0, 0))
    assert certificate is not None
    assert certificate.e == 2
    assert certificate.s == (0, 0)
    assert all(mu >= 0 for _, _, mu in certificate.pairing)

    certificate = dg_compatible(mp((), (1,)), mp((1,), ()), 2, (0, 0))
    assert certificate is not None
    assert certificate.to_json() == [[[1, 1, 1], [1, 1, 0], 1]]
    assert dg_compatible(mp((1,), ()), mp((), (1,)), 2, (0, 0)) is None

    with pytest.raises(SizeMismatchError):
        dg_compatible(mp((1,), ()), mp((1, 1), ()), 2, (0, 0))


def test_dg_compatible_agrees_with_brute_force():
    for e, s in ((2, (0, 1)), (3, (1, 3))):
        for level in (1, 2):

            def edge(g: Node, h: Node, e: int = e, s: tuple[int, ...] = s[:level]) -> int | None:
                return dg_edge(g, h, e, s)

            for n in range(5):
                labels = enumerate_multipartitions(n, level)
                for lam in labels:
                    for lam_prime in labels:
                        found = dg_compatible(lam, lam_prime, e, s[:level]) is not None
                        expected = has_perfect_matching(lam.nodes(), lam_prime.nodes(), edge)
                        assert found == expected, (lam, lam_prime)


def test_dg_compatible_pairs_order_a():
    for e in (2, 3):
        for s in ((0, 0), (0, 1), (1, 3)):
            for params in (ChargeParams.uglov(e, s), ChargeParams(e=e, s=s, u=(0, Fraction(1, 3)))):
                for n in range(6):
                    report = check_theorem_5_6(n, 2, params)
                    assert report.passed, report.first_counterexample
                assert report.matched >= 36

        for s0 in (0, 1, 3):
            for n in range(6):
                assert check_theorem_5_6(n, 1, ChargeParams.uglov(e, (s0,))).passed

    for params in (
        ChargeParams(e=3, s=(0, 2), u=(0, Fraction(1, 2))),
        ChargeParams(e=2, s=(1, 0), u=(0, Fraction(3, 2))),
    ):
        assert check_theorem_5_6(4, 2, params).passed
    assert check_theorem_5_6(3, 3, ChargeParams.uglov(3, (0, 1, 1))).passed


def test_dg_sweep_jobs_do_not_change_the_report():
    params = ChargeParams.uglov(2, (0, 1))
    assert (
        check_theorem_5_6(3, 2, params, jobs=1).to_json()
        == check_theorem_5_6(3, 2, params, jobs=3).to_json()
    )


def test_dg_implies_precedence():
    for params in (
        ChargeParams.uglov(2, (0, 0)),
        ChargeParams.uglov(4, (0, 0)),
        ChargeParams.uglov(3, (0, 2, 1)),
    ):
        for n in range(5):
            report = check_dg_implies_precedence(n, params.level, params)
            assert report.passed, report.first_counterexample
        assert report.matched > 0
