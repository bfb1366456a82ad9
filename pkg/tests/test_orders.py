from fractions import Fraction
from functools import partial

import pytest

from basicset_kit.multipartitions import (
    ChargeParams,
    Multipartition,
    Node,
    SizeMismatchError,
    enumerate_multipartitions,
)
from basicset_kit.orders import (
    check_order_axioms,
    check_prop_5_4,
    precedence_matching,
    precedence_raises_eta,
    precedes,
)

from .oracles import has_perfect_matching


def mp(*components: tuple[int, ...]) -> Multipartition:
    return Multipartition(components)


FLAT = ChargeParams.uglov(1, (0, 0))


def test_precedes():
    params = ChargeParams.uglov(2, (0, 2))
    assert precedes(Node(1, 4, 0), Node(1, 4, 1), params)
    assert not precedes(Node(1, 4, 1), Node(1, 4, 0), params)
    assert precedes(Node(1, 3, 1), Node(1, 1, 0), ChargeParams.uglov(2, (0, -2)))
    assert precedes(Node(1, 1, 1), Node(1, 1, 0), FLAT)
    assert not precedes(Node(1, 1, 0), Node(1, 1, 1), FLAT)
    assert not precedes(Node(2, 2, 0), Node(2, 2, 0), FLAT)
    assert not precedes(Node(2, 2, 0), Node(1, 1, 0), FLAT)


def test_precedence_matching():
    lam = mp((2, 1), (1,))
    pairing = precedence_matching(lam, lam, FLAT)
    assert pairing is not None
    assert all(relation == "equal" for _, _, relation in pairing.pairs)
    assert [g for g, _, _ in pairing.pairs] == list(lam.nodes())

    assert precedence_matching(mp((1,), ()), mp((), (1,)), FLAT) is None
    pairing = precedence_matching(mp((), (1,)), mp((1,), ()), FLAT)
    assert pairing is not None
    assert pairing.pairs == ((Node(1, 1, 1), Node(1, 1, 0), "strictly_precedes"),)
    assert pairing.to_json() == [[[1, 1, 1], [1, 1, 0], "strictly_precedes"]]

    with pytest.raises(SizeMismatchError):
        precedence_matching(mp((1,), ()), mp((2,), ()), FLAT)
    with pytest.raises(SizeMismatchError):
        precedence_matching(mp((1,)), mp((1,), ()), FLAT)


def test_precedence_matching_agrees_with_brute_force():
    for e, s in ((2, (0, 1)), (3, (1, 3))):
        for level in (1, 2):
            params = ChargeParams.uglov(e, s[:level])

            def edge(g: Node, h: Node, params: ChargeParams = params) -> bool | None:
                return True if g == h or precedes(g, h, params) else None

            for n in range(5):
                labels = enumerate_multipartitions(n, level, "composition")
                for lam in labels:
                    for lam_prime in labels:
                        found = precedence_matching(lam, lam_prime, params) is not None
                        expected = has_perfect_matching(lam.nodes(), lam_prime.nodes(), edge)
                        assert found == expected, (lam, lam_prime)


def test_precedence_raises_eta():
    assert precedence_raises_eta(FLAT)
    assert precedence_raises_eta(ChargeParams(e=1, s=(0, 0), u=(0, Fraction(5, 6))))
    assert precedence_raises_eta(ChargeParams.uglov(3, (0,)))
    assert not precedence_raises_eta(ChargeParams.uglov(4, (0, 0)))
    assert not precedence_raises_eta(ChargeParams.uglov(2, (0, 0)))


def test_precedence_sweep_empty():
    report = check_prop_5_4(0, 2, FLAT)
    assert report.passed
    assert (report.tested, report.matched) == (1, 1)


NARROW = {
    1: (ChargeParams.uglov(1, (0,)),),
    2: (ChargeParams.uglov(1, (0, 0)), ChargeParams(e=1, s=(0, 0), u=(0, Fraction(5, 6)))),
    3: (
        ChargeParams.uglov(1, (0, 0, 0)),
        ChargeParams(e=1, s=(0, 0, 0), u=(0, Fraction(1, 4), Fraction(5, 6))),
    ),
}


def test_precedence_pairs_order_a():
    for level in (1, 2, 3):
        for params in NARROW[level]:
            for n in range(5):
                report = check_prop_5_4(n, level, params)
                assert report.passed, report.first_counterexample
                assert report.notes == ()

    for params in NARROW[2]:
        for n in (5, 6):
            assert check_prop_5_4(n, 2, params).passed

    for s in ((1, -1), (0, 3)):
        params = ChargeParams(e=1, s=s, u=(0, Fraction(5, 6)))
        assert check_prop_5_4(4, 2, params).passed
        assert check_prop_5_4(3, 2, params, "partition").passed


def test_precedence_sweep_wide_charge_counterexample():
    report = check_prop_5_4(2, 2, ChargeParams.uglov(4, (0, 0)))
    assert not report.passed
    assert report.notes

    found = {(c.left, c.right): c.detail for c in report.counterexamples}
    detail = found[mp((1, 1), ()), mp((1,), (1,))]
    assert detail["a_left"] == "1/1"
    assert detail["a_right"] == "2/1"


def test_precedence_sweep_jobs_do_not_change_the_report():
    params = ChargeParams.uglov(1, (0, 0))
    sweep = partial(check_prop_5_4, 3, 2, params)
    assert sweep(jobs=1).to_json() == sweep(jobs=2).to_json()


def test_order_axioms():
    for params in (FLAT, ChargeParams.uglov(3, (0, 1, 5)), ChargeParams.uglov(4, (0, 0))):
        report = check_order_axioms(params, samples=500, seed=7)
        assert report.passed
        assert report.matched > 0
        assert report.to_json() == check_order_axioms(params, samples=500, seed=7).to_json()
