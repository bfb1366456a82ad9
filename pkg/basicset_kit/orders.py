"""
Node precedence and the precedence matching between node sets.

    γ ≺ γ'  iff  ϑ(γ) < ϑ(γ')  or  (ϑ(γ) = ϑ(γ') and c(γ) > c(γ'))

Two ℓ-compositions λ, λ' of the same size are precedence-matched when the
nodes of λ can be paired bijectively with the nodes of λ' so that every pair
is either identical or γ ≺ γ'.
"""

import logging
import random
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Literal

from basicset_kit.codec import encode_node, encode_params, format_rational
from basicset_kit.kappa import a_function
from basicset_kit.matching import perfect_matching
from basicset_kit.multipartitions import (
    ChargeParams,
    Kind,
    Multipartition,
    Node,
    SizeMismatchError,
    enumerate_multipartitions,
    theta,
)
from basicset_kit.sweep import Counterexample, PairOutcome, SweepReport, sweep_pairs

logger = logging.getLogger(__name__)

Relation = Literal["equal", "strictly_precedes"]


@dataclass(frozen=True, slots=True)
class NodePairing:
    pairs: tuple[tuple[Node, Node, Relation], ...]

    def to_json(self) -> list[list]:
        return [[encode_node(g), encode_node(h), relation] for g, h, relation in self.pairs]


def precedes(gamma: Node, gamma_prime: Node, params: ChargeParams) -> bool:
    first, second = theta(gamma, params), theta(gamma_prime, params)
    return first < second or (first == second and gamma.c > gamma_prime.c)


def check_same_shape(lam: Multipartition, lam_prime: Multipartition) -> None:
    if lam.size != lam_prime.size or lam.level != lam_prime.level:
        err = (
            f"Need equal sizes and levels, got {lam} (n={lam.size}, level={lam.level}) "
            f"and {lam_prime} (n={lam_prime.size}, level={lam_prime.level})"
        )
        raise SizeMismatchError(err)


def _precedence_edge(params: ChargeParams, gamma: Node, gamma_prime: Node) -> Relation | None:
    if gamma == gamma_prime:
        return "equal"
    if precedes(gamma, gamma_prime, params):
        return "strictly_precedes"
    return None


def precedence_matching(
    lam: Multipartition, lam_prime: Multipartition, params: ChargeParams
) -> NodePairing | None:
    check_same_shape(lam, lam_prime)
    pairs = perfect_matching(
        lam.nodes(), lam_prime.nodes(), partial(_precedence_edge, params)
    )
    return None if pairs is None else NodePairing(tuple(pairs))


def precedence_raises_eta(params: ChargeParams) -> bool:
    """γ ≺ γ' implies η(γ) < η(γ') for all nodes iff u_{ℓ-1} - u_0 < 1."""
    return params.u[-1] - params.u[0] < 1


def _prop_5_4_outcome(
    params: ChargeParams,
    a_values: Mapping[Multipartition, Fraction],
    left: Multipartition,
    right: Multipartition,
) -> PairOutcome:
    pairing = precedence_matching(left, right, params)
    if pairing is None:
        return PairOutcome()
    if left == right or a_values[left] > a_values[right]:
        return PairOutcome(matched=True, asserted=1)
    return PairOutcome(
        matched=True,
        asserted=1,
        violated=True,
        detail={
            "a_left": format_rational(a_values[left]),
            "a_right": format_rational(a_values[right]),
            "pairing": pairing.to_json(),
        },
    )


def check_prop_5_4(
    n: int,
    level: int,
    params: ChargeParams,
    kind: Kind = "composition",
    *,
    jobs: int = 1,
) -> SweepReport:
    notes = []
    if not precedence_raises_eta(params):
        notes.append(
            "u_{l-1} - u_0 >= 1: a precedence pair may lower eta, "
            "so counterexamples are possible for these parameters"
        )
        logger.warning("check-prop54: %s", notes[-1])

    labels = enumerate_multipartitions(n, level, kind)
    a_values = {mp: a_function(mp, params) for mp in labels}
    return sweep_pairs(
        "check-prop54",
        {"n": n, "level": level, "kind": kind, **encode_params(params)},
        labels,
        partial(_prop_5_4_outcome, params, a_values),
        jobs=jobs,
        notes=notes,
    )


def _random_node(rng: random.Random, level: int, bound: int) -> Node:
    return Node(rng.randint(1, bound), rng.randint(1, bound), rng.randrange(level))


def check_order_axioms(
    params: ChargeParams, samples: int = 1000, seed: int = 0, bound: int = 5
) -> SweepReport:
    rng = random.Random(seed)  # noqa: S311
    counterexamples: list[Counterexample] = []
    matched = 0

    for _ in range(samples):
        x, y, z = (_random_node(rng, params.level, bound) for _ in range(3))
        if precedes(x, x, params):
            counterexamples.append(_order_failure("irreflexive", params, x))
        if precedes(x, y, params) and precedes(y, z, params):
            matched += 1
            if not precedes(x, z, params):
                counterexamples.append(_order_failure("transitive", params, x, y, z))

    report = SweepReport(
        check="check-order",
        parameters={"samples": samples, "seed": seed, "bound": bound, **encode_params(params)},
        tested=samples,
        matched=matched,
        asserted=samples + matched,
        counterexamples=tuple(counterexamples),
    )
    logger.info(report.summary())
    return report


def _order_failure(axiom: str, params: ChargeParams, *nodes: Node) -> Counterexample:
    empty = Multipartition.empty(params.level)
    return Counterexample(
        empty, empty, {"axiom": axiom, "nodes": [encode_node(node) for node in nodes]}
    )
