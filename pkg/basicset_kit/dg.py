"""
The DG compatibility condition between two ℓ-partitions.

A node γ of λ may be sent to a node γ' of λ' when

    μ = c(γ) - c(γ') + (ℓ/e)(ϑ(γ') - ϑ(γ))

is a nonnegative integer congruent to c(γ) - c(γ') modulo ℓ. λ and λ' are
DG-compatible when such an assignment exists as a bijection of nodes.
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

from basicset_kit.codec import encode_node, encode_params, format_rational
from basicset_kit.kappa import a_function
from basicset_kit.matching import perfect_matching
from basicset_kit.multipartitions import (
    ChargeParams,
    Multipartition,
    Node,
    charged_content,
    enumerate_multipartitions,
)
from basicset_kit.orders import check_same_shape, precedence_matching
from basicset_kit.sweep import PairOutcome, SweepReport, sweep_pairs

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class DgCertificate:
    pairing: tuple[tuple[Node, Node, int], ...]
    e: int
    s: tuple[int, ...]

    def to_json(self) -> list[list]:
        return [[encode_node(g), encode_node(h), mu] for g, h, mu in self.pairing]


def dg_mu(gamma: Node, gamma_prime: Node, e: int, s: Sequence[int]) -> Fraction:
    level = len(s)
    shift = charged_content(gamma_prime, s) - charged_content(gamma, s)
    return gamma.c - gamma_prime.c + Fraction(level * shift, e)


def dg_edge(gamma: Node, gamma_prime: Node, e: int, s: Sequence[int]) -> int | None:
    mu = dg_mu(gamma, gamma_prime, e, s)
    if mu < 0 or mu.denominator != 1:
        return None
    if (mu.numerator - (gamma.c - gamma_prime.c)) % len(s):
        return None
    return mu.numerator


def _edge(e: int, s: tuple[int, ...], gamma: Node, gamma_prime: Node) -> int | None:
    return dg_edge(gamma, gamma_prime, e, s)


def dg_compatible(
    lam: Multipartition, lam_prime: Multipartition, e: int, s: Sequence[int]
) -> DgCertificate | None:
    check_same_shape(lam, lam_prime)
    s = tuple(s)
    pairs = perfect_matching(lam.nodes(), lam_prime.nodes(), partial(_edge, e, s))
    return None if pairs is None else DgCertificate(tuple(pairs), e, s)


def _dg_order_outcome(
    params: ChargeParams,
    a_values: Mapping[Multipartition, Fraction],
    left: Multipartition,
    right: Multipartition,
) -> PairOutcome:
    certificate = dg_compatible(left, right, params.e, params.s)
    if certificate is None:
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
            "pairing": certificate.to_json(),
        },
    )


def check_theorem_5_6(
    n: int, level: int, params: ChargeParams, *, jobs: int = 1
) -> SweepReport:
    labels = enumerate_multipartitions(n, level, "partition")
    a_values = {mp: a_function(mp, params) for mp in labels}
    return sweep_pairs(
        "check-thm56",
        {"n": n, "level": level, "kind": "partition", **encode_params(params)},
        labels,
        partial(_dg_order_outcome, params, a_values),
        jobs=jobs,
    )


def _dg_precedence_outcome(
    params: ChargeParams, left: Multipartition, right: Multipartition
) -> PairOutcome:
    certificate = dg_compatible(left, right, params.e, params.s)
    if certificate is None:
        return PairOutcome()
    if precedence_matching(left, right, params) is not None:
        return PairOutcome(matched=True, asserted=1)
    return PairOutcome(
        matched=True, asserted=1, violated=True, detail={"pairing": certificate.to_json()}
    )


def check_dg_implies_precedence(
    n: int, level: int, params: ChargeParams, *, jobs: int = 1
) -> SweepReport:
    labels = enumerate_multipartitions(n, level, "partition")
    return sweep_pairs(
        "check-dg-precedence",
        {"n": n, "level": level, "kind": "partition", **encode_params(params)},
        labels,
        partial(_dg_precedence_outcome, params),
        jobs=jobs,
    )
