"""
Shifted β-sequences, the statistics n_t and a_t, and generalized dominance.

For an ℓ-composition λ, a positive integer z and a truncation length r, each
component i contributes the r + ⌊t_i⌋ numbers

    λ^(i)_k - k + t_i + z        (1 <= k <= r + ⌊t_i⌋, parts past the end are 0)

and κ_t(λ) is the union of these multisets sorted in descending order. Then

    n_t(λ) = Σ_k (k - 1) κ_k(λ)        a_t(λ) = n_t(λ) - n_t(∅)

with both terms computed on the same (z, r).
"""

import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import partial
from itertools import accumulate

from basicset_kit import KitError
from basicset_kit.codec import (
    encode_multipartition,
    encode_node,
    encode_params,
    format_rational,
)
from basicset_kit.multipartitions import (
    ChargeParams,
    Kind,
    Multipartition,
    SizeMismatchError,
    composition_addable_nodes,
    enumerate_multipartitions,
    eta,
)
from basicset_kit.sweep import PairOutcome, SweepReport, sweep_labels, sweep_pairs


class TruncationError(KitError):
    pass


class IncomparableKappaError(KitError):
    pass


class Dominance(Enum):
    STRICTLY_DOMINATED = "strictly_dominated"
    EQUAL = "equal"
    STRICTLY_DOMINATES = "strictly_dominates"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True, slots=True)
class Truncation:
    z: int
    r: int


@dataclass(frozen=True, slots=True)
class KappaSequence:
    entries: tuple[Fraction, ...]
    truncation: Truncation
    charge: ChargeParams

    def comparable_with(self, other: "KappaSequence") -> bool:
        return self.truncation == other.truncation and self.charge.t == other.charge.t


def _check_level(mp: Multipartition, params: ChargeParams) -> None:
    if mp.level != params.level:
        err = f"{mp} has level {mp.level} but the charge has level {params.level}"
        raise SizeMismatchError(err)


def minimal_truncation(mps: Iterable[Multipartition], params: ChargeParams) -> Truncation:
    mps = tuple(mps)
    for mp in mps:
        _check_level(mp, params)

    n = max((mp.size for mp in mps), default=0)
    floors = [math.floor(ti) for ti in params.t]
    z = max(1, math.ceil(n + 1 - min(params.t)))
    r = max(
        [
            n,
            *(-floor for floor in floors),
            *(
                len(component) - floor
                for mp in mps
                for component, floor in zip(mp.components, floors, strict=True)
            ),
        ]
    )
    return Truncation(z, r)


def kappa_sequence(mp: Multipartition, params: ChargeParams, z: int, r: int) -> KappaSequence:
    _check_level(mp, params)

    n = mp.size
    if z < 1 or z < n + 1 - min(params.t):
        err = f"z={z} must be a positive integer >= n + 1 - min(t) = {n + 1 - min(params.t)}"
        raise TruncationError(err)
    if r < n:
        err = f"r={r} must be at least n={n}"
        raise TruncationError(err)

    entries: list[Fraction] = []
    for i, (component, ti) in enumerate(zip(mp.components, params.t, strict=True)):
        count = r + math.floor(ti)
        if count < len(component):
            err = (
                f"r={r} too small for component {i}: r + floor(t_{i}) = {count} "
                f"< {len(component)} parts"
            )
            raise TruncationError(err)
        entries.extend(mp.part(i, k) - k + ti + z for k in range(1, count + 1))

    entries.sort(reverse=True)
    return KappaSequence(tuple(entries), Truncation(z, r), params)


def kappa_family(
    mps: Iterable[Multipartition], params: ChargeParams
) -> dict[Multipartition, KappaSequence]:
    mps = tuple(mps)
    truncation = minimal_truncation(mps, params)
    return {mp: kappa_sequence(mp, params, truncation.z, truncation.r) for mp in mps}


def n_stat(kappa: KappaSequence) -> Fraction:
    return sum(
        (index * entry for index, entry in enumerate(kappa.entries)), Fraction(0)
    )


def a_function(
    mp: Multipartition, params: ChargeParams, truncation: Truncation | None = None
) -> Fraction:
    truncation = truncation or minimal_truncation([mp], params)
    empty = Multipartition.empty(mp.level)
    z, r = truncation.z, truncation.r
    return n_stat(kappa_sequence(mp, params, z, r)) - n_stat(
        kappa_sequence(empty, params, z, r)
    )


def dominates(first: KappaSequence, second: KappaSequence) -> Dominance:
    if not first.comparable_with(second):
        err = (
            f"κ sequences built with different parameters: "
            f"{first.truncation}, t={first.charge.t} vs "
            f"{second.truncation}, t={second.charge.t}"
        )
        raise IncomparableKappaError(err)

    if first.entries == second.entries:
        return Dominance.EQUAL

    pairs = list(zip(accumulate(first.entries), accumulate(second.entries), strict=True))
    if all(x <= y for x, y in pairs):
        return Dominance.STRICTLY_DOMINATED
    if all(x >= y for x, y in pairs):
        return Dominance.STRICTLY_DOMINATES
    return Dominance.INCOMPARABLE


def _parameters(n: int, level: int, params: ChargeParams, kind: Kind) -> dict:
    return {"n": n, "level": level, "kind": kind, **encode_params(params)}


ENLARGEMENTS = ((1, 0), (0, 1), (3, 2), (2, 5), (7, 7))


def _independence_outcome(
    params: ChargeParams, extra: int, mp: Multipartition
) -> PairOutcome:
    base = minimal_truncation([mp], params)
    truncations = [base] + [
        Truncation(base.z + dz, base.r + dr) for dz, dr in ENLARGEMENTS[:extra]
    ]
    values = [a_function(mp, params, truncation) for truncation in truncations]
    if len(set(values)) == 1:
        return PairOutcome(matched=True, asserted=len(values))
    return PairOutcome(
        matched=True,
        asserted=len(values),
        violated=True,
        detail={
            "truncations": [[t.z, t.r] for t in truncations],
            "values": [format_rational(v) for v in values],
        },
    )


def check_truncation_independence(
    n: int,
    level: int,
    params: ChargeParams,
    kind: Kind = "partition",
    extra: int = 3,
) -> SweepReport:
    labels = enumerate_multipartitions(n, level, kind)
    return sweep_labels(
        "truncation-independence",
        _parameters(n, level, params, kind) | {"extra": extra},
        labels,
        partial(_independence_outcome, params, extra),
    )


def _monotonicity_outcome(
    kappas: Mapping[Multipartition, KappaSequence],
    a_values: Mapping[Multipartition, Fraction],
    left: Multipartition,
    right: Multipartition,
) -> PairOutcome:
    if dominates(kappas[left], kappas[right]) is not Dominance.STRICTLY_DOMINATED:
        return PairOutcome()
    if a_values[left] > a_values[right]:
        return PairOutcome(matched=True, asserted=1)
    return PairOutcome(
        matched=True,
        asserted=1,
        violated=True,
        detail={
            "a_left": format_rational(a_values[left]),
            "a_right": format_rational(a_values[right]),
        },
    )


def check_dominance_monotonicity(
    n: int,
    level: int,
    params: ChargeParams,
    kind: Kind = "composition",
    *,
    jobs: int = 1,
) -> SweepReport:
    labels = enumerate_multipartitions(n, level, kind)
    kappas = kappa_family(labels, params)
    a_values = {mp: a_function(mp, params) for mp in labels}
    return sweep_pairs(
        "dominance-monotonicity",
        _parameters(n, level, params, kind),
        labels,
        partial(_monotonicity_outcome, kappas, a_values),
        jobs=jobs,
    )


def _node_addition_outcome(
    params: ChargeParams,
    kappas: Mapping[Multipartition, KappaSequence],
    left: Multipartition,
    right: Multipartition,
) -> PairOutcome:
    if dominates(kappas[left], kappas[right]) not in (
        Dominance.STRICTLY_DOMINATED,
        Dominance.EQUAL,
    ):
        return PairOutcome()

    asserted = 0
    for beta in composition_addable_nodes(left):
        for beta_prime in composition_addable_nodes(right):
            if not eta(beta, params) < eta(beta_prime, params):
                continue
            asserted += 1
            grown, grown_prime = left.add_node(beta), right.add_node(beta_prime)
            relation = dominates(kappas[grown], kappas[grown_prime])
            if relation is not Dominance.STRICTLY_DOMINATED:
                return PairOutcome(
                    matched=True,
                    asserted=asserted,
                    violated=True,
                    detail={
                        "beta": encode_node(beta),
                        "beta_prime": encode_node(beta_prime),
                        "relation": relation.value,
                    },
                )
    return PairOutcome(matched=True, asserted=asserted)


def check_node_addition(
    m: int, level: int, params: ChargeParams, *, jobs: int = 1
) -> SweepReport:
    """κ(μ) ⊴ κ(μ') and η(β) < η(β') must give κ(μ+β) ◁ κ(μ'+β')."""
    labels = enumerate_multipartitions(m, level, "composition")
    grown = enumerate_multipartitions(m + 1, level, "composition")
    kappas = kappa_family((*labels, *grown), params)
    return sweep_pairs(
        "node-addition",
        _parameters(m, level, params, "composition"),
        labels,
        partial(_node_addition_outcome, params, kappas),
        jobs=jobs,
    )


def a_table(
    n: int, level: int, params: ChargeParams, kind: Kind = "partition"
) -> list[tuple[Multipartition, Fraction]]:
    return [(mp, a_function(mp, params)) for mp in enumerate_multipartitions(n, level, kind)]


def kappa_summary(mp: Multipartition, params: ChargeParams) -> dict:
    truncation = minimal_truncation([mp], params)
    kappa = kappa_sequence(mp, params, truncation.z, truncation.r)
    return {
        "multipartition": encode_multipartition(mp),
        "z": truncation.z,
        "r": truncation.r,
        "entries": [format_rational(entry) for entry in kappa.entries],
        "n_t": format_rational(n_stat(kappa)),
        "a_t": format_rational(a_function(mp, params, truncation)),
    }

