"""Mechanical verification of the structural results on concrete networks.

``check_axioms`` tests a candidate power measure against the three
characterising properties (normalisation, normality, restricted
proportionality) over a finite family of networks.  ``verify_theorems``
evaluates every provable clause on one network: duality of the successor
representations, the unanimity decomposition, convexity/concavity, the
Shapley and disruption-value identities, Core membership conditions and
the propensity balance.  Clauses whose hypothesis fails are reported as
skipped, never as failures.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .games import (
    BALANCED_PROPENSITY,
    DEFAULT_PLAYER_CAP,
    dual,
    gately,
    harsanyi_dividends,
    in_core,
    is_concave,
    is_convex,
    propensity_to_disrupt,
    shapley,
    shapley_permutation,
    strong_successor_game,
    successor_game,
)
from .measures import (
    PowerGauge,
    beta_measure,
    core_vertices,
    gately_measure,
    is_core_gauge,
    unique_simple_gauge,
)
from .networks import HierNet, classify, partition, principal_restriction

Measure = Callable[[HierNet], Sequence[Fraction]]

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass(frozen=True, slots=True)
class AxiomWitness:
    axiom: str
    net_index: int


@dataclass(frozen=True, slots=True)
class AxiomReport:
    """Pass/fail per axiom over a network family, with the first failure."""

    normalisation: bool
    normality: bool
    restricted_proportionality: bool
    witness: AxiomWitness | None = None

    @property
    def all_pass(self) -> bool:
        return self.normalisation and self.normality and self.restricted_proportionality


def check_axioms(measure: Measure, nets: Sequence[HierNet]) -> AxiomReport:
    """Test the three characterising axioms on every network in ``nets``.

    Normalisation: outputs sum to the dominated-node count.  Normality:
    the output equals the solely-controlled counts plus the output on the
    principal restriction.  Restricted proportionality: on principal
    networks the output is a positive multiple of the out-degree vector
    (vacuous on non-principal networks; two zero vectors are proportional).
    """
    failed: dict[str, int] = {}
    for index, net in enumerate(nets):
        parts = partition(net)
        out = tuple(Fraction(v) for v in measure(net))
        if "normalisation" not in failed:
            if sum(out, Fraction(0)) != parts.dominated_count:
                failed["normalisation"] = index
        if "normality" not in failed:
            restricted = tuple(Fraction(v) for v in measure(principal_restriction(net, parts)))
            expected = tuple(parts.succs_single[i] + restricted[i] for i in range(net.n))
            if out != expected:
                failed["normality"] = index
        if "restricted_proportionality" not in failed and not parts.single_pred:
            if not _positively_proportional(out, parts.succs):
                failed["restricted_proportionality"] = index
    witness = None
    if failed:
        axiom, index = min(failed.items(), key=lambda item: item[1])
        witness = AxiomWitness(axiom=axiom, net_index=index)
    return AxiomReport(
        normalisation="normalisation" not in failed,
        normality="normality" not in failed,
        restricted_proportionality="restricted_proportionality" not in failed,
        witness=witness,
    )


def _positively_proportional(out: tuple[Fraction, ...], degrees: Sequence[int]) -> bool:
    if all(d == 0 for d in degrees):
        return all(v == 0 for v in out)
    pivot = next(i for i, d in enumerate(degrees) if d != 0)
    ratio = out[pivot] / degrees[pivot]
    if ratio <= 0:
        return False
    return all(v == ratio * d for v, d in zip(out, degrees))


@dataclass(frozen=True, slots=True)
class ClauseResult:
    name: str
    status: str
    detail: str = ""


@dataclass(frozen=True, slots=True)
class TheoremReport:
    net: HierNet
    clauses: tuple[ClauseResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.clauses)

    def failures(self) -> tuple[ClauseResult, ...]:
        return tuple(c for c in self.clauses if c.status == FAIL)


def verify_theorems(net: HierNet, cap: int = DEFAULT_PLAYER_CAP) -> TheoremReport:
    """Evaluate every theorem clause on one network."""
    parts = partition(net)
    flags = classify(net, parts)
    weak = successor_game(net, cap)
    strong = strong_successor_game(net, cap)
    beta = beta_measure(net)
    xi = gately_measure(net)
    clauses: list[ClauseResult] = []

    def record(name: str, ok: bool, detail_fail: str = "", detail_pass: str = "") -> None:
        clauses.append(
            ClauseResult(name, PASS if ok else FAIL, detail_pass if ok else detail_fail)
        )

    record(
        "duality",
        dual(weak) == strong and dual(strong) == weak,
        "dual of the successor game differs from the strong successor game",
    )

    expected_dividends: dict[int, int] = {}
    for j in sorted(parts.dominated):
        mask = net.pred_masks[j]
        expected_dividends[mask] = expected_dividends.get(mask, 0) + 1
    dividends = harsanyi_dividends(strong, cap)
    record(
        "unanimity-decomposition",
        all(d == expected_dividends.get(h, 0) for h, d in enumerate(dividends)),
        "dividends of the strong successor game are not the predecessor-set multiset",
    )

    record("convexity", is_convex(strong, cap), "strong successor game is not convex")
    record("concavity", is_concave(weak, cap), "successor game is not concave")

    beta_values = tuple(beta)
    record(
        "shapley-identity",
        tuple(shapley(weak, cap)) == beta_values
        and tuple(shapley(strong, cap)) == beta_values,
        "Shapley values disagree with the closed-form equal-split measure",
    )

    beta_core = in_core(strong, beta.as_imputation(), cap)
    record("beta-core", beta_core, "equal-split gauge violates a Core constraint")

    if flags.simple:
        gauge = unique_simple_gauge(net)
        vertices = core_vertices(net)
        record(
            "simple-unique-core",
            is_core_gauge(net, gauge, cap) and vertices == (gauge,),
            "out-degree gauge is not the unique Core gauge of a simple network",
        )
    else:
        clauses.append(ClauseResult("simple-unique-core", SKIP, "not applicable (not simple)"))

    xi_values = tuple(xi)
    record(
        "gately-identity",
        tuple(gately(weak)) == xi_values and tuple(gately(strong)) == xi_values,
        "disruption-balancing values disagree with the closed-form measure",
    )

    record(
        "propensity-balance",
        _propensities_balanced(weak, xi, parts),
        "propensities to disrupt are not constant over contested controllers",
    )

    xi_core = in_core(strong, xi.as_imputation(), cap)
    active = sum(1 for mask in net.succ_masks if mask)
    if active <= 3:
        record(
            "gately-core-small",
            xi_core,
            "gauge leaves the Core although at most three nodes have successors",
        )
    else:
        clauses.append(
            ClauseResult(
                "gately-core-small", SKIP, "not applicable (more than three nodes have successors)"
            )
        )

    if flags.weakly_regular:
        record(
            "gately-core-weakly-regular",
            xi_core,
            "gauge leaves the Core although the network is weakly regular",
        )
        record(
            "gately-beta-weakly-regular",
            xi_values == beta_values,
            "proportional and equal-split gauges differ on a weakly regular network",
        )
    else:
        detail = "not applicable (not weakly regular)"
        clauses.append(ClauseResult("gately-core-weakly-regular", SKIP, detail))
        clauses.append(ClauseResult("gately-beta-weakly-regular", SKIP, detail))

    if xi_core:
        clauses.append(ClauseResult("gately-core", PASS, "gauge satisfies every Core constraint"))
    elif active > 3 and not flags.weakly_regular:
        clauses.append(
            ClauseResult(
                "gately-core",
                SKIP,
                "fails, as permitted (conditions of the Core theorem not met)",
            )
        )
    else:
        clauses.append(
            ClauseResult("gately-core", FAIL, "gauge leaves the Core despite a covering condition")
        )

    return TheoremReport(net=net, clauses=tuple(clauses))


def _propensities_balanced(weak, xi: PowerGauge, parts) -> bool:
    x = xi.as_imputation()
    contested = [i for i in range(parts.n) if parts.succs_multi[i] > 0]
    values = [propensity_to_disrupt(weak, x, i) for i in contested]
    if len(set(values)) > 1:
        return False
    for i in range(parts.n):
        if parts.succs_multi[i] == 0:
            if propensity_to_disrupt(weak, x, i) is not BALANCED_PROPENSITY:
                return False
    return True


def shapley_oracle_agrees(net: HierNet, cap: int = DEFAULT_PLAYER_CAP) -> bool:
    """Cross-check the dividend Shapley against the permutation average."""
    for game in (successor_game(net, cap), strong_successor_game(net, cap)):
        if tuple(shapley(game, cap)) != tuple(shapley_permutation(game)):
            return False
    return True
