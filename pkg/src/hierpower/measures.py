"""Closed-form power measures and Core diagnostics for hierarchical networks.

A power gauge distributes the number of dominated nodes over the whole
node set.  The measures here differ in how they hand out control over
contested (multi-predecessor) nodes: per-edge equal split, proportional
to contested out-degree, equal among controllers, proportional to raw
out-degree, or raw out-degree itself (which is not a gauge at all).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coalitions import Coalition, members
from .errors import AllocatorError, GaugeError
from .games import (
    DEFAULT_PLAYER_CAP,
    Imputation,
    find_core_violation,
    strong_successor_game,
)
from .networks import (
    DEFAULT_SUBNETWORK_CAP,
    HierNet,
    NodePartition,
    partition,
    simple_subnetworks,
)
from .rationals import as_exact


@dataclass(frozen=True, slots=True)
class PowerGauge:
    """Nonnegative node weights summing to the number of dominated nodes."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(Fraction(as_exact(v)) for v in self.values))

    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def check(self, parts: NodePartition) -> PowerGauge:
        """Raise :class:`GaugeError` unless the gauge invariants hold."""
        if len(self.values) != parts.n:
            raise GaugeError(f"gauge has {len(self.values)} entries for {parts.n} nodes")
        for i, v in enumerate(self.values):
            if v < 0:
                raise GaugeError(f"negative weight {v} at node {i}")
        if self.total() != parts.dominated_count:
            raise GaugeError(
                f"weights sum to {self.total()}, expected {parts.dominated_count}"
            )
        return self

    def as_imputation(self) -> Imputation:
        return Imputation(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]


def beta_measure(net: HierNet) -> PowerGauge:
    """Each dominated node's unit of control split equally among its predecessors.

    Coincides with the Shapley value of both successor representations.
    """
    parts = partition(net)
    values = []
    for i in range(net.n):
        acc = Fraction(0)
        for j in members(net.succ_masks[i]):
            acc += Fraction(1, parts.preds[j])
        values.append(acc)
    return PowerGauge(tuple(values)).check(parts)


def gately_measure(net: HierNet) -> PowerGauge:
    """Full credit for solely-controlled nodes plus a proportional share of
    the contested pool.

    The contested nodes are treated as one collective resource, split in
    proportion to each node's count of contested successors.  Coincides
    with the disruption-balancing value of both successor representations.
    """
    parts = partition(net)
    values = [Fraction(parts.succs_single[i]) for i in range(net.n)]
    pool = parts.multi_pred_total
    if pool:
        share = Fraction(len(parts.multi_pred), pool)
        values = [v + parts.succs_multi[i] * share for i, v in enumerate(values)]
    return PowerGauge(tuple(values)).check(parts)


def proportional_allocator(net: HierNet) -> tuple[Fraction, ...]:
    """Share of the contested pool per node, proportional to contested out-degree.

    Defined only when some node has multiple predecessors; the shares of
    the controlling nodes sum to one.
    """
    parts = partition(net)
    pool = parts.multi_pred_total
    if pool == 0:
        raise AllocatorError("allocator undefined: no node has multiple predecessors")
    return tuple(Fraction(parts.succs_multi[i], pool) for i in range(net.n))


def restricted_egalitarian(net: HierNet) -> PowerGauge:
    """Like the proportional split, but the contested pool is shared equally
    among the nodes that control at least one contested node."""
    parts = partition(net)
    values = [Fraction(parts.succs_single[i]) for i in range(net.n)]
    controllers = [i for i in range(net.n) if parts.succs_multi[i] > 0]
    if controllers:
        share = Fraction(len(parts.multi_pred), len(controllers))
        for i in controllers:
            values[i] += share
    return PowerGauge(tuple(values)).check(parts)


def proportional_measure(net: HierNet) -> PowerGauge:
    """Out-degree vector rescaled to distribute the dominated-node total.

    An edgeless network yields the zero gauge by convention.
    """
    parts = partition(net)
    total = sum(parts.succs)
    if total == 0:
        return PowerGauge(tuple(Fraction(0) for _ in range(net.n))).check(parts)
    scale = Fraction(parts.dominated_count, total)
    return PowerGauge(tuple(s * scale for s in parts.succs)).check(parts)


def degree_measure(net: HierNet) -> tuple[Fraction, ...]:
    """Raw out-degree vector; in general not a power gauge."""
    return tuple(Fraction(mask.bit_count()) for mask in net.succ_masks)


@dataclass(frozen=True, slots=True)
class CoreViolation:
    """A coalition paid less than the number of nodes it fully controls."""

    mask: Coalition
    assigned: Fraction
    required: Fraction

    @property
    def shortfall(self) -> Fraction:
        return self.required - self.assigned


def core_violation(
    net: HierNet, delta: PowerGauge, cap: int = DEFAULT_PLAYER_CAP
) -> CoreViolation | None:
    """First coalition witnessing that ``delta`` is not a Core gauge, if any.

    The gauge is validated first; the Core requirement is checked against
    full control, i.e. the strong successor representation.
    """
    parts = partition(net)
    delta.check(parts)
    game = strong_successor_game(net, cap)
    mask = find_core_violation(game, delta.as_imputation(), cap)
    if mask is None:
        return None
    assigned = sum((delta[i] for i in members(mask)), Fraction(0))
    return CoreViolation(mask=mask, assigned=assigned, required=Fraction(game.worths[mask]))


def is_core_gauge(net: HierNet, delta: PowerGauge, cap: int = DEFAULT_PLAYER_CAP) -> bool:
    """True when every coalition is assigned at least the nodes it fully controls."""
    return core_violation(net, delta, cap) is None


def core_vertices(
    net: HierNet, cap: int = DEFAULT_SUBNETWORK_CAP
) -> tuple[PowerGauge, ...]:
    """Vertices of the set of Core gauges: one out-degree gauge per simple
    subnetwork, deduplicated (distinct subnetworks may tie) and sorted."""
    seen = {
        tuple(Fraction(mask.bit_count()) for mask in sub.succ_masks)
        for sub in simple_subnetworks(net, cap)
    }
    return tuple(PowerGauge(values) for values in sorted(seen))


def unique_simple_gauge(net: HierNet) -> PowerGauge:
    """The out-degree gauge, which for a simple network is the only Core gauge."""
    parts = partition(net)
    return PowerGauge(tuple(Fraction(s) for s in parts.succs)).check(parts)
