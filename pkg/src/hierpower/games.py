"""Transferable-utility games over coalitions, with exact arithmetic.

Holds the two successor representations of a network (count of nodes a
coalition partially controls, and of nodes it fully controls), generic
game operations (dual, convexity, Harsanyi dividends, Shapley value),
and the disruption-balancing value with its propensity diagnostics.
All worths are exact rationals; no float ever enters a computation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .coalitions import Coalition, all_coalitions, full_coalition, members, size
from .errors import CapExceededError, EfficiencyError, NotRegularError
from .networks import HierNet, partition, strong_successors, weak_successors
from .rationals import Exact, as_exact

DEFAULT_PLAYER_CAP = 24


def _check_player_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceededError("coalition enumeration", n, cap)


class TUGame:
    """A worth for every coalition of ``n`` players, dense over all 2**n masks.

    The empty coalition is worth zero by definition.  Entries are ints or
    Fractions; floats are rejected.
    """

    __slots__ = ("n", "worths")

    def __init__(self, n: int, worths: list[Exact] | tuple[Exact, ...]):
        if len(worths) != 1 << n:
            raise ValueError(f"need {1 << n} worths for {n} players, got {len(worths)}")
        table = tuple(as_exact(w) for w in worths)
        if table[0] != 0:
            raise ValueError(f"empty coalition must be worth 0, got {table[0]}")
        self.n = n
        self.worths = table

    def worth(self, h: Coalition) -> Exact:
        return self.worths[h]

    @property
    def grand_coalition(self) -> Coalition:
        return full_coalition(self.n)

    def grand_worth(self) -> Exact:
        return self.worths[-1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TUGame):
            return NotImplemented
        return self.n == other.n and self.worths == other.worths

    def __hash__(self) -> int:
        return hash((self.n, self.worths))

    def __repr__(self) -> str:
        return f"TUGame(n={self.n})"


@dataclass(frozen=True, slots=True)
class Imputation:
    """Payoff vector over the players of a game, one Fraction per player."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(Fraction(as_exact(v)) for v in self.values))

    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]


def unanimity_game(n: int, carrier: Coalition) -> TUGame:
    """Worth 1 exactly on supersets of ``carrier``."""
    if carrier == 0:
        raise ValueError("unanimity carrier must be nonempty")
    return TUGame(n, [1 if h & carrier == carrier else 0 for h in all_coalitions(n)])


def additive_game(values: list[Exact] | tuple[Exact, ...]) -> TUGame:
    n = len(values)
    vals = [as_exact(v) for v in values]
    worths: list[Exact] = [0] * (1 << n)
    for h in range(1, 1 << n):
        low = h & -h
        worths[h] = worths[h ^ low] + vals[low.bit_length() - 1]
    return TUGame(n, worths)


# --- successor representations -------------------------------------------------

def successor_game(net: HierNet, cap: int = DEFAULT_PLAYER_CAP) -> TUGame:
    """Worth of a coalition: how many nodes have a predecessor inside it."""
    _check_player_cap(net.n, cap)
    return TUGame(
        net.n,
        [size(weak_successors(net, h)) for h in all_coalitions(net.n)],
    )


def strong_successor_game(net: HierNet, cap: int = DEFAULT_PLAYER_CAP) -> TUGame:
    """Worth of a coalition: how many nodes it fully controls."""
    _check_player_cap(net.n, cap)
    return TUGame(
        net.n,
        [size(strong_successors(net, h)) for h in all_coalitions(net.n)],
    )


def partial_games(net: HierNet, cap: int = DEFAULT_PLAYER_CAP) -> tuple[TUGame, TUGame]:
    """Split the successor game by the class of the reached node.

    First component counts reached single-predecessor nodes (an additive
    game), second counts reached multi-predecessor nodes; they sum to the
    successor game coalition-wise.
    """
    _check_player_cap(net.n, cap)
    parts = partition(net)
    single = 0
    multi = 0
    for j in parts.single_pred:
        single |= 1 << j
    for j in parts.multi_pred:
        multi |= 1 << j
    singles: list[Exact] = []
    multis: list[Exact] = []
    for h in all_coalitions(net.n):
        reach = weak_successors(net, h)
        singles.append(size(reach & single))
        multis.append(size(reach & multi))
    return TUGame(net.n, singles), TUGame(net.n, multis)


# --- generic game operations ---------------------------------------------------

def dual(v: TUGame) -> TUGame:
    """Dual game: what the complement cannot withhold.  An involution."""
    grand = v.grand_worth()
    full = v.grand_coalition
    return TUGame(v.n, [grand - v.worths[full ^ h] for h in all_coalitions(v.n)])


def is_convex(v: TUGame, cap: int = DEFAULT_PLAYER_CAP) -> bool:
    """Exhaustive supermodularity check over all coalition pairs."""
    _check_player_cap(v.n, cap)
    w = v.worths
    for h in all_coalitions(v.n):
        wh = w[h]
        for k in range(h, 1 << v.n):
            if wh + w[k] > w[h | k] + w[h & k]:
                return False
    return True


def is_concave(v: TUGame, cap: int = DEFAULT_PLAYER_CAP) -> bool:
    """Exhaustive submodularity check over all coalition pairs."""
    _check_player_cap(v.n, cap)
    w = v.worths
    for h in all_coalitions(v.n):
        wh = w[h]
        for k in range(h, 1 << v.n):
            if wh + w[k] < w[h | k] + w[h & k]:
                return False
    return True


def harsanyi_dividends(v: TUGame, cap: int = DEFAULT_PLAYER_CAP) -> tuple[Exact, ...]:
    """Moebius inverse of the worth table, indexed by coalition mask.

    Reconstruction holds: the worth of any coalition is the sum of the
    dividends of its subsets.
    """
    _check_player_cap(v.n, cap)
    div = list(v.worths)
    for i in range(v.n):
        bit = 1 << i
        for h in range(1 << v.n):
            if h & bit:
                div[h] -= div[h ^ bit]
    return tuple(div)


def shapley(v: TUGame, cap: int = DEFAULT_PLAYER_CAP) -> Imputation:
    """Shapley value via Harsanyi dividends: each coalition's dividend is
    split evenly among its members."""
    div = harsanyi_dividends(v, cap)
    out = [Fraction(0)] * v.n
    for h in all_coalitions(v.n):
        d = div[h]
        if d == 0 or h == 0:
            continue
        share = Fraction(d, size(h))
        for i in members(h):
            out[i] += share
    return Imputation(tuple(out))


def shapley_permutation(v: TUGame) -> Imputation:
    """Permutation-average oracle for the Shapley value.

    Averages each player's marginal contribution over all n! arrival
    orders.  Independent of the dividend route; kept as a permanent test
    oracle.  Exact, so both routes must agree to the last digit.
    """
    n = v.n
    totals = [Fraction(0)] * n
    count = 0
    for order in itertools.permutations(range(n)):
        mask = 0
        for i in order:
            grown = mask | 1 << i
            totals[i] += v.worths[grown] - v.worths[mask]
            mask = grown
        count += 1
    return Imputation(tuple(t / count for t in totals))


def marginal(v: TUGame, i: int) -> Exact:
    """Worth the grand coalition loses if player ``i`` walks away."""
    if not 0 <= i < v.n:
        raise ValueError(f"player {i} outside 0..{v.n - 1}")
    full = v.grand_coalition
    return v.grand_worth() - v.worths[full ^ (1 << i)]


# --- disruption-balancing value ------------------------------------------------

def gately(v: TUGame) -> Imputation:
    """Allocation that equalises every player's propensity to disrupt.

    Each player gets their stand-alone worth plus a share of the joint
    surplus proportional to their marginal stake.  Defined when the grand
    worth sits between the stand-alone total and the marginal total, in
    either order (gain or cost reading); refused otherwise.  When the two
    totals coincide the surplus is zero and the stand-alone vector is
    forced.
    """
    n = v.n
    full = v.grand_coalition
    singles = [v.worths[1 << i] for i in range(n)]
    margins = [v.grand_worth() - v.worths[full ^ (1 << i)] for i in range(n)]
    low = sum(singles)
    high = sum(margins)
    grand = v.grand_worth()
    if not (low <= grand <= high or high <= grand <= low):
        raise NotRegularError(
            "grand worth must lie between the stand-alone total and the "
            f"marginal total: stand-alone {low}, grand {grand}, marginal {high}"
        )
    if high == low:
        return Imputation(tuple(Fraction(s) for s in singles))
    scale = Fraction(grand - low, high - low)
    return Imputation(tuple(s + (m - s) * scale for s, m in zip(singles, margins)))


@dataclass(frozen=True, slots=True)
class PropensityMarker:
    """Sentinel for the two degenerate propensity cases."""

    kind: str

    def __repr__(self) -> str:
        return f"<propensity:{self.kind}>"


INFINITE_PROPENSITY = PropensityMarker("infinite")
BALANCED_PROPENSITY = PropensityMarker("balanced")


def propensity_to_disrupt(
    v: TUGame, x: Imputation, i: int
) -> Fraction | PropensityMarker:
    """Marginal stake of player ``i`` relative to their concession at ``x``.

    The ratio (marginal worth - stand-alone worth) / (payoff - stand-alone
    worth); the cost reading negates numerator and denominator and is the
    same number.  A zero concession with a live stake is the infinite
    marker; zero over zero is the balanced marker.
    """
    if x.total() != v.grand_worth():
        raise EfficiencyError(
            f"allocation sums to {x.total()}, grand worth is {v.grand_worth()}"
        )
    num = Fraction(marginal(v, i) - v.worths[1 << i])
    den = x[i] - v.worths[1 << i]
    if den == 0:
        return BALANCED_PROPENSITY if num == 0 else INFINITE_PROPENSITY
    return num / den


# --- core membership -----------------------------------------------------------

def coalition_payoffs(x: Imputation) -> tuple[Fraction, ...]:
    """Subset sums of a payoff vector, indexed by coalition mask."""
    n = len(x)
    sums = [Fraction(0)] * (1 << n)
    for h in range(1, 1 << n):
        low = h & -h
        sums[h] = sums[h ^ low] + x[low.bit_length() - 1]
    return tuple(sums)


def find_core_violation(
    v: TUGame, x: Imputation, cap: int = DEFAULT_PLAYER_CAP
) -> Coalition | None:
    """First coalition (ascending mask order) paid less than its worth.

    Raises :class:`EfficiencyError` first when ``x`` does not distribute
    the grand worth, which is a malformed query rather than a refusal.
    """
    _check_player_cap(v.n, cap)
    if len(x) != v.n:
        raise ValueError(f"allocation has {len(x)} entries for {v.n} players")
    sums = coalition_payoffs(x)
    if sums[-1] != v.grand_worth():
        raise EfficiencyError(
            f"allocation sums to {sums[-1]}, grand worth is {v.grand_worth()}"
        )
    for h in all_coalitions(v.n):
        if sums[h] < v.worths[h]:
            return h
    return None


def in_core(v: TUGame, x: Imputation, cap: int = DEFAULT_PLAYER_CAP) -> bool:
    """Exact check that every coalition is paid at least its worth."""
    return find_core_violation(v, x, cap) is None
