"""Exact evaluation of the irrationality measure function.

psi_alpha(t) = min over integer 1 <= q <= t of ||q*alpha||, the distance
from q*alpha to the nearest integer.  For irrational alpha this is a
non-increasing staircase whose value on [q_m, q_{m+1}) is ||q_m*alpha||,
with q_m the convergent denominators.  All values are returned as exact
rational brackets that can be refined on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import cf_engine
from .cf_engine import PartialQuotientSource, RationalBracket
from .errors import CapExceeded, ComparisonUndecided, NotAJumpPoint

DEFAULT_TARGET_WIDTH = Fraction(1, 2**80)
DEFAULT_DEPTH_LIMIT = 64
DEFAULT_ORACLE_CAP = 100_000


def fractional_distance(x: Fraction) -> Fraction:
    """||x||: distance from an exact rational to the nearest integer."""
    fr = x - math.floor(x)
    return min(fr, 1 - fr)


def nearest_integer_distance(interval: RationalBracket) -> RationalBracket:
    """Enclosure of ||x|| over all x in the interval.

    Exact case analysis: the minimum drops to 0 when the interval contains
    an integer, the maximum caps at 1/2 when it contains a half-integer.
    """
    lo, hi = interval.lo, interval.hi
    half = Fraction(1, 2)
    if hi - lo >= 1:
        return RationalBracket(Fraction(0), half)
    d_lo, d_hi = fractional_distance(lo), fractional_distance(hi)
    contains_integer = math.floor(hi) >= math.ceil(lo)
    contains_half = math.floor(hi - half) >= math.ceil(lo - half)
    out_lo = Fraction(0) if contains_integer else min(d_lo, d_hi)
    out_hi = half if contains_half else max(d_lo, d_hi)
    return RationalBracket(out_lo, out_hi)


class Relation(Enum):
    LESS = "less"
    GREATER = "greater"


@dataclass(frozen=True)
class ComparisonVerdict:
    """Certified strict ordering together with the depth that decided it."""

    relation: Relation
    depth: int

    @property
    def is_less(self) -> bool:
        return self.relation is Relation.LESS


class ApproximationError:
    """Refinable exact bracket for ||q_m * alpha|| at one staircase level.

    The handle owns its current refinement depth; refine() only ever
    mutates this object, never the source it reads from.
    """

    def __init__(self, source: PartialQuotientSource, m: int, label: str | None = None):
        if m < 0:
            raise ValueError("level index must be >= 0")
        self.source = source
        self.m = m
        self.label = label
        state = source.state(m)
        self.q = state.q
        self.p = state.p
        # depth m+1 already brackets alpha strictly between convergents
        # around level m; start a little deeper so the value interval is
        # clear of 0 and 1/2 straight away in typical cases.
        self.depth = max(2, m + 3)
        self.bracket = self._compute()

    def _compute(self) -> RationalBracket:
        alpha = cf_engine.bracket(self.source, self.depth)
        return nearest_integer_distance(alpha.scale(self.q))

    def refine(self, extra: int = 1) -> None:
        if extra < 1:
            raise ValueError("refinement step must be >= 1")
        self.depth += extra
        self.bracket = self._compute()

    def refine_to(self, target_width: Fraction, step: int = 4) -> None:
        while self.bracket.width > target_width:
            self.refine(step)

    def __repr__(self):
        who = self.label or "?"
        return f"ApproximationError({who}, m={self.m}, q={self.q}, width={float(self.bracket.width):.3e})"


def _level_at(source: PartialQuotientSource, t: int) -> int:
    """Largest index m with q_m <= t (ties at q=1 resolve to the larger m).

    Needs to see q_{m+1} > t to stop, so an explicit source that runs out
    first raises SourceExhausted, which is the honest answer.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    m = 0
    while source.state(m + 1).q <= t:
        m += 1
    return m


def psi_at(
    source: PartialQuotientSource,
    t: int,
    target_width: Fraction = DEFAULT_TARGET_WIDTH,
    label: str | None = None,
) -> ApproximationError:
    """Staircase value at integer t as a refinable exact bracket."""
    m = _level_at(source, t)
    err = ApproximationError(source, m, label)
    err.refine_to(target_width)
    return err


def psi_left_limit(
    source: PartialQuotientSource,
    t: int,
    target_width: Fraction = DEFAULT_TARGET_WIDTH,
    label: str | None = None,
) -> ApproximationError:
    """Value held just before the jump at t, i.e. the previous level.

    t must be a convergent denominator q_m with m >= 2; anything else is
    NotAJumpPoint.
    """
    if t < 2:
        raise NotAJumpPoint(f"t={t} is below every jump with m >= 2")
    m = 0
    while source.state(m).q < t:
        m += 1
    if source.state(m).q != t or m < 2:
        raise NotAJumpPoint(f"t={t} is not a denominator with index >= 2")
    err = ApproximationError(source, m - 1, label)
    err.refine_to(target_width)
    return err


def perron_bracket(
    source: PartialQuotientSource, m: int, depth: int = 12
) -> RationalBracket:
    """||q_m*alpha|| via the classical identity 1/(q_m*alpha_{m+1} + q_{m-1}).

    Independent route from ApproximationError: uses a bracket of the tail
    alpha_{m+1} rather than a bracket of alpha itself.  m >= 1.
    """
    if m < 1:
        raise ValueError("the identity needs m >= 1")
    if depth < 2:
        raise ValueError("depth must be >= 2")
    state = source.state(m)
    tail = cf_engine.tail_bracket(source, m + 1, depth)
    denom_lo = state.q * tail.lo + state.q_prev
    denom_hi = state.q * tail.hi + state.q_prev
    return RationalBracket(1 / denom_hi, 1 / denom_lo)


def separate(
    a: ApproximationError,
    b: ApproximationError,
    depth_limit: int = DEFAULT_DEPTH_LIMIT,
    t: int | None = None,
) -> ComparisonVerdict:
    """Refine both brackets until they are disjoint and report the order.

    Each round adds one partial quotient on each side.  depth_limit bounds
    the number of extra rounds past the starting depths; hitting it raises
    ComparisonUndecided, which is also the only possible outcome when both
    handles describe the same number and level.
    """
    rounds = 0
    while a.bracket.intersects(b.bracket):
        if rounds >= depth_limit:
            raise ComparisonUndecided(t, (a.label, b.label), rounds)
        a.refine(1)
        b.refine(1)
        rounds += 1
    depth = max(a.depth, b.depth)
    if a.bracket.strictly_below(b.bracket):
        return ComparisonVerdict(Relation.LESS, depth)
    return ComparisonVerdict(Relation.GREATER, depth)


def compare_psi(
    f: PartialQuotientSource,
    g: PartialQuotientSource,
    t: int,
    depth_limit: int = DEFAULT_DEPTH_LIMIT,
) -> ComparisonVerdict:
    """Certified strict comparison of the two staircases at integer t.

    LESS means psi_f(t) < psi_g(t).  Values that cannot be separated within
    the budget (in particular, equal sources) raise ComparisonUndecided.
    """
    a = psi_at(f, t, target_width=Fraction(1))
    b = psi_at(g, t, target_width=Fraction(1))
    return separate(a, b, depth_limit, t=t)


def iter_brute_force_psi(
    source: PartialQuotientSource,
    t_max: int,
    precision: Fraction = Fraction(1, 10**13),
    cap: int = DEFAULT_ORACLE_CAP,
):
    """Yield (t, bracket) for t = 1..t_max by direct minimization.

    Deliberately ignores the staircase structure: the running minimum of
    ||q*alpha|| over q <= t is taken from a single deep bracket of alpha.
    Serves as the independent oracle for psi_at.
    """
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    if t_max > cap:
        raise CapExceeded(f"brute force request t_max={t_max} exceeds cap={cap}")
    depth = 8
    alpha = cf_engine.bracket(source, depth)
    while alpha.width * t_max > precision:
        depth += 4
        alpha = cf_engine.bracket(source, depth)
    best_lo = None
    best_hi = None
    for q in range(1, t_max + 1):
        d = nearest_integer_distance(alpha.scale(q))
        if best_lo is None or d.lo < best_lo:
            best_lo = d.lo
        if best_hi is None or d.hi < best_hi:
            best_hi = d.hi
        yield q, RationalBracket(best_lo, best_hi)


def brute_force_psi(
    source: PartialQuotientSource,
    t: int,
    precision: Fraction = Fraction(1, 10**13),
    cap: int = DEFAULT_ORACLE_CAP,
) -> RationalBracket:
    """min over 1 <= q <= t of ||q*alpha||, computed the slow honest way."""
    result = None
    for _, br in iter_brute_force_psi(source, t, precision, cap):
        result = br
    return result
