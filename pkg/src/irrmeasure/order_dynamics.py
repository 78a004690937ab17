"""Order vectors of a tuple of staircases and their change moments.

Given labeled sources, the order vector at t lists the labels in strictly
decreasing staircase value.  The vector can only change where some member
jumps, so the dynamics are driven by the merged stream of convergent
denominators.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .cf_engine import PartialQuotientSource, SeededSource, parse_source
from .errors import ComparisonUndecided
from .psi import DEFAULT_DEPTH_LIMIT, ApproximationError, psi_at

OrderVector = tuple  # tuple of labels, largest value first


@dataclass(frozen=True)
class FunctionTuple:
    """Finite ordered collection of labeled sources."""

    members: tuple

    def __post_init__(self):
        labels = [label for label, _ in self.members]
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be pairwise distinct")
        if not labels:
            raise ValueError("tuple must not be empty")

    @classmethod
    def build(cls, pairs) -> "FunctionTuple":
        return cls(tuple((label, source) for label, source in pairs))

    @property
    def n(self) -> int:
        return len(self.members)

    @property
    def labels(self) -> tuple:
        return tuple(label for label, _ in self.members)

    def source(self, label: str) -> PartialQuotientSource:
        for candidate, source in self.members:
            if candidate == label:
                return source
        raise KeyError(label)


@dataclass(frozen=True)
class JumpEvent:
    """One merged event: the integer t and the labels that jump there."""

    t: int
    jumping: tuple


@dataclass(frozen=True)
class ChangeMoment:
    t: int
    vector: OrderVector
    jumping: tuple


@dataclass(frozen=True)
class ChangeTrace:
    """Order vector at t0 plus every moment where it changed afterwards."""

    t0: int
    v0: OrderVector
    moments: tuple
    header: dict = field(default_factory=dict)

    def vectors(self):
        return [self.v0] + [m.vector for m in self.moments]

    def to_document(self) -> dict:
        header = dict(self.header)
        header["t0"] = str(self.t0)
        header["v0"] = list(self.v0)
        return {
            "header": header,
            "events": [
                {
                    "t": str(m.t),
                    "v": list(m.vector),
                    "jumping": list(m.jumping),
                }
                for m in self.moments
            ],
        }

    @classmethod
    def from_document(cls, doc: dict) -> "ChangeTrace":
        header = dict(doc["header"])
        t0 = int(header.pop("t0"))
        v0 = tuple(header.pop("v0"))
        moments = tuple(
            ChangeMoment(int(e["t"]), tuple(e["v"]), tuple(e["jumping"]))
            for e in doc["events"]
        )
        return cls(t0, v0, moments, header)


def _distinct_denominators(source: PartialQuotientSource, start_exclusive: int = 0):
    """Strictly increasing q_m stream, merging the duplicate at q_0 = q_1."""
    last = None
    m = 0
    while True:
        q = source.state(m).q
        if q != last and q > start_exclusive:
            yield q
            last = q
        elif q != last:
            last = q
        m += 1


def iter_events(ftuple: FunctionTuple, start_exclusive: int = 0):
    """Merged jump events strictly after start_exclusive, in increasing t."""
    streams = []
    for index, (label, source) in enumerate(ftuple.members):
        it = _distinct_denominators(source, start_exclusive)
        q = next(it)
        heapq.heappush(streams, (q, index, label, it))
    while streams:
        t = streams[0][0]
        jumping = []
        while streams and streams[0][0] == t:
            _, index, label, it = heapq.heappop(streams)
            jumping.append((index, label))
            q = next(it)
            heapq.heappush(streams, (q, index, label, it))
        jumping.sort()
        yield JumpEvent(t, tuple(label for _, label in jumping))


def build_events(ftuple: FunctionTuple, horizon: int) -> list:
    """All merged events with t <= horizon.

    Every member must be expandable past the horizon; an explicit source
    that runs out first raises SourceExhausted since the event list would
    otherwise be silently incomplete.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    events = []
    for event in iter_events(ftuple, 0):
        if event.t > horizon:
            break
        events.append(event)
    return events


def order_vector_at(
    ftuple: FunctionTuple, t: int, depth_limit: int = DEFAULT_DEPTH_LIMIT
) -> OrderVector:
    """Labels sorted by strictly decreasing staircase value at t.

    All adjacent comparisons are certified by disjoint brackets; if a pair
    cannot be separated within depth_limit refinement rounds the whole
    ordering is undecided.
    """
    errors = [
        psi_at(source, t, target_width=Fraction(1), label=label)
        for label, source in ftuple.members
    ]
    if len(errors) == 1:
        return (errors[0].label,)
    rounds = 0
    while True:
        errors.sort(key=lambda e: (e.bracket.lo, e.bracket.hi), reverse=True)
        overlapping = [
            (a, b)
            for a, b in zip(errors, errors[1:])
            if not b.bracket.strictly_below(a.bracket)
        ]
        if not overlapping:
            return tuple(e.label for e in errors)
        if rounds >= depth_limit:
            a, b = overlapping[0]
            raise ComparisonUndecided(t, (a.label, b.label), rounds)
        for a, b in overlapping:
            a.refine(1)
            b.refine(1)
        rounds += 1


def tau_at(ftuple: FunctionTuple, t: int) -> int:
    """Number of members for which t is a convergent denominator."""
    if t < 1:
        raise ValueError("t must be >= 1")
    count = 0
    for _, source in ftuple.members:
        m = 0
        while source.state(m).q < t:
            m += 1
        if source.state(m).q == t:
            count += 1
    return count


def clamp_start(ftuple: FunctionTuple, t0: int) -> int:
    """Traces start no earlier than every member's q_2."""
    floor_t = max(source.state(2).q for _, source in ftuple.members)
    return max(t0, floor_t)


def change_trace(
    ftuple: FunctionTuple,
    t0: int,
    count: int,
    depth_limit: int = DEFAULT_DEPTH_LIMIT,
) -> ChangeTrace:
    """First `count` moments after t0 at which the order vector changes.

    t0 is clamped up to the largest q_2 among members so that every
    staircase is past its initial irregular levels.
    """
    if ftuple.n < 2:
        raise ValueError("dynamics need at least two members")
    if count < 0:
        raise ValueError("count must be >= 0")
    start = clamp_start(ftuple, t0)
    v0 = order_vector_at(ftuple, start, depth_limit)
    moments = []
    current = v0
    if count > 0:
        for event in iter_events(ftuple, start):
            vector = order_vector_at(ftuple, event.t, depth_limit)
            if vector != current:
                moments.append(ChangeMoment(event.t, vector, event.jumping))
                current = vector
                if len(moments) == count:
                    break
    header = {
        "sources": [[label, source.spec_string()] for label, source in ftuple.members],
        "depth_limit": depth_limit,
        "requested_t0": str(t0),
    }
    if any(isinstance(source, SeededSource) for _, source in ftuple.members):
        header["prng"] = SeededSource.PRNG_NAME
    return ChangeTrace(start, v0, tuple(moments), header)


def tuple_from_header(header: dict) -> FunctionTuple:
    """Rebuild the function tuple recorded in a trace header."""
    return FunctionTuple.build(
        (label, parse_source(spec)) for label, spec in header["sources"]
    )


def distinct_vectors(trace: ChangeTrace) -> Counter:
    """Multiset of order vectors occurring in the trace, v0 included."""
    return Counter(trace.vectors())
