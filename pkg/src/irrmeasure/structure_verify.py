"""Finite-horizon verification of the structural laws of change traces.

A trace of a tuple of n = k(k+1)/2 staircases is expected to satisfy, at
every recorded change moment:

  i    exactly k members jump,
  ii   the vector sequence is periodic with (exact) period k,
  iii  each diagonal component (i, i) jumps at every k-th moment only,
  iv   each off-diagonal component (i, j) jumps at the moments of both its
       indices and nowhere else among the moments,
  v    the jumping set is the top k block of the previous vector, led by
       the current diagonal component,
  vi   consecutive vectors are one application of the cyclic permutation
       apart.

Passing here means "consistent with the law up to this horizon", never a
proof about the infinite tail.  The module also provides the projection
to sub-tuples, two scan checks relating jump interleavings of two and
three staircases, and the counting bound for distinct vectors.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from . import triangle_perm
from .cf_engine import PartialQuotientSource
from .errors import (
    ComparisonUndecided,
    EnumerationInferenceFailed,
    HypothesisNotMet,
    PatternMismatch,
    UnknownLabel,
)
from .order_dynamics import (
    ChangeTrace,
    FunctionTuple,
    clamp_start,
    iter_events,
    order_vector_at,
)
from .psi import (
    DEFAULT_DEPTH_LIMIT,
    ApproximationError,
    Relation,
    compare_psi,
    separate,
)

ITEM_NAMES = {
    "i": "jump_count",
    "ii": "periodicity",
    "iii": "diagonal_schedule",
    "iv": "offdiagonal_schedule",
    "v": "leading_block",
    "vi": "cycle_step",
}


def project(vector, sublabels):
    """Restriction of an order vector to a set of labels, order preserved."""
    wanted = set(sublabels)
    if len(wanted) != len(tuple(sublabels)):
        raise ValueError("projection labels must be distinct")
    missing = wanted - set(vector)
    if missing:
        raise UnknownLabel(f"labels {sorted(missing)} not in vector {vector}")
    return tuple(x for x in vector if x in wanted)


def preimage(u, vectors, sublabels):
    """All vectors in the collection that project onto u."""
    u = tuple(u)
    return {v for v in vectors if project(v, sublabels) == u}


@dataclass(frozen=True)
class ItemStatus:
    status: str  # "pass" | "fail" | "inconclusive"
    witness: tuple | None = None
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class VerificationReport:
    k: int
    n: int
    horizon: int
    items: dict
    enumeration: dict | None = None
    offset: int | None = None

    @property
    def all_passed(self) -> bool:
        return all(item.passed for item in self.items.values())

    def to_document(self) -> dict:
        enumeration = None
        if self.enumeration is not None:
            enumeration = {label: list(pair) for label, pair in self.enumeration.items()}
        return {
            "k": self.k,
            "n": self.n,
            "horizon": str(self.horizon),
            "offset": self.offset,
            "enumeration": enumeration,
            "items": {
                key: {
                    "name": ITEM_NAMES[key],
                    "status": item.status,
                    "witness": _witness_doc(item.witness),
                    "reason": item.reason,
                }
                for key, item in self.items.items()
            },
        }


def _witness_doc(witness):
    if witness is None:
        return None
    return [str(w) if isinstance(w, int) else w for w in witness]


def _infer_enumeration(v0, k):
    n = triangle_perm.triangle_size(k)
    if len(v0) != n:
        raise EnumerationInferenceFailed(
            f"vector length {len(v0)} is not the triangular size {n} for k={k}"
        )
    pairs = triangle_perm.canonical_pairs(k)
    return {label: pairs[p] for p, label in enumerate(v0)}


def _expected_jump(pair, moment_index, offset, k):
    residue = ((moment_index - 1 + offset) % k) + 1
    return residue in pair


def _best_offset(moments, pair_of, k):
    """Cyclic offset of the jump calendar that best fits the observations."""
    best = (None, None)
    for offset in range(k):
        mismatches = 0
        for index, moment in enumerate(moments, start=1):
            jumping = set(moment.jumping)
            for label, pair in pair_of.items():
                if _expected_jump(pair, index, offset, k) != (label in jumping):
                    mismatches += 1
        if best[0] is None or mismatches < best[0]:
            best = (mismatches, offset)
    return best[1]


def verify_structure(trace: ChangeTrace, k: int) -> VerificationReport:
    """Check items i..vi on a recorded trace at its finite horizon."""
    moments = list(trace.moments)
    if len(moments) < 2 * k + 1:
        raise ValueError(f"trace too short: need at least {2 * k + 1} moments")
    vectors = trace.vectors()
    n = len(trace.v0)
    horizon = moments[-1].t
    items = {}

    # i: every moment has exactly k jumping members
    status = ItemStatus("pass")
    for moment in moments:
        if len(set(moment.jumping)) != k:
            status = ItemStatus(
                "fail", witness=(moment.t, f"tau={len(set(moment.jumping))}")
            )
            break
    items["i"] = status

    # ii: exact period k, i.e. repetition after k steps and k distinct vectors
    status = ItemStatus("pass")
    for index in range(len(vectors) - k):
        if vectors[index + k] != vectors[index]:
            t_bad = moments[index + k - 1].t
            status = ItemStatus("fail", witness=(t_bad, "period broken"))
            break
    if status.passed and len(set(vectors[: min(k, len(vectors))])) != min(
        k, len(vectors)
    ):
        status = ItemStatus("fail", witness=(moments[0].t, "period smaller than k"))
    items["ii"] = status

    enumeration = None
    offset = None
    try:
        enumeration = _infer_enumeration(trace.v0, k)
    except EnumerationInferenceFailed as exc:
        warnings.warn(str(exc))
        reason = f"enumeration inference failed: {exc}"
        for key in ("iii", "iv", "v", "vi"):
            items[key] = ItemStatus("inconclusive", reason=reason)
        return VerificationReport(k, n, horizon, items)

    pair_of = enumeration
    label_of = {pair: label for label, pair in pair_of.items()}
    offset = _best_offset(moments, pair_of, k)

    # iii / iv: observed jumps among the moments match the residue calendar
    diag_status = ItemStatus("pass")
    off_status = ItemStatus("pass")
    for index, moment in enumerate(moments, start=1):
        jumping = set(moment.jumping)
        for label, pair in pair_of.items():
            expected = _expected_jump(pair, index, offset, k)
            observed = label in jumping
            if expected == observed:
                continue
            word = "expected" if expected else "unexpected"
            witness = (moment.t, f"{word} jump of {label} (slot {pair})")
            if pair[0] == pair[1]:
                if diag_status.passed:
                    diag_status = ItemStatus("fail", witness=witness)
            else:
                if off_status.passed:
                    off_status = ItemStatus("fail", witness=witness)
    items["iii"] = diag_status
    items["iv"] = off_status

    # v: jumpers are the k largest just before, led by the diagonal component
    status = ItemStatus("pass")
    for index, moment in enumerate(moments, start=1):
        previous = vectors[index - 1]
        top_block = set(previous[:k])
        residue = ((index - 1 + offset) % k) + 1
        leader = label_of.get((residue, residue))
        if set(moment.jumping) != top_block:
            status = ItemStatus(
                "fail", witness=(moment.t, "jumping set is not the leading block")
            )
            break
        if previous[0] != leader:
            status = ItemStatus(
                "fail",
                witness=(moment.t, f"leader {previous[0]} is not slot ({residue},{residue})"),
            )
            break
    items["v"] = status

    # vi: each step is one application of the cyclic permutation
    status = ItemStatus("pass")
    for index in range(1, len(vectors)):
        expected = triangle_perm.apply_pi(k, vectors[index - 1])
        if tuple(vectors[index]) != expected:
            status = ItemStatus(
                "fail", witness=(moments[index - 1].t, "vector is not pi(previous)")
            )
            break
    items["vi"] = status

    if items["vi"].passed and len(vectors) > k:
        # one permutation step per moment forces period k; a contradiction
        # here is a bug in this module, not in the trace
        assert items["ii"].passed, "cycle_step passed but periodicity failed"

    return VerificationReport(k, n, horizon, items, enumeration, offset)


@dataclass(frozen=True)
class ScanInstance:
    """One occurrence of the two-staircase interleaving pattern."""

    m: int
    s: int
    t_joint: int
    t_prev: int
    applied: bool
    reversed_ok: bool | None


@dataclass(frozen=True)
class PrejumpScanReport:
    status: str  # "pass" | "fail" | "inconclusive"
    instances: tuple
    undecided: tuple = ()

    @property
    def applied_count(self) -> int:
        return sum(1 for inst in self.instances if inst.applied)


def _denominators_upto(source, limit):
    """Distinct denominators q_m <= limit as {q: m} with the largest index."""
    out = {}
    m = 0
    while True:
        q = source.state(m).q
        if q > limit:
            break
        out[q] = m
        m += 1
    return out


def check_prejump_reversal(
    alpha: PartialQuotientSource,
    beta: PartialQuotientSource,
    events: int = 100,
    depth_limit: int = DEFAULT_DEPTH_LIMIT,
) -> PrejumpScanReport:
    """Scan a window for shared jumps and check the pre-jump order reversal.

    Pattern: a denominator q_{m+1} of alpha (m >= 2) that is also a
    denominator of beta, with beta's neighbors h_{s-1} <= q_m < h_s and
    s >= 2.  Whenever the first staircase is certified below the second
    just before the shared jump, it must be certified above just before
    its own previous jump.  Raises HypothesisNotMet if the window has no
    instance of the pattern.
    """
    pair = FunctionTuple.build([("a", alpha), ("b", beta)])
    horizon = None
    for index, event in enumerate(iter_events(pair, 0), start=1):
        if index == events:
            horizon = event.t
            break
    if horizon is None:
        raise ValueError("window has fewer events than requested")
    h_index = _denominators_upto(beta, horizon)
    h_sorted = sorted(h_index)
    instances = []
    undecided = []
    violations = []
    m = 2
    while alpha.state(m + 1).q <= horizon:
        q_m = alpha.state(m).q
        q_next = alpha.state(m + 1).q
        if q_next in h_index and q_m >= 2:
            # s is beta's first denominator index strictly above q_m
            s = None
            for h in h_sorted:
                if h > q_m:
                    s = h_index[h]
                    break
            if s is not None and s >= 2 and h_index[q_next] >= s:
                try:
                    before_joint = compare_psi(alpha, beta, q_next - 1, depth_limit)
                    if before_joint.relation is Relation.LESS:
                        before_prev = compare_psi(alpha, beta, q_m - 1, depth_limit)
                        ok = before_prev.relation is Relation.GREATER
                        instances.append(
                            ScanInstance(m, s, q_next, q_m, True, ok)
                        )
                        if not ok:
                            violations.append((q_next, m, s))
                    else:
                        instances.append(
                            ScanInstance(m, s, q_next, q_m, False, None)
                        )
                except ComparisonUndecided as exc:
                    undecided.append((q_next, str(exc)))
        m += 1
    if not instances and not undecided:
        raise HypothesisNotMet(
            f"no shared-jump pattern among the first {events} events"
        )
    if violations:
        status = "fail"
    elif undecided:
        status = "inconclusive"
    else:
        status = "pass"
    return PrejumpScanReport(status, tuple(instances), tuple(undecided))


@dataclass(frozen=True)
class TripleCoincidenceReport:
    status: str
    m: int
    s: int
    l: int
    window: tuple  # [h_{s+1}, h_{s+2}) where the middle staircase stays on top
    depth: int


def check_triple_coincidence(
    alpha: PartialQuotientSource,
    beta: PartialQuotientSource,
    gamma: PartialQuotientSource,
    m: int,
    s: int,
    l: int,
    depth_limit: int = DEFAULT_DEPTH_LIMIT,
) -> TripleCoincidenceReport:
    """Verify the six-fold denominator coincidence and its consequence.

    Required exact equalities on denominators (q of alpha, h of beta,
    r of gamma):

        q_m = h_s        q_{m+1} = r_l      r_{l+1} = h_{s+1}
        q_{m+2} = h_{s+2}  q_{m+3} = r_{l+2}  r_{l+3} = h_{s+3}

    Any failure raises PatternMismatch.  The consequence checked: on the
    whole interval [h_{s+1}, h_{s+2}) the second staircase stays strictly
    above the first, certified by comparing the levels s+1 and m+1.
    """
    q = [alpha.state(m + i).q for i in range(4)]
    h = [beta.state(s + i).q for i in range(4)]
    r = [gamma.state(l + i).q for i in range(4)]
    required = [
        ("q_m = h_s", q[0], h[0]),
        ("q_{m+1} = r_l", q[1], r[0]),
        ("r_{l+1} = h_{s+1}", r[1], h[1]),
        ("q_{m+2} = h_{s+2}", q[2], h[2]),
        ("q_{m+3} = r_{l+2}", q[3], r[2]),
        ("r_{l+3} = h_{s+3}", r[3], h[3]),
    ]
    for name, left, right in required:
        if left != right:
            raise PatternMismatch(f"{name} fails: {left} != {right}")
    eta = ApproximationError(beta, s + 1, label="beta")
    xi = ApproximationError(alpha, m + 1, label="alpha")
    verdict = separate(xi, eta, depth_limit, t=h[1])
    status = "pass" if verdict.relation is Relation.LESS else "fail"
    return TripleCoincidenceReport(status, m, s, l, (h[1], h[2]), verdict.depth)


def sign_changes(
    ftuple: FunctionTuple, horizon: int, depth_limit: int = DEFAULT_DEPTH_LIMIT
) -> int:
    """Certified sign reversals of the difference of a pair up to horizon.

    For two staircases every change of the order vector is a reversal, so
    this counts change moments from the clamped start.
    """
    if ftuple.n != 2:
        raise ValueError("sign changes are defined for a pair")
    start = clamp_start(ftuple, 1)
    if horizon < start:
        return 0
    current = order_vector_at(ftuple, start, depth_limit)
    count = 0
    for event in iter_events(ftuple, start):
        if event.t > horizon:
            break
        vector = order_vector_at(ftuple, event.t, depth_limit)
        if vector != current:
            count += 1
            current = vector
    return count


@dataclass(frozen=True)
class BoundCheck:
    n: int
    k_lower: int
    capacity: int
    consistent: bool
    message: str


def bound_check(n: int, k_lower: int) -> BoundCheck:
    """Is observing n distinct vectors consistent with k members recurring?

    The count of vectors occurring infinitely often is at most
    k(k+1)/2 when exactly k staircases keep jumping; n above the capacity
    would contradict k_lower being final.
    """
    if n < 1 or k_lower < 1:
        raise ValueError("counts must be >= 1")
    capacity = k_lower * (k_lower + 1) // 2
    consistent = n <= capacity
    if consistent:
        message = f"{n} vectors fit the capacity {capacity} for k={k_lower}"
    else:
        message = (
            f"{n} vectors exceed the capacity {capacity}; "
            f"k={k_lower} cannot be final"
        )
    return BoundCheck(n, k_lower, capacity, consistent, message)
