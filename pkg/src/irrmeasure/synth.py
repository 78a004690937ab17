"""Construction of quotient lists realizing scheduled denominator sharing.

A schedule is a sequence of events, each naming the labels whose staircases
must jump together there.  A member with state (q, q_prev) can reach any
next denominator Q with Q ≡ q_prev (mod q) and Q >= q + q_prev, by the
quotient a = (Q - q_prev) / q.  Because consecutive denominators are
coprime, each member contributes one congruence with unit-gcd residue;
events are realized by merging these congruences and picking the smallest
admissible solution.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .cf_engine import ExplicitSource
from .errors import InfeasibleSchedule, QuotientUnderflow


@dataclass(frozen=True)
class JumpSchedule:
    """Ordered events; each event is the tuple of labels jumping there."""

    events: tuple
    k: int | None = None

    def __post_init__(self):
        if not self.events:
            raise ValueError("schedule needs at least one event")
        for event in self.events:
            if not event:
                raise ValueError("every event needs at least one label")
            if len(set(event)) != len(event):
                raise ValueError("labels within an event must be distinct")

    @property
    def labels(self) -> tuple:
        seen = []
        for event in self.events:
            for label in sorted(event):
                if label not in seen:
                    seen.append(label)
        return tuple(seen)

    def to_document(self) -> dict:
        return {"k": self.k, "events": [sorted(event) for event in self.events]}

    @classmethod
    def from_document(cls, doc: dict) -> "JumpSchedule":
        return cls(tuple(tuple(e) for e in doc["events"]), doc.get("k"))


def extremal_schedule(k: int, cycles: int) -> JumpSchedule:
    """The periodic calendar with the largest admissible tuple for k.

    Labels are "i.j" for the triangular pairs 1 <= i <= j <= k.  Event e
    carries the diagonal label of the residue c = ((e-1) mod k) + 1 plus
    every off-diagonal label containing c: exactly k labels per event.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if cycles < 1:
        raise ValueError("cycles must be >= 1")
    events = []
    for e in range(1, k * cycles + 1):
        c = (e - 1) % k + 1
        labels = [f"{c}.{c}"]
        labels += [f"{i}.{c}" for i in range(1, c)]
        labels += [f"{c}.{j}" for j in range(c + 1, k + 1)]
        events.append(tuple(labels))
    return JumpSchedule(tuple(events), k=k)


def _extended_gcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t
    return old_r, old_s, old_t


def merge_congruences(pairs):
    """Smallest representation (r, M) of a simultaneous congruence system.

    pairs holds (residue, modulus) entries; non-coprime moduli are merged
    through the extended gcd.  Raises InfeasibleSchedule on contradiction.
    """
    r, m = 0, 1
    for residue, modulus in pairs:
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        residue %= modulus
        g, u, _ = _extended_gcd(m, modulus)
        if (residue - r) % g:
            raise InfeasibleSchedule(
                f"congruences x = {r} (mod {m}) and x = {residue} (mod {modulus}) conflict"
            )
        lcm = m // g * modulus
        r = (r + m * ((residue - r) // g) * u) % lcm
        m = lcm
    return r, m


def _solve_event(congruences, lower_bound, search_bound, coprime_to=1):
    """Least Q >= lower_bound satisfying all congruences, coprime to the pool.

    coprime_to is the product of every denominator any member already owns.
    Keeping each event value coprime to it means no two values ever share a
    factor, so later merges can only conflict when two members carry the
    same modulus, which is the genuinely unrealizable situation.  A solution
    coprime to the pool always exists: each member congruence already forces
    the value coprime to that member's modulus, and stepping by the merged
    modulus escapes any prime outside it.
    """
    try:
        r, m = merge_congruences(congruences)
    except InfeasibleSchedule:
        least = min(mod for _, mod in congruences)
        residue = next(res for res, mod in congruences if mod == least)
        q = lower_bound + (residue - lower_bound) % least
        for _ in range(search_bound):
            if math.gcd(q, coprime_to) == 1 and all(
                (q - res) % mod == 0 for res, mod in congruences
            ):
                return q
            q += least
        raise
    if r < lower_bound:
        r += ((lower_bound - r + m - 1) // m) * m
    for _ in range(search_bound):
        if math.gcd(r, coprime_to) == 1:
            return r
        r += m
    raise InfeasibleSchedule(
        f"no value coprime to the existing pool within {search_bound} steps"
    )


@dataclass(frozen=True)
class EventCertificate:
    """Per-member congruence witness for one realized event."""

    label: str
    modulus: int
    residue: int
    quotient: int
    cf_index: int


@dataclass(frozen=True)
class SynthesisResult:
    schedule: JumpSchedule
    quotients: dict  # label -> tuple of partial quotients
    event_values: tuple  # realized shared denominators, strictly increasing
    certificates: tuple  # tuple per event of EventCertificate

    def sources(self) -> dict:
        return {label: ExplicitSource(terms) for label, terms in self.quotients.items()}

    def padded_sources(self, extra: int = 40, fill: int = 1) -> dict:
        """Sources extended with filler quotients for bracket refinement.

        The scheduled coincidences live in the prefix and are unaffected;
        the tail only lets comparisons refine deep enough to certify.
        """
        return {
            label: ExplicitSource(list(terms) + [fill] * extra)
            for label, terms in self.quotients.items()
        }

    def member_events(self, label: str) -> list:
        """(event_position, cf_index) for each event where label jumps."""
        out = []
        for position, certs in enumerate(self.certificates):
            for cert in certs:
                if cert.label == label:
                    out.append((position, cert.cf_index))
        return out

    def to_document(self) -> dict:
        return {
            "schedule": self.schedule.to_document(),
            "quotients": {label: list(terms) for label, terms in self.quotients.items()},
            "event_values": [str(v) for v in self.event_values],
            "certificates": [
                [
                    {
                        "label": c.label,
                        "modulus": str(c.modulus),
                        "residue": str(c.residue),
                        "quotient": str(c.quotient),
                        "cf_index": c.cf_index,
                    }
                    for c in certs
                ]
                for certs in self.certificates
            ],
        }


def default_prefixes(labels):
    """Distinct starting quotients [0, i+1] so the numbers never collide."""
    return {label: [0, i + 1] for i, label in enumerate(labels)}


def synthesize(
    schedule: JumpSchedule,
    search_bound: int = 10**6,
    prefixes: dict | None = None,
) -> SynthesisResult:
    """Realize a schedule as explicit quotient lists with exact coincidences.

    Each event's shared denominator is the smallest solution of the
    members' congruences that exceeds the previous event, dodges every
    bystander's existing denominators, and keeps every derived quotient
    >= 1.  Members absent from an event simply do not advance, so their
    next denominator lands beyond it automatically.
    """
    labels = schedule.labels
    if prefixes is None:
        prefixes = default_prefixes(labels)
    quotients = {}
    states = {}
    pool = 1
    for label in labels:
        terms = list(prefixes[label])
        if len(terms) < 2:
            raise ValueError("each prefix needs at least a_0 and a_1")
        source = ExplicitSource(terms)
        quotients[label] = terms
        state = source.state(len(terms) - 1)
        states[label] = (state.q, state.q_prev, len(terms) - 1)
        for i in range(len(terms)):
            pool *= source.state(i).q
    event_values = []
    certificates = []
    last_q = 0
    for event in schedule.events:
        congruences = []
        lower = last_q + 1
        for label in sorted(event):
            q, q_prev, _ = states[label]
            congruences.append((q_prev % q, q))
            lower = max(lower, q + q_prev)
        value = _solve_event(congruences, lower, search_bound, pool)
        certs = []
        for label in sorted(event):
            q, q_prev, m = states[label]
            quotient = (value - q_prev) // q
            if quotient < 1:
                raise QuotientUnderflow(
                    f"derived quotient {quotient} for {label} at Q={value}"
                )
            quotients[label].append(quotient)
            states[label] = (value, q, m + 1)
            certs.append(EventCertificate(label, q, q_prev % q, quotient, m + 1))
        event_values.append(value)
        certificates.append(tuple(certs))
        pool *= value
        last_q = value
    return SynthesisResult(
        schedule,
        {label: tuple(terms) for label, terms in quotients.items()},
        tuple(event_values),
        tuple(certificates),
    )


def replay_check(result: SynthesisResult) -> bool:
    """Re-derive denominators from the emitted quotients and check events.

    Walks the plain recurrence, independently of any cached state, and
    confirms that each event value is a denominator of exactly the
    scheduled members at the recorded index.
    """
    denominators = {}
    for label, terms in result.quotients.items():
        p_prev, q_prev, p, q = 1, 0, terms[0], 1
        qs = [q]
        for a in terms[1:]:
            p, p_prev = a * p + p_prev, p
            q, q_prev = a * q + q_prev, q
            qs.append(q)
        denominators[label] = qs
    for position, (event, value) in enumerate(
        zip(result.schedule.events, result.event_values)
    ):
        for label in result.schedule.labels:
            hit = value in denominators[label]
            if (label in event) != hit:
                return False
        for cert in result.certificates[position]:
            if denominators[cert.label][cert.cf_index] != value:
                return False
    return True


def load_schedule(text: str) -> JumpSchedule:
    """Parse a schedule from JSON or the extremal:k=..:cycles=.. preset form."""
    text = text.strip()
    if text.startswith("extremal:"):
        params = dict(part.split("=") for part in text[len("extremal:") :].split(":"))
        return extremal_schedule(int(params["k"]), int(params["cycles"]))
    return JumpSchedule.from_document(json.loads(text))
