"""Schedule synthesis: congruence merging, realization, replay."""

import json
import math

import pytest

from irrmeasure import (
    ExplicitSource,
    InfeasibleSchedule,
    JumpSchedule,
    default_prefixes,
    extremal_schedule,
    load_schedule,
    merge_congruences,
    replay_check,
    synthesize,
)

AB = frozenset({"A", "B"})
AC = frozenset({"A", "C"})
BC = frozenset({"B", "C"})


def denominators(terms):
    qs = [1]
    q_prev, q = 0, 1
    for a in terms[1:]:
        q, q_prev = a * q + q_prev, q
        qs.append(q)
    return qs


# --------------------------------------------------------------- congruences


def test_merge_congruences_coprime():
    assert merge_congruences([(2, 3), (3, 5)]) == (8, 15)


def test_merge_congruences_overlapping_moduli():
    r, m = merge_congruences([(2, 6), (8, 10)])
    assert (r, m) == (8, 30)


def test_merge_congruences_conflict():
    with pytest.raises(InfeasibleSchedule):
        merge_congruences([(0, 7), (1, 7)])
    with pytest.raises(InfeasibleSchedule):
        merge_congruences([(0, 4), (1, 2)])


def test_merge_congruences_single():
    assert merge_congruences([(5, 7)]) == (5, 7)


# ------------------------------------------------------------------ schedule


def test_schedule_validation():
    with pytest.raises(ValueError):
        JumpSchedule(())
    with pytest.raises(ValueError):
        JumpSchedule(((),))
    with pytest.raises(ValueError):
        JumpSchedule((("A", "A"),))


def test_schedule_labels_deterministic():
    schedule = JumpSchedule([frozenset({"B", "A"}), frozenset({"C", "A"})])
    assert schedule.labels == ("A", "B", "C")


def test_schedule_document_round_trip():
    schedule = JumpSchedule([AB, AC], k=2)
    doc = schedule.to_document()
    again = JumpSchedule.from_document(doc)
    assert again.k == 2
    assert [set(e) for e in again.events] == [set(e) for e in schedule.events]


def test_default_prefixes_distinct():
    assert default_prefixes(("A", "B", "C")) == {
        "A": [0, 1],
        "B": [0, 2],
        "C": [0, 3],
    }


# --------------------------------------------------------------- realization


def test_joint_start_with_shared_prefixes():
    result = synthesize(
        JumpSchedule([AB]), prefixes={"A": [0, 1], "B": [0, 1]}
    )
    assert result.event_values == (2,)
    assert result.quotients == {"A": (0, 1, 1), "B": (0, 1, 1)}


def test_joint_start_default_prefixes():
    result = synthesize(JumpSchedule([AB]))
    assert result.event_values == (3,)
    assert result.quotients == {"A": (0, 1, 2), "B": (0, 2, 1)}
    assert replay_check(result)


def test_six_event_pattern():
    result = synthesize(JumpSchedule([AB, AC, BC, AB, AC, BC]))
    values = result.event_values
    assert values == (5, 31, 127, 7879, 4002563, 63072387881)
    assert replay_check(result)
    assert all(
        math.gcd(a, b) == 1
        for i, a in enumerate(values)
        for b in values[i + 1 :]
    )
    q = denominators(result.quotients["A"])
    h = denominators(result.quotients["B"])
    r = denominators(result.quotients["C"])
    # the six-fold coincidence pattern as integer equalities
    assert q[2] == h[2] == values[0]
    assert q[3] == r[2] == values[1]
    assert r[3] == h[3] == values[2]
    assert q[4] == h[4] == values[3]
    assert q[5] == r[4] == values[4]
    assert r[5] == h[5] == values[5]


def test_certificates_witness_the_congruences():
    result = synthesize(JumpSchedule([AB, AC, BC]))
    for event_index, certs in enumerate(result.certificates):
        value = result.event_values[event_index]
        assert {c.label for c in certs} == set(
            result.schedule.events[event_index]
        )
        for cert in certs:
            assert value % cert.modulus == cert.residue
            assert cert.quotient >= 1
            assert denominators(result.quotients[cert.label])[cert.cf_index] == value


def test_member_events_positions():
    result = synthesize(JumpSchedule([AB, AC, BC, AB, AC, BC]))
    assert result.member_events("A") == [(0, 2), (1, 3), (3, 4), (4, 5)]
    assert result.member_events("C") == [(1, 2), (2, 3), (4, 4), (5, 5)]


def test_event_values_strictly_increase():
    result = synthesize(extremal_schedule(3, 3))
    values = result.event_values
    assert all(a < b for a, b in zip(values, values[1:]))


def test_same_modulus_conflict_is_infeasible():
    # A and B co-jump twice with no other jump between: both carry the same
    # modulus with different residues the second time
    with pytest.raises(InfeasibleSchedule):
        synthesize(JumpSchedule([frozenset({"A"}), AB, AB]))


def test_result_document_and_sources():
    result = synthesize(JumpSchedule([AB]))
    doc = result.to_document()
    assert doc["event_values"] == ["3"]
    assert doc["quotients"]["A"] == [0, 1, 2]
    assert doc["certificates"][0][0]["label"] == "A"
    sources = result.sources()
    assert isinstance(sources["A"], ExplicitSource)
    assert sources["A"].state(2).q == 3
    padded = result.padded_sources(extra=5)
    assert padded["B"].state(7).q > sources["B"].state(2).q


# ----------------------------------------------------------------- extremal


def test_extremal_k2_alternates():
    schedule = extremal_schedule(2, 3)
    assert [tuple(sorted(e)) for e in schedule.events] == [
        ("1.1", "1.2"),
        ("1.2", "2.2"),
    ] * 3
    result = synthesize(schedule)
    assert replay_check(result)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_extremal_event_sizes_and_coverage(k):
    schedule = extremal_schedule(k, 2)
    assert schedule.k == k
    assert len(schedule.events) == 2 * k
    assert all(len(e) == k for e in schedule.events)
    assert len(schedule.labels) == k * (k + 1) // 2


def test_extremal_offdiagonal_twice_per_cycle():
    k = 4
    schedule = extremal_schedule(k, 3)
    events = [set(e) for e in schedule.events]
    for start in range(len(events) - k + 1):
        window = events[start : start + k]
        for label in schedule.labels:
            i, j = label.split(".")
            expected = 1 if i == j else 2
            assert sum(label in e for e in window) == expected


def test_extremal_synthesis_replays():
    for k, cycles in ((2, 4), (3, 4), (4, 2)):
        result = synthesize(extremal_schedule(k, cycles))
        assert replay_check(result)


def test_extremal_rejects_bad_parameters():
    with pytest.raises(ValueError):
        extremal_schedule(1, 2)
    with pytest.raises(ValueError):
        extremal_schedule(3, 0)


# ------------------------------------------------------------------- loading


def test_load_schedule_preset():
    schedule = load_schedule("extremal:k=3:cycles=2")
    assert schedule.k == 3
    assert len(schedule.events) == 6


def test_load_schedule_json():
    text = json.dumps({"k": None, "events": [["A", "B"], ["A"]]})
    schedule = load_schedule(text)
    assert schedule.labels == ("A", "B")
    assert [set(e) for e in schedule.events] == [{"A", "B"}, {"A"}]


def test_load_schedule_rejects_garbage():
    with pytest.raises(ValueError):
        load_schedule("not a schedule")
