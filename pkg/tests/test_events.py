import random
from fractions import Fraction as F

import pytest

import minkbranch as mb
from minkbranch import events
from minkbranch.events import EventClass, LabeledPoint, event_class, event_rep, glued, same_event
from minkbranch.minkowski import point

from conftest import build_random_battery


def lp(t, x, s):
    return LabeledPoint(point(t, x), s)


def test_gluing_examples(two_scenario_model):
    m = two_scenario_model
    assert glued(m, lp(-1, 0, "s1"), lp(-1, 0, "s2"))
    assert not glued(m, lp(1, 0, "s1"), lp(1, 0, "s2"))
    # different locations are never one event
    assert not glued(m, lp(-1, 0, "s1"), lp(-2, 0, "s2"))
    # the splitting point itself is still shared
    assert glued(m, lp(0, 0, "s1"), lp(0, 0, "s2"))


def test_event_class_labels(two_scenario_model):
    m = two_scenario_model
    below = event_class(m, lp(-1, 0, "s1"))
    assert below.labels == frozenset({"s1", "s2"})
    above = event_class(m, lp(1, 0, "s1"))
    assert above.labels == frozenset({"s1"})
    assert below != above
    assert event_class(m, lp(-1, 0, "s2")) == below


def test_event_rep_equality_modes(two_scenario_model):
    m = two_scenario_model
    a = lp(-1, 0, "s1")
    b = lp(-1, 0, "s2")
    assert event_rep(a) == event_class(m, b)      # lazy vs materialized
    assert event_rep(a) != event_rep(b)           # two lazy reps: exact identity
    assert same_event(m, event_rep(a), event_rep(b))
    assert same_event(m, a, event_class(m, b))
    assert not same_event(m, lp(1, 0, "s1"), lp(1, 0, "s2"))


def test_event_class_validates_representative():
    with pytest.raises(ValueError):
        EventClass(point(0, 0), frozenset({"s1"}), representative="s2")


def test_induced_order_examples(two_scenario_model):
    m = two_scenario_model
    # cross-label order needs the lower point still glued
    assert events.leq(m, lp(-2, 0, "s1"), lp(-1, 0, "s2"))
    assert not events.leq(m, lp(1, 0, "s1"), lp(2, 0, "s2"))
    # within one label it is plain causal order
    assert events.leq(m, lp(1, 0, "s1"), lp(2, 0, "s1"))
    assert not events.leq(m, lp(2, 0, "s1"), lp(1, 0, "s1"))
    # strictness excludes the same location
    assert not events.lt(m, lp(-1, 0, "s1"), lp(-1, 0, "s2"))
    assert events.lt(m, lp(-2, 0, "s1"), lp(-1, 0, "s2"))


def test_induced_order_accepts_event_classes(two_scenario_model):
    m = two_scenario_model
    lo = event_class(m, lp(-2, 0, "s1"))
    hi = event_rep(lp(-1, 0, "s2"))
    assert events.leq(m, lo, hi)
    assert events.leq(m, lo, lp(-1, 0, "s2"))


def test_transitivity_failure_on_triangle_violation(triangle_violation_model):
    m = triangle_violation_model
    x = point(F(1, 2), 1)
    a, b, c = (LabeledPoint(x, s) for s in ("a", "b", "c"))
    assert glued(m, a, b)
    assert glued(m, b, c)
    assert not glued(m, a, c)


def sample_labeled(rng, model, count):
    out = []
    for _ in range(count):
        t = F(rng.randint(-8, 8), 4)
        x = F(rng.randint(-8, 8), 4)
        out.append(LabeledPoint(point(t, x), rng.choice(model.scenarios)))
    return out


def test_gluing_is_equivalence_on_validated_models():
    rng = random.Random(5)
    for m in build_random_battery():
        pts = sample_labeled(rng, m, 120)
        for a in pts[:40]:
            assert glued(m, a, a)
        for a, b in zip(pts, pts[1:]):
            assert glued(m, a, b) == glued(m, b, a)
        # transitivity over shared locations, where it has content
        for i in range(0, len(pts) - 2, 3):
            x = pts[i].point
            sa, sb, sc = (rng.choice(m.scenarios) for _ in range(3))
            a, b, c = LabeledPoint(x, sa), LabeledPoint(x, sb), LabeledPoint(x, sc)
            if glued(m, a, b) and glued(m, b, c):
                assert glued(m, a, c), (m, x, sa, sb, sc)


def test_induced_order_is_partial_order_on_validated_models():
    rng = random.Random(6)
    for m in build_random_battery():
        pts = sample_labeled(rng, m, 90)
        for a in pts[:30]:
            assert events.leq(m, a, a)
        for a, b in zip(pts, pts[1:]):
            if events.leq(m, a, b) and events.leq(m, b, a):
                assert same_event(m, a, b)
        for a, b, c in zip(pts, pts[1:], pts[2:]):
            if events.leq(m, a, b) and events.leq(m, b, c):
                assert events.leq(m, a, c), (m, a, b, c)
