import random

import pytest

import minkbranch as mb
from minkbranch.minkowski import point

# Seeds whose generated models span 2..5 scenarios; fixed so every run
# exercises the same battery.
BATTERY_SEEDS = (3, 7, 11, 19, 23, 42)


def build_random_battery(seeds=BATTERY_SEEDS):
    models = []
    for seed in seeds:
        models.append(mb.random_model(random.Random(seed)))
    return models


@pytest.fixture(scope="session")
def two_scenario_model():
    fam = mb.FiniteFamily((point(0, 0),))
    return mb.Model(2, ("s1", "s2"), {("s1", "s2"): fam})


@pytest.fixture(scope="session")
def harmonic_model():
    fam = mb.HarmonicPair(point(0, 0))
    return mb.Model(2, ("u", "v"), {("u", "v"): fam})


@pytest.fixture(scope="session")
def integer_row_model():
    fam = mb.IntegerRow(0)
    return mb.Model(2, ("p", "q"), {("p", "q"): fam})


@pytest.fixture(scope="session")
def triangle_violation_model():
    # Three scenarios whose pair families break the triangle condition:
    # each splitting point of (a, c) is space-like to both other families,
    # so gluing fails to be transitive at (1/2, 1).
    return mb.Model(2, ("a", "b", "c"), {
        ("a", "b"): mb.FiniteFamily((point(0, 0),)),
        ("b", "c"): mb.FiniteFamily((point(0, 2),)),
        ("a", "c"): mb.FiniteFamily((point(0, 1),)),
    })


@pytest.fixture(scope="session")
def random_battery():
    models = build_random_battery()
    assert len(models) >= 5
    assert any(len(m.scenarios) >= 3 for m in models)
    return models
