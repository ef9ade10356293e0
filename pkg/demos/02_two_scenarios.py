"""Two scenarios glued everywhere except above one splitting point.

Loads a model file, validates it, and walks the quotient: where the two
labeled copies of a point are one event, where they separate, and which
choice point sits below any separated pair.
"""

from pathlib import Path

import minkbranch as mb
from minkbranch import events
from minkbranch.histories import ChainSample, History, prior_choice_witness, scenarios_at
from minkbranch.minkowski import point

model = mb.load(Path(__file__).parent / "models" / "two_scenarios.mbs")
print(mb.validate_model(model).render())
print()

for x in (point(-1, 0), point(0, 0), point(0, 5), point(1, 0), point(1, 1)):
    cls = mb.event_class(model, mb.LabeledPoint(x, "s1"))
    shared = model.in_overlap("s1", "s2", x)
    print(f"{x}: glued={shared}  event labels={sorted(cls.labels)}")
print()

h1 = History("s1")
print("scenario set along the time axis, as seen from history s1:")
for t in (-2, -1, 0, 1, 2):
    print(f"  t={t}: {sorted(scenarios_at(model, h1, point(t, 0)))}")
print()

# the induced order only climbs across labels while the lower point is glued
lo = mb.LabeledPoint(point(-2, 0), "s1")
hi = mb.LabeledPoint(point(-1, 0), "s2")
print(f"{lo} <= {hi}: {events.leq(model, lo, hi)}")
post = mb.LabeledPoint(point(1, 0), "s1")
later = mb.LabeledPoint(point(2, 0), "s2")
print(f"{post} <= {later}: {events.leq(model, post, later)}")
print()

# a chain living only in s1 has the splitting point strictly below it
chain = ChainSample.from_points([point(1, 0), point(2, 0)])
w = prior_choice_witness(model, "s1", "s2", chain)
print(f"chain {[p for p in chain]} lies outside the overlap;")
print(f"prior choice point: {w}")
