"""A descending tower of scenario sets with empty total intersection.

Scenarios here are binary sequences with finitely many zeros, one per
subset of positions.  The chain z_i = (i - 1/2, 0) ascends along the time
axis; at z_i exactly the scenarios starting with i zeros are still glued
to the chain's label.  Every finite stage is nonempty, but each individual
scenario eventually shows a 1 and drops out, so nothing survives all
stages.  The chain is bounded below and lives in a history, yet no single
label represents it for long.
"""

import minkbranch as mb
from minkbranch.binaryrow import scenarios_at_chain_point

DEPTH = 8

print(f"chain and glued scenario sets to depth {DEPTH}:")
for i, z in enumerate(mb.chain_points(DEPTH), start=1):
    at = scenarios_at_chain_point(i)
    samples = ", ".join(str(s) for s in at.samples(2))
    print(f"  z_{i} = {z}: {at}, e.g. {samples}")
print()

print(f"strict ascent verified through the event order: {mb.verify_chain(DEPTH)}")
print()

print("every scenario is excluded at the depth of its first 1:")
for zeros in ((), (0,), (0, 1, 2), (1, 4)):
    scenario = mb.ZeroSetScenario(frozenset(zeros))
    k = mb.exclusion_witness(scenario)
    print(f"  {scenario}: splits from the chain at (0, {k}), below z_{k + 1}")
print()

report = mb.centred_family_report(DEPTH, support_bound=4)
print(report.render())
