"""Histories, choice points, and the order axioms.

Each scenario label names one history: the set of events carrying that
label.  Within a history the induced order is plain Minkowski order, so
the interesting structure is where histories meet.  A choice point of two
histories is a maximal event of their intersection; every splitting point
is one (generated), and a family accumulating on a space-like limit makes
the limit a choice point as well without being a member (emergent).

The axiom suite samples exact witnesses for the order laws a branching
model must satisfy: density, no maximal elements, infima of lower-bounded
chains, within-label suprema, and the prior-choice principle (every chain
inside one history but outside another is preceded by a choice point of
the pair).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import events, minkowski
from .errors import ScenariosNotEnumerable, WitnessNotFound
from .events import LabeledPoint
from .minkowski import Point
from .model import BranchingModel, Model, ScenarioId, validate_model
from .reporting import Report
from .sampling import Sampler, SamplerConfig


@dataclass(frozen=True)
class History:
    """The history selected by one scenario label."""

    scenario: ScenarioId


@dataclass(frozen=True)
class ChainSample:
    """A finite, strictly ascending sample of a chain of locations.

    Construction validates that consecutive points are strictly ordered,
    which (by transitivity) makes the sample pairwise comparable.  An
    optional declared infimum must sit weakly below the first point.
    """

    points: tuple[Point, ...]
    declared_infimum: Point | None = None

    def __post_init__(self):
        pts = tuple(self.points)
        if not pts:
            raise ValueError("a chain sample needs at least one point")
        for a, b in zip(pts, pts[1:]):
            if not minkowski.lt(a, b):
                raise ValueError(f"chain points out of order: {a!r} before {b!r}")
        object.__setattr__(self, "points", pts)
        if self.declared_infimum is not None and not minkowski.leq(self.declared_infimum, pts[0]):
            raise ValueError("declared infimum does not precede the chain")

    @classmethod
    def from_points(cls, points, declared_infimum: Point | None = None) -> "ChainSample":
        ordered = sorted(points, key=lambda p: p.coords)
        return cls(tuple(ordered), declared_infimum)

    @property
    def minimum(self) -> Point:
        return self.points[0]

    @property
    def maximum(self) -> Point:
        return self.points[-1]

    def __iter__(self):
        return iter(self.points)


def in_history(model: BranchingModel, a: LabeledPoint, history: History) -> bool:
    """Does the event of this labeled point carry the history's label?"""
    return events.glued(model, a, LabeledPoint(a.point, history.scenario))


def scenarios_at(model: BranchingModel, history: History, x: Point) -> frozenset:
    """All labels whose copy of x is the history's event at x (finite models)."""
    labels = model.scenario_list()
    if labels is None:
        raise ScenariosNotEnumerable(
            "scenario set is not enumerable; use the binary-row closed form")
    model.require_scenario(history.scenario)
    return frozenset(s for s in labels if model.in_overlap(s, history.scenario, x))


def common_scenarios(model: BranchingModel, history: History, chain) -> frozenset:
    """Intersection of scenarios_at along a chain of locations.

    The per-point sets shrink as the chain ascends, so the result equals
    scenarios_at of the top point; it is computed as a real intersection
    anyway, since this function is the executable form of the compactness
    statement being tested.
    """
    points = list(chain)
    if not points:
        raise ValueError("empty chain")
    result: frozenset | None = None
    for x in points:
        here = scenarios_at(model, history, x)
        result = here if result is None else (result & here)
    return result


def is_generated_choice_point(model: BranchingModel, a: ScenarioId, b: ScenarioId,
                              x: Point) -> bool:
    """Is x a splitting point of the pair (the image of a family member)?"""
    if a == b:
        raise ValueError("choice points need two distinct scenarios")
    model.require_scenario(a)
    model.require_scenario(b)
    return model.family(a, b).contains(x)


def is_choice_point(model: BranchingModel, a: ScenarioId, b: ScenarioId, x: Point) -> bool:
    """Is x maximal in the intersection of the two histories?

    Decision procedure: family members are always choice points, and so are
    the family's space-like accumulation points (the harmonic center).  No
    other location is maximal: anything else in the overlap keeps an exact
    rational-sized escape wedge above it.  The grid oracle cross-checks
    this reduction rather than trusting it.
    """
    if a == b:
        raise ValueError("choice points need two distinct scenarios")
    model.require_scenario(a)
    model.require_scenario(b)
    fam = model.family(a, b)
    if fam.contains(x):
        return True
    return any(x == p for p in fam.accumulation_points())


def prior_choice_witness(model: BranchingModel, a: ScenarioId, b: ScenarioId,
                         chain: ChainSample) -> Point:
    """A choice point of the pair strictly below every element of the chain.

    Precondition (checked): every chain point lies in history a but not in
    history b, i.e. outside the pair's overlap region.  The witness search
    looks below the chain's minimum; strictness then propagates up the
    chain by transitivity.
    """
    if a == b:
        raise ValueError("the chain must leave one history of a distinct pair")
    for o in chain:
        if model.in_overlap(a, b, o):
            raise ValueError(
                f"chain point {o!r} is still glued across the pair; "
                "the chain must lie in one history minus the other")
    fam = model.family(a, b)
    witness = fam.first_strictly_below(chain.minimum)
    if witness is None:
        raise WitnessNotFound(
            f"no splitting point of ({a!r}, {b!r}) lies strictly below {chain.minimum!r}")
    for o in chain:
        if not minkowski.lt(witness, o):
            raise WitnessNotFound(f"witness {witness!r} does not precede {o!r}")
    if not is_choice_point(model, a, b, witness):
        raise WitnessNotFound(f"witness {witness!r} is not a choice point")
    return witness


def history_order_agrees(model: BranchingModel, history: History,
                         pairs) -> bool:
    """Within one history, induced order and Minkowski order must coincide.

    `pairs` is an iterable of location pairs; both orientations of each
    pair are checked through the real event-order code path.
    """
    s = history.scenario
    for x, y in pairs:
        for lo, hi in ((x, y), (y, x)):
            induced = events.leq(model, LabeledPoint(lo, s), LabeledPoint(hi, s))
            if induced != minkowski.leq(lo, hi):
                return False
    return True


# ---------------------------------------------------------------------------
# Axiom suite
# ---------------------------------------------------------------------------


def _check_density(model: Model, sampler: Sampler, cases: int):
    failures = []
    labels = model.scenario_list()
    for _ in range(cases):
        s = sampler.choice(labels)
        x = sampler.point()
        y = sampler.point_above(x)
        z = minkowski.between(x, y)
        lo, mid, hi = (LabeledPoint(p, s) for p in (x, z, y))
        if not (events.lt(model, lo, mid) and events.lt(model, mid, hi)):
            failures.append((x, y))
    return failures


def _check_no_maximal(model: Model, sampler: Sampler, cases: int):
    failures = []
    labels = model.scenario_list()
    bump = (minkowski.rational(1),) + (minkowski.rational(0),) * (model.dimension - 1)
    for _ in range(cases):
        s = sampler.choice(labels)
        x = sampler.point()
        above = x.translated(bump)
        if not events.lt(model, LabeledPoint(x, s), LabeledPoint(above, s)):
            failures.append(x)
    return failures


def _check_infima(model: Model, sampler: Sampler, cases: int):
    # Finite chains: the minimum is the infimum.  Verify it bounds the chain
    # and dominates sampled lower bounds, all through the event order.
    failures = []
    labels = model.scenario_list()
    for _ in range(cases):
        s = sampler.choice(labels)
        chain = sampler.ascending_chain(sampler.rng.randint(2, 5))
        inf = chain[0]
        ok = all(events.leq(model, LabeledPoint(inf, s), LabeledPoint(p, s)) for p in chain)
        for _ in range(3):
            delta = sampler.causal_delta()
            bound = inf.translated(tuple(-c for c in delta))
            ok = ok and events.leq(model, LabeledPoint(bound, s), LabeledPoint(inf, s))
        if not ok:
            failures.append(tuple(chain))
    return failures


def _check_suprema(model: Model, sampler: Sampler, cases: int):
    # Within-label suprema of finite chains: the maximum, checked in every
    # history that contains the whole chain.  Cross-label suprema at choice
    # points are noted, not certified.
    failures = []
    labels = model.scenario_list()
    for _ in range(cases):
        s = sampler.choice(labels)
        chain = sampler.ascending_chain(sampler.rng.randint(2, 5))
        sup = chain[-1]
        containing = [
            t for t in labels
            if all(model.in_overlap(s, t, p) for p in chain)
        ]
        ok = bool(containing)  # the label itself always contains its chain
        for t in containing:
            ok = ok and all(
                events.leq(model, LabeledPoint(p, s), LabeledPoint(sup, t)) for p in chain)
            for _ in range(2):
                upper = sup.translated(sampler.causal_delta())
                ok = ok and events.leq(model, LabeledPoint(sup, s), LabeledPoint(upper, t))
        if not ok:
            failures.append(tuple(chain))
    return failures


def _check_prior_choice(model: Model, sampler: Sampler, cases: int):
    failures = []
    pairs = []
    for a, b in model.scenario_pairs():
        fam = model.family(a, b)
        first = next(iter(fam.members(limit=4)), None)
        if first is not None:
            pairs.append((a, b, first))
    if not pairs:
        return failures, "no scenario pairs; principle holds vacuously"
    for _ in range(cases):
        a, b, seed_point = sampler.choice(pairs)
        start = seed_point.translated(sampler.causal_delta())
        chain = ChainSample(tuple(sampler.ascending_chain(3, start=start)))
        try:
            witness = prior_choice_witness(model, a, b, chain)
        except (ValueError, WitnessNotFound) as exc:
            failures.append((a, b, chain.minimum, str(exc)))
            continue
        if not is_generated_choice_point(model, a, b, witness) and not is_choice_point(
                model, a, b, witness):
            failures.append((a, b, chain.minimum, "witness not a choice point"))
    return failures, None


def run_axiom_suite(model: Model, config: SamplerConfig | None = None) -> Report:
    """Sampled exact verification of the order axioms on a validated model.

    Refuses to run (reporting the validation failure) when the model does
    not validate; the axioms are only meaningful over a genuine equivalence.
    """
    config = config or SamplerConfig()
    report = Report("axiom-suite")
    validation = validate_model(model)
    if not validation.passed:
        failed = ", ".join(r.name for r in validation.failures())
        report.add("validation-gate", False, f"model fails validation ({failed}); suite not run")
        return report
    report.add("validation-gate", True, "model validates")

    cases = config.cases
    sampler = Sampler(config, model.dimension)

    def summarize(name: str, failures, extra: str | None = None):
        detail = f"{cases} cases"
        if extra:
            detail += f"; {extra}"
        if failures:
            detail = f"{len(failures)}/{cases} failures; first: {failures[0]!r}"
        report.add(name, not failures, detail)

    summarize("density", _check_density(model, sampler, cases))
    summarize("no-maximal", _check_no_maximal(model, sampler, cases))
    summarize("chain-infima", _check_infima(model, sampler, cases))
    summarize("chain-suprema", _check_suprema(model, sampler, cases),
              "within-label; cross-label suprema at choice points not certified")
    pcp_failures, pcp_note = _check_prior_choice(model, sampler, cases)
    summarize("prior-choice", pcp_failures, pcp_note)
    return report
