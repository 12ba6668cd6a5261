"""Forward coverability: saturation of the reachable down-set dovetailed with
enumeration of inductive invariants.

Saturation (``Procedure1``) only terminates on coverable instances, the
invariant search only on non-coverable ones; interleaving them gives a
decision procedure. Every verdict is re-checked before it is returned.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterator, Union

from .ideals import (
    Config,
    DimensionError,
    DownSet,
    Ideal,
    UnsupportedModel,
    UpSet,
    _check_config,
    _check_ideal,
    config_leq,
    down_of_config,
    downset_includes,
    downset_member,
    enumerate_all_downsets,
    ideal_member,
    is_canonical,
    maximal_ideals,
)
from .models import WVass, backward_step, downset_post, ideal_post_t, replay

log = logging.getLogger(__name__)

CANDIDATES_PER_ROUND = 64
DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class Coverable:
    run: tuple[str, ...]
    endpoint: Config
    rounds: int = 0


@dataclass(frozen=True)
class NotCoverable:
    invariant: DownSet
    source: str = "enumeration"  # or "fixpoint", "hint"
    rounds: int = 0


@dataclass(frozen=True)
class Unknown:
    rounds: int


@dataclass(frozen=True)
class FixpointInvariant:
    invariant: DownSet
    rounds: int


@dataclass(frozen=True)
class CapExceeded:
    downset: DownSet
    rounds: int


CoverVerdict = Union[Coverable, NotCoverable, Unknown]


def _check_query(model: WVass, x: Config, y: Config) -> None:
    _check_config(model.dims, x)
    _check_config(model.dims, y)
    for c in (x, y):
        if c.q not in model.states:
            raise DimensionError(f"unknown control state {c.q!r}")


# ---------------------------------------------------------------------------
# saturation


@dataclass
class Procedure1:
    """Round-by-round saturation of ↓x, each ideal tagged with the run that
    produced it. Starting from a finite ideal every ideal stays finite, so a
    tag replays to exactly the limit point of its ideal."""

    model: WVass
    x: Config
    y: Config
    rounds: int = 0
    runs: dict = field(default_factory=dict)
    frontier: list = field(default_factory=list)

    def __post_init__(self):
        _check_query(self.model, self.x, self.y)
        start = down_of_config(self.model.dims, self.x)
        self.runs = {start: ()}
        self.frontier = [start]

    @property
    def downset(self) -> DownSet:
        return DownSet(frozenset(self.runs))

    def witness(self) -> Coverable | None:
        dims = self.model.dims
        for ideal in sorted(self.runs, key=Ideal.sort_key):
            if ideal_member(dims, ideal, self.y):
                run = self.runs[ideal]
                return Coverable(run, replay(self.model, self.x, run), self.rounds)
        return None

    def step(self) -> bool:
        """One round ``D <- D ∪ ↓Post(D)``; returns False at a fixpoint.

        Ideals already present last round had their successors added then,
        so only the ideals that are new need to be pushed through."""
        dims = self.model.dims
        candidates = dict(self.runs)
        for ideal in sorted(self.frontier, key=Ideal.sort_key):
            for t in self.model.transitions:
                image = ideal_post_t(self.model, t, ideal)
                if image is not None and image not in candidates:
                    candidates[image] = self.runs[ideal] + (t.name,)
        kept = maximal_ideals(dims, candidates)
        self.frontier = [i for i in kept if i not in self.runs]
        self.runs = {i: candidates[i] for i in kept}
        self.rounds += 1
        return bool(self.frontier)


def procedure1_run(
    model: WVass, x: Config, y: Config, cap: int
) -> Coverable | FixpointInvariant | CapExceeded:
    p1 = Procedure1(model, x, y)
    while True:
        found = p1.witness()
        if found is not None:
            return found
        if p1.rounds >= cap:
            return CapExceeded(p1.downset, p1.rounds)
        if not p1.step():
            # nothing new: D is inductive, holds x and misses y
            return FixpointInvariant(p1.downset, p1.rounds)


# ---------------------------------------------------------------------------
# invariant checking


def is_inductive(model: WVass, ds: DownSet) -> bool:
    return downset_includes(model.dims, downset_post(model, ds), ds)


def check_hint(model: WVass, ds: DownSet, x: Config, y: Config) -> bool:
    dims = model.dims
    return (
        downset_member(dims, x, ds)
        and not downset_member(dims, y, ds)
        and is_inductive(model, ds)
    )


def validate_hint(model: WVass, ds: DownSet) -> list[str]:
    problems = []
    for ideal in ds.ideals:
        try:
            _check_ideal(model.dims, ideal)
        except DimensionError as exc:
            problems.append(str(exc))
        if ideal.q not in model.states:
            problems.append(f"unknown control state {ideal.q!r}")
    if not problems and not is_canonical(model.dims, ds):
        problems.append("hint ideals are not an inclusion antichain")
    return problems


def candidate_invariants(model: WVass) -> Iterator[DownSet]:
    return enumerate_all_downsets(model.dims, model.states)


# ---------------------------------------------------------------------------
# decision procedure


def decide_cover(
    model: WVass,
    x: Config,
    y: Config,
    budget: int | None = DEFAULT_BUDGET,
    hint: DownSet | None = None,
) -> CoverVerdict:
    """Decide whether some configuration above ``y`` is reachable from ``x``.

    ``budget`` counts dovetail rounds; ``None`` means unlimited. A rejected
    hint is logged and otherwise ignored.
    """
    _check_query(model, x, y)
    if hint is not None:
        problems = validate_hint(model, hint)
        if problems:
            log.warning("ignoring invalid hint: %s", "; ".join(problems))
        elif check_hint(model, hint, x, y):
            return NotCoverable(hint, "hint", 0)
        else:
            log.info("hint is not a separating inductive invariant")

    p1 = Procedure1(model, x, y)
    candidates = candidate_invariants(model)
    rounds = itertools.count(1) if budget is None else range(1, budget + 1)
    found = p1.witness()
    if found is not None:
        return _verified(model, x, y, found)
    for r in rounds:
        if not p1.step():
            found = p1.witness()
            if found is not None:
                return _verified(model, x, y, found)
            return _verified(model, x, y, NotCoverable(p1.downset, "fixpoint", r))
        found = p1.witness()
        if found is not None:
            return _verified(model, x, y, Coverable(found.run, found.endpoint, r))
        for ds in itertools.islice(candidates, CANDIDATES_PER_ROUND):
            if check_hint(model, ds, x, y):
                return _verified(model, x, y, NotCoverable(ds, "enumeration", r))
    return Unknown(budget)


def _verified(model: WVass, x: Config, y: Config, verdict):
    if isinstance(verdict, Coverable):
        end = replay(model, x, verdict.run)
        if end != verdict.endpoint or not config_leq(model.dims, y, end):
            raise AssertionError(f"run {verdict.run} does not cover {y}")
    elif isinstance(verdict, NotCoverable):
        if not check_hint(model, verdict.invariant, x, y):
            raise AssertionError(f"invariant {verdict.invariant} does not separate")
    return verdict


# ---------------------------------------------------------------------------
# backward iteration (d = 0)


@dataclass(frozen=True)
class BackwardResult:
    trace: tuple[UpSet, ...]
    outcome: str  # "coverable", "stabilized" or "diverged"
    steps: int


def backward_capped(model: WVass, x: Config, y: Config, steps: int) -> BackwardResult:
    """Iterate ↑Pre from ↑y at most ``steps`` times."""
    if model.dims.d:
        raise UnsupportedModel("backward iteration needs d = 0")
    _check_query(model, x, y)
    up = UpSet.of({y.q: y.v})
    trace = [up]
    if up.contains(x):
        return BackwardResult(tuple(trace), "coverable", 0)
    for k in range(1, steps + 1):
        nxt = backward_step(model, up)
        if nxt == up:
            return BackwardResult(tuple(trace), "stabilized", k)
        trace.append(nxt)
        up = nxt
        if up.contains(x):
            return BackwardResult(tuple(trace), "coverable", k)
    return BackwardResult(tuple(trace), "diverged", steps)
