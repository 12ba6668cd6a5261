"""Brute-force semantics over explicit finite boxes.

Nothing here goes through the symbolic encodings: denotations are unfolded
from the raw configuration order, successors are computed by direct vector
arithmetic. The symbolic modules are checked against these functions.
"""

from __future__ import annotations

import graphlib
import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .ideals import Config, Dims, Ideal, config_leq
from .models import WVass

BOX_CAP = 10**7


class BoxTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Box:
    nat_hi: tuple[int, ...]
    wt_lo: tuple[int, ...]
    wt_hi: tuple[int, ...]

    @property
    def size(self) -> int:
        n = 1
        for hi in self.nat_hi:
            n *= max(hi + 1, 0)
        for lo, hi in zip(self.wt_lo, self.wt_hi):
            n *= max(hi - lo + 1, 0)
        return n

    def configs(self, q: str) -> Iterator[Config]:
        if self.size > BOX_CAP:
            raise BoxTooLarge(f"box of {self.size} points exceeds {BOX_CAP}")
        nat = [range(hi + 1) for hi in self.nat_hi]
        wt = [range(lo, hi + 1) for lo, hi in zip(self.wt_lo, self.wt_hi)]
        for x in itertools.product(*nat):
            for v in itertools.product(*wt):
                yield Config(q, x, v)

    def grow(self, k: int) -> "Box":
        return Box(
            tuple(h + k for h in self.nat_hi),
            tuple(lo - k for lo in self.wt_lo),
            tuple(h + k for h in self.wt_hi),
        )


def box_around(dims: Dims, ideals: Iterable[Ideal], margin: int = 2, shifts=()) -> Box:
    """Per-dimension box reaching ``margin`` beyond every finite constant
    (and beyond 0). ``shifts`` are extra (nat, wt) offsets applied to the
    constants, e.g. transition deltas."""
    nat_hi = [0] * dims.d
    wt_lo = [0] * dims.w
    wt_hi = [0] * dims.w
    offsets = [((0,) * dims.d, (0,) * dims.w)] + list(shifts)
    for ideal in ideals:
        for dn, dw in offsets:
            for i, a in enumerate(ideal.u):
                if a != math.inf:
                    nat_hi[i] = max(nat_hi[i], a + dn[i])
            for j, b in enumerate(ideal.m):
                if b != math.inf:
                    wt_lo[j] = min(wt_lo[j], b + dw[j])
                    wt_hi[j] = max(wt_hi[j], b + dw[j])
    return Box(
        tuple(h + margin for h in nat_hi),
        tuple(lo - margin for lo in wt_lo),
        tuple(h + margin for h in wt_hi),
    )


def _limit_in_box(ideal: Ideal, box: Box) -> Config:
    # a limit entry becomes one step past the box edge, which every box point is below
    x = tuple(hi + 1 if a == math.inf else a for a, hi in zip(ideal.u, box.nat_hi))
    v = tuple(hi + 1 if b == math.inf else b for b, hi in zip(ideal.m, box.wt_hi))
    return Config(ideal.q, x, v)


def box_members(dims: Dims, ideal: Ideal, box: Box) -> set[Config]:
    top = _limit_in_box(ideal, box)
    return {c for c in box.configs(ideal.q) if config_leq(dims, c, top)}


def box_members_union(dims: Dims, ideals: Iterable[Ideal], box: Box) -> set[Config]:
    out: set[Config] = set()
    for ideal in ideals:
        out |= box_members(dims, ideal, box)
    return out


def successors(model: WVass, c: Config) -> list[tuple[str, Config]]:
    out = []
    for t in model.transitions:
        if t.src != c.q:
            continue
        x = tuple(a + b for a, b in zip(c.x, t.nat))
        if min(x, default=0) < 0:
            continue
        out.append((t.name, Config(t.dst, x, tuple(a + b for a, b in zip(c.v, t.wt)))))
    return out


def down_in_box(dims: Dims, tops: Iterable[Config], box: Box, states) -> set[Config]:
    """Box points lying below some element of ``tops``."""
    # the lex order is total within one (q, x) column, so each column keeps its maximum
    best: dict = {}
    for c in tops:
        key = (c.q, c.x)
        if key not in best or best[key].v < c.v:
            best[key] = c
    by_state: dict = {}
    for c in best.values():
        by_state.setdefault(c.q, []).append(c)
    out = set()
    for q in states:
        cols = by_state.get(q)
        if not cols:
            continue
        for c in box.configs(q):
            if any(config_leq(dims, c, s) for s in cols):
                out.add(c)
    return out


def brute_post_box(model: WVass, sources: Iterable[Config], box: Box) -> set[Config]:
    succ = [s for c in sources for _, s in successors(model, c)]
    return down_in_box(model.dims, succ, box, model.states)


def brute_downset_post(model: WVass, ideals: Iterable[Ideal], box: Box) -> set[Config]:
    """↓Post of the ideals, restricted to ``box``.

    Sources are drawn from a box enlarged by the largest delta so that every
    point of ``box`` below some successor is below one with an in-range source.
    """
    ideals = list(ideals)
    reach = 1 + max(
        (abs(k) for t in model.transitions for k in t.nat + t.wt), default=0
    )
    src_box = box.grow(reach)
    sources = box_members_union(model.dims, ideals, src_box)
    return brute_post_box(model, sources, box)


# ---------------------------------------------------------------------------
# explicit exploration


@dataclass(frozen=True)
class Exploration:
    visited: frozenset
    cap_hit: bool
    cycle: bool
    comparable_pair: bool

    @property
    def conclusive(self) -> bool:
        return not self.cap_hit


def explore(model: WVass, x0: Config, state_cap: int, depth_cap: int) -> Exploration:
    """Breadth-first exploration of the reachable configurations."""
    if state_cap < 1 or depth_cap < 1:
        raise ValueError("caps must be >= 1")
    parent: dict[Config, Config | None] = {x0: None}
    depth = {x0: 0}
    edges: dict[Config, set] = {}
    queue = deque([x0])
    cap_hit = False
    pair = False
    while queue:
        c = queue.popleft()
        succ = successors(model, c)
        if succ and depth[c] >= depth_cap:
            cap_hit = True
            continue
        edges[c] = set()
        for _, s in succ:
            edges[c].add(s)
            anc = c
            while anc is not None and not pair:
                pair = config_leq(model.dims, anc, s) or config_leq(model.dims, s, anc)
                anc = parent[anc]
            if s in parent:
                continue
            if len(parent) >= state_cap:
                cap_hit = True
                continue
            parent[s] = c
            depth[s] = depth[c] + 1
            queue.append(s)
    try:
        tuple(graphlib.TopologicalSorter(edges).static_order())
        cycle = False
    except graphlib.CycleError:
        cycle = True
    return Exploration(frozenset(parent), cap_hit, cycle, pair)


def brute_cover(
    model: WVass, x: Config, y: Config, step_cap: int, state_cap: int
) -> tuple[str, ...] | None:
    """Shortest run from ``x`` to a configuration above ``y``; None if the
    caps run out first. A None answer says nothing about coverability."""
    if config_leq(model.dims, y, x):
        return ()
    back: dict[Config, tuple] = {x: None}
    frontier = [x]
    for _ in range(step_cap):
        nxt = []
        for c in frontier:
            for name, s in successors(model, c):
                if s in back:
                    continue
                back[s] = (c, name)
                if config_leq(model.dims, y, s):
                    run = []
                    while back[s] is not None:
                        s, name = back[s]
                        run.append(name)
                    return tuple(reversed(run))
                if len(back) >= state_cap:
                    return None
                nxt.append(s)
        if not nxt:
            return None
        frontier = nxt
    return None
