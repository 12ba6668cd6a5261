"""Weighted (d, w)-VASS: model definition, concrete and symbolic steps, text format."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .ideals import (
    Config,
    Dims,
    DimensionError,
    DownSet,
    Ideal,
    UnsupportedModel,
    _check_config,
    _check_ideal,
    minimize,
    UpSet,
    parse_ints,
)


@dataclass(frozen=True)
class Transition:
    name: str
    src: str
    dst: str
    nat: tuple[int, ...]
    wt: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "nat", tuple(self.nat))
        object.__setattr__(self, "wt", tuple(self.wt))


@dataclass(frozen=True)
class WVass:
    dims: Dims
    states: tuple[str, ...]
    transitions: tuple[Transition, ...]

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "transitions", tuple(self.transitions))

    def transition(self, name: str) -> Transition:
        for t in self.transitions:
            if t.name == name:
                return t
        raise KeyError(name)


@dataclass(frozen=True)
class Run:
    start: Config
    steps: tuple[str, ...] = ()


class GuardViolation(ValueError):
    pass


def validate(model: WVass) -> list[str]:
    """All violated well-formedness conditions; empty when the model is fine."""
    errors = []
    d, w = model.dims.d, model.dims.w
    if len(set(model.states)) != len(model.states):
        errors.append("duplicate control state")
    seen = set()
    for t in model.transitions:
        if t.name in seen:
            errors.append(f"duplicate transition name {t.name!r}")
        seen.add(t.name)
        for end in (t.src, t.dst):
            if end not in model.states:
                errors.append(f"transition {t.name!r}: undeclared state {end!r}")
        if len(t.nat) != d:
            errors.append(f"transition {t.name!r}: nat delta has {len(t.nat)} entries, expected {d}")
        if len(t.wt) != w:
            errors.append(f"transition {t.name!r}: wt delta has {len(t.wt)} entries, expected {w}")
    return errors


# ---------------------------------------------------------------------------
# concrete semantics


def fire(t: Transition, c: Config) -> Config | None:
    """Successor of ``c`` through ``t``, or None if ``t`` is disabled."""
    if c.q != t.src:
        return None
    x = tuple(a + b for a, b in zip(c.x, t.nat))
    if any(n < 0 for n in x):
        return None
    return Config(t.dst, x, tuple(a + b for a, b in zip(c.v, t.wt)))


def post_configs(model: WVass, c: Config) -> list[tuple[str, Config]]:
    _check_config(model.dims, c)
    out = []
    for t in model.transitions:
        succ = fire(t, c)
        if succ is not None:
            out.append((t.name, succ))
    return out


def replay(model: WVass, start: Config, steps: Iterable[str]) -> Config:
    """Execute ``steps`` from ``start``; raises GuardViolation on a blocked step."""
    c = start
    for i, name in enumerate(steps):
        succ = fire(model.transition(name), c)
        if succ is None:
            raise GuardViolation(f"step {i} ({name}) is not enabled at {c}")
        c = succ
    return c


# ---------------------------------------------------------------------------
# symbolic semantics


def ideal_post_t(model: WVass, t: Transition, ideal: Ideal) -> Ideal | None:
    """Down-closure of the ``t``-successors of ``ideal``; None when empty."""
    _check_ideal(model.dims, ideal)
    if ideal.q != t.src:
        return None
    u = tuple(a + b for a, b in zip(ideal.u, t.nat))  # inf + k stays inf
    if any(a < 0 for a in u):
        return None
    m = tuple(a + b for a, b in zip(ideal.m, t.wt))
    return Ideal(t.dst, u, m)


def downset_post(model: WVass, ds: DownSet) -> DownSet:
    images = (ideal_post_t(model, t, i) for i in ds.ideals for t in model.transitions)
    return minimize(model.dims, (i for i in images if i is not None))


def backward_step(model: WVass, up: UpSet) -> UpSet:
    """``up`` together with the predecessors of ``up`` (d = 0 only)."""
    if model.dims.d:
        raise UnsupportedModel("backward iteration needs d = 0")
    minima = up.as_dict()
    new = dict(minima)
    for t in model.transitions:
        low = minima.get(t.dst)
        if low is None:
            continue
        cand = tuple(a - b for a, b in zip(low, t.wt))
        if t.src not in new or cand < new[t.src]:
            new[t.src] = cand
    return UpSet.of(new)


# ---------------------------------------------------------------------------
# text format


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


_HEADER = re.compile(r"^model\s+weighted\s+d\s*=\s*(\d+)\s+w\s*=\s*(\d+)$")
_TRANS = re.compile(
    r"^trans\s+([A-Za-z_][\w.']*)\s*:\s*([A-Za-z_][\w.']*)\s*->\s*([A-Za-z_][\w.']*)"
    r"\s*nat\(([^)]*)\)\s*wt\(([^)]*)\)$"
)
_IDENT = re.compile(r"^[A-Za-z_][\w.']*$")


def parse_model(text: str) -> WVass:
    dims = None
    states: list[str] | None = None
    transitions: list[Transition] = []
    names: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("model"):
            match = _HEADER.match(line)
            if not match:
                raise ParseError(lineno, "expected 'model weighted d=<int> w=<int>'")
            if dims is not None:
                raise ParseError(lineno, "duplicate model header")
            try:
                dims = Dims(int(match.group(1)), int(match.group(2)))
            except DimensionError as exc:
                raise ParseError(lineno, str(exc)) from None
        elif line.startswith("states"):
            if dims is None:
                raise ParseError(lineno, "'states' before model header")
            if states is not None:
                raise ParseError(lineno, "duplicate 'states' line")
            states = line.split()[1:]
            for q in states:
                if not _IDENT.match(q):
                    raise ParseError(lineno, f"bad state name {q!r}")
            if len(set(states)) != len(states):
                raise ParseError(lineno, "duplicate state name")
        elif line.startswith("trans"):
            if dims is None:
                raise ParseError(lineno, "'trans' before model header")
            if states is None:
                raise ParseError(lineno, "'trans' before 'states' line")
            match = _TRANS.match(line)
            if not match:
                raise ParseError(lineno, "expected 'trans <name>: <src> -> <dst> nat(...) wt(...)'")
            name, src, dst, nat_s, wt_s = match.groups()
            for q in (src, dst):
                if q not in states:
                    raise ParseError(lineno, f"undeclared state {q!r}")
            if name in names:
                raise ParseError(lineno, f"duplicate transition name {name!r}")
            try:
                nat, wt = parse_ints(nat_s), parse_ints(wt_s)
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
            if len(nat) != dims.d:
                raise ParseError(lineno, f"nat() has {len(nat)} entries, expected d={dims.d}")
            if len(wt) != dims.w:
                raise ParseError(lineno, f"wt() has {len(wt)} entries, expected w={dims.w}")
            names.add(name)
            transitions.append(Transition(name, src, dst, nat, wt))
        else:
            raise ParseError(lineno, f"unrecognised line {line!r}")
    if dims is None:
        raise ParseError(0, "missing model header")
    if states is None:
        raise ParseError(0, "missing 'states' line")
    return WVass(dims, tuple(states), tuple(transitions))


def render_model(model: WVass) -> str:
    lines = [
        f"model weighted d={model.dims.d} w={model.dims.w}",
        "states " + " ".join(model.states),
    ]
    for t in model.transitions:
        nat = ",".join(map(str, t.nat))
        wt = ",".join(map(str, t.wt))
        lines.append(f"trans {t.name}: {t.src} -> {t.dst} nat({nat}) wt({wt})")
    return "\n".join(lines) + "\n"


def make_model(d: int, w: int, states: Sequence[str], transitions: Sequence[tuple]) -> WVass:
    """Shorthand: ``transitions`` holds ``(name, src, dst, nat, wt)`` tuples."""
    return WVass(Dims(d, w), tuple(states), tuple(Transition(*t) for t in transitions))
