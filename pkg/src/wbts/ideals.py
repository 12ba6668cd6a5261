"""Configurations, ideals and downward-closed sets of weighted VASS.

Configurations ``q(x, v)`` carry ``d`` natural counters ``x`` and ``w``
integer weights ``v``. They are ordered by control state first, then by
the strict product order on ``x``, with ``v`` compared lexicographically
only as a tie-breaker when the counters are equal.

An ideal is the down-closure of a *limit point* ``(q, u, m)`` where ``u``
may contain ``OMEGA`` and ``m`` may end in a run of ``INF``. Both limits
are represented by ``math.inf`` so that Python's native tuple comparison
already implements the extended lexicographic order.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

OMEGA = math.inf
INF = math.inf

class DimensionError(ValueError):
    """Raised when a vector does not match the declared dimensions."""


class UnsupportedModel(ValueError):
    """Raised when an operation is not available for a model class."""


@dataclass(frozen=True)
class Dims:
    d: int
    w: int

    def __post_init__(self):
        if self.d < 0 or self.w < 0 or self.d + self.w < 1:
            raise DimensionError(f"invalid dimensions d={self.d} w={self.w}")


@dataclass(frozen=True, order=True)
class Config:
    q: str
    x: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(self.x))
        object.__setattr__(self, "v", tuple(self.v))
        if any(n < 0 for n in self.x):
            raise ValueError(f"negative counter in {self.x}")

    def __str__(self) -> str:
        return render_config(self)


@dataclass(frozen=True)
class Ideal:
    q: str
    u: tuple
    m: tuple

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "m", tuple(self.m))
        if any(a != OMEGA and a < 0 for a in self.u):
            raise ValueError(f"negative counter bound in {self.u}")
        seen_inf = False
        for b in self.m:
            if b == INF:
                seen_inf = True
            elif seen_inf:
                raise ValueError(f"+inf entries must form a suffix: {self.m}")
        if OMEGA in self.u and any(b != INF for b in self.m):
            raise ValueError("an omega counter forces every weight bound to +inf")

    @property
    def finite(self) -> bool:
        return OMEGA not in self.u and INF not in self.m

    def sort_key(self) -> tuple:
        return (self.q, self.u, self.m)

    def __str__(self) -> str:
        return render_ideal(self)


def _check_config(dims: Dims, c: Config) -> None:
    if len(c.x) != dims.d or len(c.v) != dims.w:
        raise DimensionError(f"{c} does not conform to d={dims.d} w={dims.w}")


def _check_ideal(dims: Dims, ideal: Ideal) -> None:
    if len(ideal.u) != dims.d or len(ideal.m) != dims.w:
        raise DimensionError(f"{ideal} does not conform to d={dims.d} w={dims.w}")


# ---------------------------------------------------------------------------
# ordering


def nat_lt(x: Sequence, y: Sequence) -> bool:
    """Strict product order: componentwise <= and different somewhere."""
    return all(a <= b for a, b in zip(x, y)) and tuple(x) != tuple(y)


def config_leq(dims: Dims, a: Config, b: Config) -> bool:
    _check_config(dims, a)
    _check_config(dims, b)
    if a.q != b.q:
        return False
    if a.x == b.x:
        return a.v <= b.v
    return nat_lt(a.x, b.x)


def config_lt(dims: Dims, a: Config, b: Config) -> bool:
    return a != b and config_leq(dims, a, b)


def comparable(dims: Dims, a: Config, b: Config) -> bool:
    return config_leq(dims, a, b) or config_leq(dims, b, a)


# ---------------------------------------------------------------------------
# ideals


def ideal_member(dims: Dims, ideal: Ideal, c: Config) -> bool:
    _check_ideal(dims, ideal)
    _check_config(dims, c)
    if ideal.q != c.q or not all(a <= b for a, b in zip(c.x, ideal.u)):
        return False
    if c.x == ideal.u:
        return c.v <= ideal.m
    return True


def ideal_includes(dims: Dims, small: Ideal, big: Ideal) -> bool:
    """Decide ``small ⊆ big`` by comparing limit points."""
    _check_ideal(dims, small)
    _check_ideal(dims, big)
    if small.q != big.q or not all(a <= b for a, b in zip(small.u, big.u)):
        return False
    if small.u == big.u:
        return small.m <= big.m
    return True


def down_of_config(dims: Dims, c: Config) -> Ideal:
    _check_config(dims, c)
    return Ideal(c.q, c.x, c.v)


def top_ideal(dims: Dims, q: str) -> Ideal:
    """The ideal holding every configuration of control state ``q``."""
    if dims.d:
        return Ideal(q, (OMEGA,) * dims.d, (INF,) * dims.w)
    return Ideal(q, (), (INF,) * dims.w)


# ---------------------------------------------------------------------------
# downward-closed sets


@dataclass(frozen=True)
class DownSet:
    """Finite union of ideals kept as a per-state inclusion antichain.

    Build instances through :func:`minimize` or :func:`downset_union`;
    the constructor does not re-canonicalize.
    """

    ideals: frozenset = field(default_factory=frozenset)

    def __iter__(self) -> Iterator[Ideal]:
        return iter(sorted(self.ideals, key=Ideal.sort_key))

    def __len__(self) -> int:
        return len(self.ideals)

    def __bool__(self) -> bool:
        return bool(self.ideals)

    def by_state(self) -> dict[str, list[Ideal]]:
        out: dict[str, list[Ideal]] = {}
        for ideal in self:
            out.setdefault(ideal.q, []).append(ideal)
        return out

    def __str__(self) -> str:
        if not self.ideals:
            return "{}"
        return "{" + ", ".join(render_ideal(i) for i in self) + "}"


EMPTY = DownSet()


def maximal_ideals(dims: Dims, ideals: Iterable[Ideal]) -> list[Ideal]:
    """The inclusion-maximal elements of ``ideals``, duplicates removed."""
    uniq = sorted(set(ideals), key=Ideal.sort_key)
    for ideal in uniq:
        _check_ideal(dims, ideal)
    return [
        i
        for i in uniq
        if not any(j != i and ideal_includes(dims, i, j) for j in uniq if j.q == i.q)
    ]


def minimize(dims: Dims, ideals: Iterable[Ideal]) -> DownSet:
    return DownSet(frozenset(maximal_ideals(dims, ideals)))


def downset_union(dims: Dims, a: DownSet, b: DownSet) -> DownSet:
    return minimize(dims, itertools.chain(a.ideals, b.ideals))


def ideal_in_downset(dims: Dims, ideal: Ideal, ds: DownSet) -> bool:
    return any(j.q == ideal.q and ideal_includes(dims, ideal, j) for j in ds.ideals)


def downset_includes(dims: Dims, small: DownSet, big: DownSet) -> bool:
    """``small ⊆ big``: each ideal of ``small`` must sit inside one ideal of ``big``."""
    return all(ideal_in_downset(dims, i, big) for i in small.ideals)


def downset_member(dims: Dims, c: Config, ds: DownSet) -> bool:
    return ideal_in_downset(dims, down_of_config(dims, c), ds)


def is_canonical(dims: Dims, ds: DownSet) -> bool:
    ideals = list(ds.ideals)
    for i in ideals:
        _check_ideal(dims, i)
    return all(
        not ideal_includes(dims, i, j) for i in ideals for j in ideals if i != j
    )


# ---------------------------------------------------------------------------
# up-sets (d = 0 only)


@dataclass(frozen=True)
class UpSet:
    """Per-state lex up-closure of a single minimal weight vector."""

    minima: tuple  # sorted tuple of (state, weight vector)

    @classmethod
    def of(cls, minima: Mapping[str, Sequence[int]]) -> "UpSet":
        return cls(tuple(sorted((q, tuple(v)) for q, v in minima.items())))

    def as_dict(self) -> dict[str, tuple[int, ...]]:
        return dict(self.minima)

    def contains(self, c: Config) -> bool:
        low = self.as_dict().get(c.q)
        return low is not None and c.v >= low


# ---------------------------------------------------------------------------
# enumeration of candidate invariants


def _ideals_within(dims: Dims, q: str, bound: int) -> list[Ideal]:
    nat_vals = list(range(bound + 1)) + [OMEGA]
    wt_vals = range(-bound, bound + 1)
    out = []
    for u in itertools.product(nat_vals, repeat=dims.d):
        if OMEGA in u:
            out.append(Ideal(q, u, (INF,) * dims.w))
            continue
        for k in range(dims.w + 1):
            for prefix in itertools.product(wt_vals, repeat=k):
                out.append(Ideal(q, u, prefix + (INF,) * (dims.w - k)))
    out.sort(key=Ideal.sort_key)
    return out


def _state_antichains(dims: Dims, q: str, bound: int) -> list[tuple[Ideal, ...]]:
    pool = _ideals_within(dims, q, bound)
    # lex order is total, so with d = 0 no antichain holds two ideals of one state
    max_size = 1 if dims.d == 0 else bound
    by_size: list[list[tuple[Ideal, ...]]] = [[] for _ in range(max_size + 1)]

    def extend(chosen: tuple[Ideal, ...], start: int) -> None:
        by_size[len(chosen)].append(chosen)
        if len(chosen) == max_size:
            return
        for k in range(start, len(pool)):
            cand = pool[k]
            if all(
                not ideal_includes(dims, cand, c) and not ideal_includes(dims, c, cand)
                for c in chosen
            ):
                extend(chosen + (cand,), k + 1)

    extend((), 0)
    return [chain for group in by_size for chain in group]


def fits_bound(dims: Dims, ds: DownSet, bound: int) -> bool:
    """Whether ``ds`` is among the sets emitted by ``enumerate_downsets(bound)``."""
    for ideals in ds.by_state().values():
        if len(ideals) > bound:
            return False
    for i in ds.ideals:
        if any(a != OMEGA and a > bound for a in i.u):
            return False
        if any(b != INF and abs(b) > bound for b in i.m):
            return False
    return True


def enumerate_downsets(
    dims: Dims, states: Sequence[str], bound: int
) -> Iterator[DownSet]:
    """Every canonical down-set with at most ``bound`` ideals per state and
    finite constants of magnitude at most ``bound``, in a fixed order."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    per_state = [_state_antichains(dims, q, bound) for q in states]
    for combo in itertools.product(*per_state):
        yield DownSet(frozenset(itertools.chain.from_iterable(combo)))


def enumerate_all_downsets(dims: Dims, states: Sequence[str]) -> Iterator[DownSet]:
    """Every canonical down-set exactly once, by increasing bound."""
    bound = 1
    while True:
        for ds in enumerate_downsets(dims, states, bound):
            if bound == 1 or not fits_bound(dims, ds, bound - 1):
                yield ds
        bound += 1


# ---------------------------------------------------------------------------
# text rendering


def _fmt(values: Iterable, top: str) -> str:
    return ",".join(top if a == math.inf else str(a) for a in values)


def render_config(c: Config) -> str:
    return f"{c.q} nat({_fmt(c.x, 'omega')}) wt({_fmt(c.v, '+inf')})"


def render_ideal(ideal: Ideal) -> str:
    return f"{ideal.q} : nat({_fmt(ideal.u, 'omega')}) wt({_fmt(ideal.m, '+inf')})"


_IDENT = r"[A-Za-z_][A-Za-z0-9_.']*"
_IDEAL_RE = re.compile(rf"^\s*({_IDENT})\s*:\s*nat\(([^)]*)\)\s*wt\(([^)]*)\)\s*$")
_CONFIG_RE = re.compile(rf"^\s*({_IDENT})\s+nat\(([^)]*)\)\s*wt\(([^)]*)\)\s*$")


def parse_ints(text: str, top: str | None = None) -> tuple:
    """Parse a comma-separated vector; ``top`` names the allowed limit token."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if top is not None and tok == top:
            out.append(math.inf)
            continue
        try:
            out.append(int(tok))
        except ValueError:
            raise ValueError(f"bad vector entry {tok!r}") from None
    return tuple(out)


def parse_ideal(text: str, dims: Dims | None = None) -> Ideal:
    match = _IDEAL_RE.match(text)
    if not match:
        raise ValueError(f"cannot parse ideal {text!r}")
    q, nat, wt = match.groups()
    ideal = Ideal(q, parse_ints(nat, "omega"), parse_ints(wt, "+inf"))
    if dims is not None:
        _check_ideal(dims, ideal)
    return ideal


def parse_config(text: str, dims: Dims | None = None) -> Config:
    match = _CONFIG_RE.match(text)
    if not match:
        raise ValueError(f"cannot parse configuration {text!r}")
    q, nat, wt = match.groups()
    c = Config(q, parse_ints(nat), parse_ints(wt))
    if dims is not None:
        _check_config(dims, c)
    return c
