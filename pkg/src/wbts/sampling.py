"""Seeded random instances for oracle comparisons and experiment scripts."""

from __future__ import annotations

import random

from .ideals import INF, OMEGA, Config, Dims, Ideal
from .models import Transition, WVass

STATE_NAMES = ("p", "q", "r")


def random_dims(rng: random.Random, max_total: int = 3, d: int | None = None) -> Dims:
    while True:
        dd = rng.randint(0, max_total) if d is None else d
        w = rng.randint(0, max_total - dd)
        if dd + w >= 1:
            return Dims(dd, w)


def random_model(
    rng: random.Random,
    dims: Dims,
    n_states: int = 3,
    n_trans: int = 4,
    const: int = 3,
    zero_bias: float = 0.0,
) -> WVass:
    states = STATE_NAMES[:n_states]

    def entry() -> int:
        return 0 if rng.random() < zero_bias else rng.randint(-const, const)

    transitions = []
    for k in range(n_trans):
        transitions.append(
            Transition(
                f"t{k}",
                rng.choice(states),
                rng.choice(states),
                tuple(entry() for _ in range(dims.d)),
                tuple(entry() for _ in range(dims.w)),
            )
        )
    return WVass(dims, states, tuple(transitions))


def random_config(rng: random.Random, dims: Dims, states, const: int = 3) -> Config:
    return Config(
        rng.choice(list(states)),
        tuple(rng.randint(0, const) for _ in range(dims.d)),
        tuple(rng.randint(-const, const) for _ in range(dims.w)),
    )


def random_ideal(rng: random.Random, dims: Dims, states=("q",), const: int = 3) -> Ideal:
    q = rng.choice(list(states))
    u = tuple(OMEGA if rng.random() < 0.2 else rng.randint(0, const) for _ in range(dims.d))
    if OMEGA in u:
        return Ideal(q, u, (INF,) * dims.w)
    k = rng.randint(0, dims.w)
    prefix = tuple(rng.randint(-const, const) for _ in range(k))
    return Ideal(q, u, prefix + (INF,) * (dims.w - k))


def random_ideals(rng: random.Random, dims: Dims, n: int, states=("q",), const: int = 3):
    return [random_ideal(rng, dims, states, const) for _ in range(n)]
