"""Random sweep: compare decide_cover with breadth-first search, and the
antichain-tree deciders with bounded exploration, on small random models.

    python3 scripts/agreement_sweep.py --samples 200 --seed 1
"""

import argparse
import random
import time
from collections import Counter

from wbts.antichain import decide_boundedness, decide_termination
from wbts.coverability import Coverable, NotCoverable, check_hint, decide_cover
from wbts.ideals import config_leq
from wbts.models import replay
from wbts.oracle import brute_cover, explore
from wbts.sampling import random_config, random_dims, random_model


def cover_sweep(rng, samples, budget):
    tally = Counter()
    for _ in range(samples):
        dims = random_dims(rng)
        m = random_model(rng, dims, n_states=rng.randint(1, 3), n_trans=rng.randint(1, 4))
        x, y = random_config(rng, dims, m.states), random_config(rng, dims, m.states)
        brute = brute_cover(m, x, y, 30, 20000)
        got = decide_cover(m, x, y, budget=budget)
        if isinstance(got, Coverable):
            ok = config_leq(dims, y, replay(m, x, got.run))
            tally["coverable" if ok else "BAD RUN"] += 1
        elif isinstance(got, NotCoverable):
            ok = brute is None and check_hint(m, got.invariant, x, y)
            tally[f"not coverable ({got.source})" if ok else "DISAGREE"] += 1
        else:
            tally["unknown" + (" (bfs found run)" if brute is not None else "")] += 1
    return tally


def tree_sweep(rng, samples):
    tally = Counter()
    for _ in range(samples):
        dims = random_dims(rng, max_total=2, d=0)
        m = random_model(rng, dims, n_states=rng.randint(1, 3), n_trans=rng.randint(0, 4), const=2, zero_bias=0.6)
        x0 = random_config(rng, dims, m.states, const=2)
        term, bnd = decide_termination(m, x0), decide_boundedness(m, x0)
        res = explore(m, x0, 5000, 500)
        if not res.conclusive:
            tally["explore inconclusive"] += 1
        elif term.holds == (not res.cycle) and bnd.holds:
            tally["agree"] += 1
        else:
            tally["DISAGREE"] += 1
        tally[f"terminates={term.holds} bounded={bnd.holds}"] += 1
    return tally


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--budget", type=int, default=2000)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    for name, run in (
        ("coverability", lambda: cover_sweep(rng, args.samples, args.budget)),
        ("antichain tree", lambda: tree_sweep(rng, args.samples)),
    ):
        t0 = time.perf_counter()
        tally = run()
        print(f"== {name} ({time.perf_counter() - t0:.1f}s)")
        for key, n in sorted(tally.items()):
            print(f"  {key:40s} {n}")


if __name__ == "__main__":
    main()
