"""Run the backward iteration and the forward decider side by side on a model.

    python3 scripts/backward_vs_forward.py models/lexloop.wvass --from "q nat() wt(0,0)" --to "q nat() wt(1,1)"
"""

import argparse
import time
from pathlib import Path

from wbts.coverability import backward_capped, decide_cover
from wbts.ideals import parse_config, render_ideal
from wbts.models import parse_model


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("model", type=Path)
    ap.add_argument("--from", dest="src", required=True)
    ap.add_argument("--to", dest="dst", required=True)
    ap.add_argument("--steps", type=int, default=10)
    ap.add_argument("--budget", type=int, default=10**4)
    args = ap.parse_args()

    model = parse_model(args.model.read_text())
    x, y = parse_config(args.src, model.dims), parse_config(args.dst, model.dims)

    if model.dims.d == 0:
        back = backward_capped(model, x, y, args.steps)
        for k, up in enumerate(back.trace):
            minima = ", ".join(f"{q}:({','.join(map(str, v))})" for q, v in up.minima)
            print(f"backward {k:3d}: min {minima}")
        print(f"backward: {back.outcome} after {back.steps} steps")
    else:
        print("backward: skipped (guarded counters)")

    t0 = time.perf_counter()
    verdict = decide_cover(model, x, y, budget=args.budget)
    dt = time.perf_counter() - t0
    print(f"forward: {type(verdict).__name__} in {verdict.rounds} rounds ({dt:.3f}s)")
    if hasattr(verdict, "invariant"):
        for ideal in verdict.invariant:
            print(f"  inv: {render_ideal(ideal)}")
    if hasattr(verdict, "run"):
        print(f"  run: {' '.join(verdict.run) or '(empty)'}")


if __name__ == "__main__":
    main()
