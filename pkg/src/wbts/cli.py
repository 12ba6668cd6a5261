"""Command-line front end.

Exit codes: 0 decided, 2 parse or usage error, 3 unsupported model for the
requested operation, 4 budget or cap exhausted.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import antichain, coverability, oracle
from .ideals import (
    Config,
    DimensionError,
    DownSet,
    UnsupportedModel,
    parse_config,
    parse_ideal,
    render_config,
    render_ideal,
)
from .models import ParseError, WVass, downset_post, parse_model

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_EXHAUSTED = 4


class UsageError(Exception):
    pass


def _budget(text: str) -> int | None:
    if text == "unlimited":
        return None
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("budget must be an integer or 'unlimited'")
    if n < 1:
        raise argparse.ArgumentTypeError("budget must be >= 1")
    return n


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wbts", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    cover = sub.add_parser("cover", help="decide coverability")
    cover.add_argument("model", type=Path)
    cover.add_argument("--from", dest="source", required=True)
    cover.add_argument("--to", dest="target", required=True)
    cover.add_argument("--budget", type=_budget, default=coverability.DEFAULT_BUDGET)
    cover.add_argument("--hint", type=Path)

    for name, helptext in (("terminates", "decide termination"), ("bounded", "decide boundedness")):
        p = sub.add_parser(name, help=helptext + " (d = 0 models)")
        p.add_argument("model", type=Path)
        p.add_argument("--from", dest="source", required=True)
        p.add_argument("--node-cap", type=_positive, default=antichain.DEFAULT_NODE_CAP)
        p.add_argument("--dump-tree", action="store_true")

    back = sub.add_parser("backward-demo", help="capped backward iteration (d = 0 models)")
    back.add_argument("model", type=Path)
    back.add_argument("--from", dest="source", required=True)
    back.add_argument("--to", dest="target", required=True)
    back.add_argument("--steps", type=int, default=3)

    debug = sub.add_parser("debug", help="brute-force cross-checks")
    debug.add_argument("model", type=Path)
    debug.add_argument("op", choices=("post", "explore", "cover"))
    debug.add_argument("--ideal", action="append", default=[], help="ideal for 'post'")
    debug.add_argument("--from", dest="source")
    debug.add_argument("--to", dest="target")
    debug.add_argument("--steps", type=_positive, default=50)
    debug.add_argument("--state-cap", type=_positive, default=10**5)
    return parser


def _load_model(path: Path) -> WVass:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_model(text)
    except ParseError as exc:
        raise UsageError(f"{path}:{exc.line}: {exc.message}") from None


def _config(model: WVass, text: str | None, flag: str) -> Config:
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        c = parse_config(text, model.dims)
    except (ValueError, DimensionError) as exc:
        raise UsageError(f"{flag}: {exc}") from None
    if c.q not in model.states:
        raise UsageError(f"{flag}: unknown control state {c.q!r}")
    return c


def load_hint(model: WVass, path: Path) -> DownSet:
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    ideals = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("inv:"):
            line = line[4:]
        try:
            ideals.append(parse_ideal(line, model.dims))
        except (ValueError, DimensionError) as exc:
            raise UsageError(f"{path}:{lineno}: {exc}") from None
    return DownSet(frozenset(ideals))


def format_verdict(verdict) -> list[str]:
    if isinstance(verdict, coverability.Coverable):
        return [
            "COVERABLE",
            ("run: " + " ".join(verdict.run)).rstrip(),
            f"endpoint: {render_config(verdict.endpoint)}",
        ]
    if isinstance(verdict, coverability.NotCoverable):
        return ["NOT_COVERABLE"] + [f"inv: {render_ideal(i)}" for i in verdict.invariant]
    return [f"UNKNOWN budget={verdict.rounds}"]


def _weights(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def _cmd_cover(args, out) -> int:
    model = _load_model(args.model)
    x = _config(model, args.source, "--from")
    y = _config(model, args.target, "--to")
    hint = load_hint(model, args.hint) if args.hint else None
    if hint is not None:
        problems = coverability.validate_hint(model, hint)
        if problems:
            print("hint rejected: " + "; ".join(problems), file=sys.stderr)
            hint = None
    verdict = coverability.decide_cover(model, x, y, args.budget, hint)
    for line in format_verdict(verdict):
        print(line, file=out)
    return EXIT_EXHAUSTED if isinstance(verdict, coverability.Unknown) else EXIT_OK


def _cmd_tree(args, out) -> int:
    model = _load_model(args.model)
    x0 = _config(model, args.source, "--from")
    decide = (
        antichain.decide_termination if args.command == "terminates" else antichain.decide_boundedness
    )
    try:
        verdict = decide(model, x0, args.node_cap)
    except antichain.CapExceeded:
        print(f"UNKNOWN node-cap={args.node_cap}", file=out)
        return EXIT_EXHAUSTED
    if args.command == "terminates":
        print("TERMINATES" if verdict.holds else "NON_TERMINATING", file=out)
    else:
        print("BOUNDED" if verdict.holds else "UNBOUNDED", file=out)
    if verdict.witness is not None:
        print(verdict.witness.render(), file=out)
    print(f"nodes: {verdict.size}", file=out)
    if args.dump_tree:
        print(antichain.build_at(model, x0, args.node_cap).dump(), file=out)
    return EXIT_OK


def _cmd_backward(args, out) -> int:
    model = _load_model(args.model)
    if model.dims.d:
        raise UnsupportedModel("backward-demo needs a d = 0 model")
    x = _config(model, args.source, "--from")
    y = _config(model, args.target, "--to")
    if args.steps < 0:
        raise UsageError("--steps must be >= 0")
    result = coverability.backward_capped(model, x, y, args.steps)
    for k, up in enumerate(result.trace):
        minima = " ".join(f"{q}:{_weights(v)}" for q, v in up.minima)
        print(f"step {k}: {minima}", file=out)
    trace = [up.as_dict().get(y.q) for up in result.trace]
    print("trace: " + " ".join(_weights(v) for v in trace), file=out)
    if result.outcome == "coverable":
        print(f"COVERABLE after {result.steps} steps", file=out)
        return EXIT_OK
    if result.outcome == "stabilized":
        print(f"NOT_COVERABLE stabilized after {result.steps} steps", file=out)
        return EXIT_OK
    print(f"DIVERGED after {result.steps} steps", file=out)
    return EXIT_EXHAUSTED


def _cmd_debug(args, out) -> int:
    model = _load_model(args.model)
    if args.op == "post":
        try:
            ideals = [parse_ideal(s, model.dims) for s in args.ideal]
        except (ValueError, DimensionError) as exc:
            raise UsageError(str(exc)) from None
        symbolic = downset_post(model, DownSet(frozenset(ideals)))
        shifts = [(t.nat, t.wt) for t in model.transitions]
        box = oracle.box_around(model.dims, ideals, 2, shifts)
        brute = oracle.brute_downset_post(model, ideals, box)
        members = oracle.box_members_union(model.dims, symbolic, box)
        for ideal in symbolic:
            print(f"post: {render_ideal(ideal)}", file=out)
        print(f"box points: symbolic={len(members)} brute={len(brute)}", file=out)
        print("AGREE" if members == brute else "DISAGREE", file=out)
        return EXIT_OK
    x = _config(model, args.source, "--from")
    if args.op == "explore":
        res = oracle.explore(model, x, args.state_cap, args.steps)
        print(f"visited: {len(res.visited)}", file=out)
        print(f"cap_hit: {res.cap_hit}", file=out)
        print(f"cycle: {res.cycle}", file=out)
        print(f"comparable_pair: {res.comparable_pair}", file=out)
        return EXIT_OK
    y = _config(model, args.target, "--to")
    run = oracle.brute_cover(model, x, y, args.steps, args.state_cap)
    if run is None:
        print("UNKNOWN", file=out)
        return EXIT_EXHAUSTED
    print("COVERABLE", file=out)
    print(("run: " + " ".join(run)).rstrip(), file=out)
    return EXIT_OK


COMMANDS = {
    "cover": _cmd_cover,
    "terminates": _cmd_tree,
    "bounded": _cmd_tree,
    "backward-demo": _cmd_backward,
    "debug": _cmd_debug,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedModel as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
