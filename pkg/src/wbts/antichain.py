"""Antichain trees and the termination / boundedness deciders for d = 0.

The tree is the reachability tree cut at every node whose label is
comparable (in either direction) to the label of one of its ancestors.
With lexicographically ordered weights this is finite, and a branch cut
at a comparable (resp. strictly comparable) pair is exactly a witness of
non-termination (resp. unboundedness).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .ideals import Config, UnsupportedModel, _check_config, config_leq, render_config
from .models import WVass, post_configs

DEFAULT_NODE_CAP = 10**6

EXPANDED = "expanded"
LEAF = "leaf"
TRUNCATED = "truncated"


class CapExceeded(RuntimeError):
    pass


@dataclass
class ATNode:
    id: int
    label: Config
    parent: int | None
    via: str | None  # transition leading here from the parent
    depth: int
    mark: str | None = None
    ancestor: int | None = None
    relation: str | None = None  # "<", ">" or "=": label vs. ancestor label
    children: list[int] | None = None


@dataclass
class ATree:
    nodes: list[ATNode]
    root: int = 0

    def __len__(self) -> int:
        return len(self.nodes)

    def ancestors(self, node_id: int) -> list[int]:
        out = []
        parent = self.nodes[node_id].parent
        while parent is not None:
            out.append(parent)
            parent = self.nodes[parent].parent
        return out

    def path(self, node_id: int) -> list[str]:
        """Transition names from the root to ``node_id``."""
        names = []
        node = self.nodes[node_id]
        while node.parent is not None:
            names.append(node.via)
            node = self.nodes[node.parent]
        return names[::-1]

    def truncated(self) -> list[ATNode]:
        return [n for n in self.nodes if n.mark == TRUNCATED]

    def dump(self) -> str:
        lines = []

        def walk(node_id: int, indent: int) -> None:
            n = self.nodes[node_id]
            head = f"[{n.id}] " + (f"{n.via}: " if n.via else "") + render_config(n.label)
            tail = n.mark
            if n.mark == TRUNCATED:
                tail += f" ({n.relation} [{n.ancestor}])"
            lines.append("  " * indent + f"{head}  {tail}")
            for child in n.children or ():
                walk(child, indent + 1)

        walk(self.root, 0)
        return "\n".join(lines)


def _require_lex(model: WVass) -> None:
    if model.dims.d:
        raise UnsupportedModel(
            "termination and boundedness are only decided for d = 0 models"
        )


def _relation(model: WVass, a: Config, b: Config) -> str | None:
    """How ``a`` compares to ``b``: "<", ">", "=", or None if incomparable."""
    if a == b:
        return "="
    if config_leq(model.dims, a, b):
        return "<"
    if config_leq(model.dims, b, a):
        return ">"
    return None


def build_at(model: WVass, x0: Config, node_cap: int = DEFAULT_NODE_CAP) -> ATree:
    """Breadth-first antichain tree; transitions expand in declaration order."""
    _require_lex(model)
    _check_config(model.dims, x0)
    if node_cap < 1:
        raise ValueError("node_cap must be >= 1")
    nodes = [ATNode(0, x0, None, None, 0)]
    tree = ATree(nodes)
    queue = deque([0])
    while queue:
        node = nodes[queue.popleft()]
        hits = []
        for anc in tree.ancestors(node.id):
            rel = _relation(model, node.label, nodes[anc].label)
            if rel is not None:
                hits.append((anc, rel))
        if hits:
            # report a strict pair when there is one
            anc, rel = next((h for h in hits if h[1] != "="), hits[0])
            node.mark, node.ancestor, node.relation = TRUNCATED, anc, rel
            continue
        succs = post_configs(model, node.label)
        node.children = []
        node.mark = EXPANDED if succs else LEAF
        for name, label in succs:
            if len(nodes) >= node_cap:
                raise CapExceeded(f"antichain tree exceeds {node_cap} nodes")
            child = ATNode(len(nodes), label, node.id, name, node.depth + 1)
            nodes.append(child)
            node.children.append(child.id)
            queue.append(child.id)
    return tree


@dataclass(frozen=True)
class Witness:
    lower: Config
    upper: Config
    strict: bool
    path: tuple[str, ...]  # from the root to the truncated node

    def render(self) -> str:
        op = "<" if self.strict else "<="
        return (
            f"witness: {render_config(self.lower)} {op} {render_config(self.upper)}"
            f" via path {' '.join(self.path)}".rstrip()
        )


@dataclass(frozen=True)
class TreeVerdict:
    holds: bool
    witness: Witness | None
    size: int

    def __bool__(self) -> bool:
        return self.holds


def _witness(tree: ATree, node: ATNode) -> Witness:
    anc = tree.nodes[node.ancestor].label
    lo, hi = (node.label, anc) if node.relation in ("<", "=") else (anc, node.label)
    return Witness(lo, hi, node.relation != "=", tuple(tree.path(node.id)))


def decide_termination(
    model: WVass, x0: Config, node_cap: int = DEFAULT_NODE_CAP
) -> TreeVerdict:
    tree = build_at(model, x0, node_cap)
    cut = tree.truncated()
    if cut:
        return TreeVerdict(False, _witness(tree, cut[0]), len(tree))
    return TreeVerdict(True, None, len(tree))


def decide_boundedness(
    model: WVass, x0: Config, node_cap: int = DEFAULT_NODE_CAP
) -> TreeVerdict:
    tree = build_at(model, x0, node_cap)
    for node in tree.truncated():
        if node.relation != "=":
            return TreeVerdict(False, _witness(tree, node), len(tree))
    return TreeVerdict(True, None, len(tree))
