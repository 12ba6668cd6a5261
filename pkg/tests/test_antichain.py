import random

import pytest

from conftest import inc
from wbts.antichain import (
    EXPANDED,
    LEAF,
    TRUNCATED,
    CapExceeded,
    build_at,
    decide_boundedness,
    decide_termination,
)
from wbts.ideals import Config, UnsupportedModel, config_leq
from wbts.models import make_model, replay
from wbts.oracle import explore
from wbts.sampling import random_config, random_dims, random_model


def z(*v):
    return Config("q", (), tuple(v))


class TestBuild:
    def test_increment(self):
        tree = build_at(inc(1, (1,)), z(0))
        assert len(tree) == 2
        root, child = tree.nodes
        assert root.mark == EXPANDED and child.mark == TRUNCATED
        assert child.ancestor == 0 and child.relation == ">"

    def test_no_transitions(self):
        tree = build_at(make_model(0, 1, ["q"], []), z(0))
        assert len(tree) == 1 and tree.nodes[0].mark == LEAF

    def test_zero_loop(self):
        tree = build_at(inc(1, (0,)), z(0))
        assert len(tree) == 2 and tree.nodes[1].relation == "="

    def test_rejects_counters(self, guarded):
        with pytest.raises(UnsupportedModel):
            build_at(guarded, Config("q", (1,), (0,)))

    def test_cap(self):
        m = make_model(0, 1, ["p", "q"], [("a", "p", "q", (), (1,)), ("b", "p", "q", (), (2,))])
        with pytest.raises(CapExceeded):
            build_at(m, Config("p", (), (0,)), node_cap=2)

    def test_incomparable_states_expand(self):
        m = make_model(0, 1, ["p", "q", "r"], [("a", "p", "q", (), (1,)), ("b", "q", "r", (), (1,))])
        tree = build_at(m, Config("p", (), (0,)))
        assert [n.mark for n in tree.nodes] == [EXPANDED, EXPANDED, LEAF]

    def test_dump(self):
        text = build_at(inc(1, (1,)), z(0)).dump()
        assert text.splitlines() == ["[0] q nat() wt(0)  expanded", "  [1] t: q nat() wt(1)  truncated (> [0])"]


class TestDeciders:
    def test_increment(self):
        m = inc(1, (1,))
        t = decide_termination(m, z(0))
        assert not t.holds and t.witness.lower == z(0) and t.witness.upper == z(1)
        assert t.witness.path == ("t",)
        b = decide_boundedness(m, z(0))
        assert not b.holds and b.witness.strict

    def test_zero_loop(self):
        m = inc(1, (0,))
        t = decide_termination(m, z(0))
        assert not t.holds and t.witness.lower == t.witness.upper == z(0)
        assert decide_boundedness(m, z(0)).holds

    def test_no_transitions(self):
        m = make_model(0, 1, ["q"], [])
        assert decide_termination(m, z(0)).holds
        assert decide_boundedness(m, z(0)).holds

    def test_decrement(self):
        b = decide_boundedness(inc(1, (-1,)), z(0))
        assert not b.holds
        assert (b.witness.lower, b.witness.upper) == (z(-1), z(0))
        assert b.witness.render() == "witness: q nat() wt(-1) < q nat() wt(0) via path t"

    def test_lex_descending(self):
        m = inc(2, (0, -1))
        assert not decide_termination(m, z(0, 0)).holds
        b = decide_boundedness(m, z(0, 0))
        assert not b.holds and (b.witness.lower, b.witness.upper) == (z(0, -1), z(0, 0))

    def test_finite_dag_terminates(self):
        m = make_model(0, 1, ["p", "q", "r"], [("a", "p", "q", (), (3,)), ("b", "q", "r", (), (-7,))])
        assert decide_termination(m, Config("p", (), (0,))).holds
        assert decide_boundedness(m, Config("p", (), (0,))).holds


class TestTreeProperties:
    def _models(self, n, seed):
        rng = random.Random(seed)
        for _ in range(n):
            dims = random_dims(rng, max_total=2, d=0)
            m = random_model(rng, dims, n_states=rng.randint(1, 3), n_trans=rng.randint(0, 4), zero_bias=0.5)
            yield m, random_config(rng, dims, m.states)

    def test_paths_are_runs(self):
        for m, x0 in self._models(60, 1):
            tree = build_at(m, x0)
            for node in tree.nodes:
                assert replay(m, x0, tree.path(node.id)) == node.label

    def test_truncations_are_comparable(self):
        for m, x0 in self._models(60, 2):
            tree = build_at(m, x0)
            for node in tree.truncated():
                anc = tree.nodes[node.ancestor].label
                assert config_leq(m.dims, anc, node.label) or config_leq(m.dims, node.label, anc)
                assert node.ancestor in tree.ancestors(node.id)
                assert not node.children

    def test_internal_nodes_pairwise_incomparable(self):
        for m, x0 in self._models(60, 3):
            tree = build_at(m, x0)
            for node in tree.nodes:
                if node.mark != EXPANDED:
                    continue
                for anc in tree.ancestors(node.id):
                    a = tree.nodes[anc].label
                    assert not config_leq(m.dims, a, node.label)
                    assert not config_leq(m.dims, node.label, a)

    def test_matches_explore(self):
        checked = 0
        for m, x0 in self._models(150, 4):
            res = explore(m, x0, 2000, 200)
            if not res.conclusive:
                continue
            checked += 1
            assert decide_boundedness(m, x0).holds
            assert decide_termination(m, x0).holds == (not res.cycle)
        assert checked > 20
