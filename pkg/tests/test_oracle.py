import pytest

from conftest import inc
from wbts.ideals import INF, Config, Dims, Ideal
from wbts.models import make_model, replay
from wbts.oracle import (
    Box,
    BoxTooLarge,
    box_around,
    box_members,
    brute_cover,
    brute_post_box,
    explore,
)

D0W2 = Dims(0, 2)


def brute_lex_count(limit, lo, hi):
    # independent count: enumerate pairs and compare them as Python tuples
    return sum(
        1 for a in range(lo, hi + 1) for b in range(lo, hi + 1) if (a, b) <= limit
    )


class TestBoxMembers:
    def test_lex_ideal_count(self):
        box = Box((), (-6, -6), (6, 6))
        got = box_members(D0W2, Ideal("q", (), (2, 3)), box)
        # columns -6..1 are full (8 * 13), column 2 keeps -6..3 (10)
        assert len(got) == brute_lex_count((2, 3), -6, 6) == 8 * 13 + 10

    def test_empty_range(self):
        assert box_members(D0W2, Ideal("q", (), (0, 0)), Box((), (1, 0), (0, 0))) == set()

    def test_full(self):
        box = Box((), (-2, -2), (2, 2))
        assert len(box_members(D0W2, Ideal("q", (), (INF, INF)), box)) == box.size == 25

    def test_too_large(self):
        with pytest.raises(BoxTooLarge):
            box_members(Dims(0, 3), Ideal("q", (), (0, 0, 0)), Box((), (-300,) * 3, (300,) * 3))

    def test_box_around(self):
        box = box_around(Dims(1, 1), [Ideal("q", (3,), (-4,))], 2)
        assert box == Box((5,), (-6,), (2,))


class TestBrutePost:
    def test_empty(self, lexloop):
        assert brute_post_box(lexloop, [], Box((), (-3, -3), (3, 3))) == set()

    def test_lexloop(self, lexloop):
        box = Box((), (-3, -3), (3, 3))
        got = brute_post_box(lexloop, [Config("q", (), (0, 0))], box)
        assert got == box_members(D0W2, Ideal("q", (), (0, 1)), box)

    def test_guard_blocked(self):
        m = make_model(1, 0, ["q"], [("t", "q", "q", (-1,), ())])
        assert brute_post_box(m, [Config("q", (0,), ())], Box((3,), (), ())) == set()


class TestExplore:
    def test_increment_hits_cap(self):
        res = explore(inc(1, (1,)), Config("q", (), (0,)), 100, 10)
        assert res.visited == {Config("q", (), (k,)) for k in range(11)}
        assert res.cap_hit and not res.cycle

    def test_zero_loop(self):
        res = explore(inc(1, (0,)), Config("q", (), (0,)), 100, 10)
        assert res.visited == {Config("q", (), (0,))}
        assert res.cycle and not res.cap_hit and res.comparable_pair

    def test_no_transitions(self):
        res = explore(make_model(0, 1, ["q"], []), Config("q", (), (0,)), 5, 5)
        assert res.visited == {Config("q", (), (0,))} and res.conclusive

    def test_deterministic(self, lexloop):
        a = explore(lexloop, Config("q", (), (0, 0)), 50, 50)
        assert a == explore(lexloop, Config("q", (), (0, 0)), 50, 50)


class TestBruteCover:
    def test_below(self, lexloop):
        assert brute_cover(lexloop, Config("q", (), (1, 1)), Config("q", (), (0, 9)), 5, 5) == ()

    def test_lexloop_target(self, lexloop):
        x = Config("q", (), (0, 0))
        run = brute_cover(lexloop, x, Config("q", (), (0, 5)), 100, 100)
        assert run == ("t",) * 5
        assert replay(lexloop, x, run) == Config("q", (), (0, 5))

    def test_lexloop_unreachable(self, lexloop, lexloop_query):
        assert brute_cover(lexloop, *lexloop_query, 10**4, 10**4) is None
