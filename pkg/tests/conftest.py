import pytest

from wbts.ideals import Config, Dims
from wbts.models import make_model

# (criterion, passed, detail) rows filled in by test_acceptance
ACCEPTANCE_ROWS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_ROWS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in sorted(ACCEPTANCE_ROWS, key=lambda r: r[0]):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")


@pytest.fixture
def lexloop():
    """One state, one transition adding (0, 1) to two lex-ordered weights."""
    return make_model(0, 2, ["q"], [("t", "q", "q", (), (0, 1))])


@pytest.fixture
def lexloop_query():
    return Config("q", (), (0, 0)), Config("q", (), (1, 1))


@pytest.fixture
def guarded():
    return make_model(1, 1, ["q"], [("t", "q", "q", (-1,), (2,))])


def inc(w, delta):
    """Single-state d = 0 model with one transition of weight ``delta``."""
    return make_model(0, w, ["q"], [("t", "q", "q", (), delta)])


D0W2 = Dims(0, 2)
D1W1 = Dims(1, 1)
