import io
import subprocess
import sys

import pytest

from wbts.cli import main

LEXLOOP = "model weighted d=0 w=2\nstates q\ntrans t: q -> q nat() wt(0,1)\n"
GUARDED = "model weighted d=1 w=1\nstates q\ntrans t: q -> q nat(-1) wt(2)\n"
INC = "model weighted d=0 w=1\nstates q\ntrans t: q -> q nat() wt(1)\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in (("lexloop", LEXLOOP), ("guarded", GUARDED), ("inc", INC)):
        p = tmp_path / f"{name}.wvass"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


FROM0 = ("--from", "q nat() wt(0,0)")


class TestCover:
    def test_lexloop_not_coverable(self, files):
        code, out = run("cover", files["lexloop"], *FROM0, "--to", "q nat() wt(1,1)")
        assert code == 0
        assert out.splitlines() == ["NOT_COVERABLE", "inv: q : nat() wt(0,+inf)"]

    def test_lexloop_coverable(self, files):
        code, out = run("cover", files["lexloop"], *FROM0, "--to", "q nat() wt(0,3)")
        assert code == 0
        assert out.splitlines() == ["COVERABLE", "run: t t t", "endpoint: q nat() wt(0,3)"]

    def test_unknown(self, files):
        code, out = run(
            "cover", files["lexloop"], "--from", "q nat() wt(6,0)", "--to", "q nat() wt(7,0)", "--budget", "1"
        )
        assert code == 4 and out.strip() == "UNKNOWN budget=1"

    def test_certificate_reparses_as_hint(self, files, tmp_path):
        _, out = run("cover", files["lexloop"], *FROM0, "--to", "q nat() wt(1,1)")
        hint = tmp_path / "inv.txt"
        hint.write_text(out.split("\n", 1)[1])
        code, again = run(
            "cover", files["lexloop"], *FROM0, "--to", "q nat() wt(1,1)", "--hint", str(hint), "--budget", "1"
        )
        assert code == 0 and again == out

    def test_deterministic(self, files):
        argv = ("cover", files["guarded"], "--from", "q nat(3) wt(0)", "--to", "q nat(3) wt(1)")
        assert run(*argv) == run(*argv)

    def test_bad_config(self, files):
        code, _ = run("cover", files["lexloop"], *FROM0, "--to", "q nat() wt(1)")
        assert code == 2

    def test_unknown_state(self, files):
        code, _ = run("cover", files["lexloop"], *FROM0, "--to", "r nat() wt(1,1)")
        assert code == 2

    def test_parse_error(self, tmp_path):
        bad = tmp_path / "bad.wvass"
        bad.write_text("model weighted d=0 w=2\nstates q\ntrans t: q -> q nat() wt(1)\n")
        code, _ = run("cover", str(bad), *FROM0, "--to", "q nat() wt(1,1)")
        assert code == 2

    def test_missing_file(self, tmp_path):
        code, _ = run("cover", str(tmp_path / "nope"), *FROM0, "--to", "q nat() wt(1,1)")
        assert code == 2

    def test_bad_budget(self, files):
        code, _ = run("cover", files["lexloop"], *FROM0, "--to", "q nat() wt(1,1)", "--budget", "lots")
        assert code == 2


class TestTrees:
    def test_terminates_rejects_counters(self, files):
        code, _ = run("terminates", files["guarded"], "--from", "q nat(1) wt(0)")
        assert code == 3

    def test_terminates(self, files):
        code, out = run("terminates", files["inc"], "--from", "q nat() wt(0)")
        assert code == 0
        assert out.splitlines()[:2] == [
            "NON_TERMINATING",
            "witness: q nat() wt(0) < q nat() wt(1) via path t",
        ]

    def test_bounded_dump(self, files):
        code, out = run("bounded", files["inc"], "--from", "q nat() wt(0)", "--dump-tree")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "UNBOUNDED"
        assert "  [1] t: q nat() wt(1)  truncated (> [0])" in lines

    def test_node_cap(self, files):
        code, out = run("terminates", files["inc"], "--from", "q nat() wt(0)", "--node-cap", "1")
        assert code == 4 and out.strip() == "UNKNOWN node-cap=1"


class TestBackwardDemo:
    def test_lexloop(self, files):
        code, out = run("backward-demo", files["lexloop"], *FROM0, "--to", "q nat() wt(1,1)", "--steps", "3")
        lines = out.splitlines()
        assert "trace: (1,1) (1,0) (1,-1) (1,-2)" in lines
        assert lines[-1] == "DIVERGED after 3 steps"
        assert code == 4

    def test_rejects_counters(self, files):
        code, _ = run("backward-demo", files["guarded"], "--from", "q nat(0) wt(0)", "--to", "q nat(0) wt(0)")
        assert code == 3


class TestDebug:
    def test_post_agrees(self, files):
        code, out = run("debug", files["guarded"], "post", "--ideal", "q : nat(2) wt(0)")
        assert code == 0
        assert out.splitlines()[0] == "post: q : nat(1) wt(2)"
        assert out.splitlines()[-1] == "AGREE"

    def test_explore(self, files):
        code, out = run("debug", files["inc"], "explore", "--from", "q nat() wt(0)", "--steps", "5")
        assert code == 0 and "cap_hit: True" in out

    def test_brute_cover(self, files):
        code, out = run("debug", files["lexloop"], "cover", *FROM0, "--to", "q nat() wt(0,2)")
        assert code == 0 and out.splitlines() == ["COVERABLE", "run: t t"]


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "wbts.cli", "cover", files["lexloop"], *FROM0, "--to", "q nat() wt(1,1)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.startswith("NOT_COVERABLE")
