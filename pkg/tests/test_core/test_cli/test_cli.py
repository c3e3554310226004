"""Tests for the command line and its exit codes."""

import pytest

from ludics.cli import EXIT_ERROR, EXIT_OK, EXIT_REFUTED, EXIT_UNKNOWN, main

INF = "def inf(x) = x|down<{up(y) => inf(x)}>\ninf(x0) |- x0: down(up(one))\n"
WITH = "{pi1(x) => x|*; pi2(y) => y|*} |- with(one, one)\n"


@pytest.fixture
def write(tmp_path):
    """Write text to a file under tmp_path and return its path as a string."""

    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


def test_normalize_closed(write, capsys):
    """Test normal form and verdict of closed designs."""
    code, out, _ = run(capsys, "normalize", write("d.ld", "{a() => daimon}|a"))
    assert code == EXIT_OK
    assert out == ["daimon", "daimon"]

    code, out, _ = run(capsys, "normalize", write("e.ld", "{}|a"))
    assert code == EXIT_REFUTED
    assert out[:2] == ["omega", "omega"]
    assert out[2].startswith("certificate (path): ")


def test_normalize_open(write, capsys):
    """Test that open designs are only normalized."""
    code, out, _ = run(capsys, "normalize", write("d.ld", "x|a<{b(y) => y|c}>"))
    assert code == EXIT_OK
    assert out == ["x|a<{b(y) => y|c}>"]


def test_orthogonal(write, capsys):
    """Test orthogonality of a positive and a negative design."""
    p = write("p.ld", "x0|down<{up(y) => daimon}>")
    code, out, _ = run(capsys, "orthogonal", p, write("n.ld", "{up(z) => z|down<{}>}"))
    assert code == EXIT_OK
    assert out == ["daimon"]
    code, _, _ = run(capsys, "orthogonal", p, write("m.ld", "{up(z) => z|*}"))
    assert code == EXIT_REFUTED


def test_prove(write, capsys):
    """Test the verdicts of proof search."""
    code, out, _ = run(capsys, "prove", write("a.seq", "x0|* |- x0: one"))
    assert code == EXIT_OK
    assert out == ["derivable", "(one, *) on x0 :: x0|* |- x0: one"]

    code, out, _ = run(capsys, "prove", write("b.seq", "x0|b |- x0: one"))
    assert code == EXIT_REFUTED
    assert out[0].startswith("underivable: stuck: name 'b'")

    code, out, _ = run(capsys, "prove", write("c.seq", INF))
    assert code == EXIT_REFUTED
    assert out == ["underivable: branch repeats from node 0 every 2 nodes"]

    code, out, _ = run(capsys, "--fuel", "1", "prove", write("d.seq", WITH))
    assert code == EXIT_UNKNOWN
    assert out[0] == "unknown: fuel ran out after 1 nodes"


def test_prove_report_format(write, capsys):
    """Test the key/value report format."""
    path = write("a.seq", "x0|* |- x0: one")
    code, out, _ = run(capsys, "--format", "report", "prove", path)
    assert code == EXIT_OK
    assert out == ["verdict: derived", "nodes: 1", "size: 1"]


def test_countermodel(write, capsys):
    """Test countermodels of stuck and derivable sequents."""
    code, out, _ = run(capsys, "countermodel", write("b.seq", "x0|b |- x0: one"))
    assert code == EXIT_OK
    assert out[0].startswith("branch: 0 steps, stuck: name 'b'")
    assert "x0 = {*() => daimon}" in out
    assert "defeat: omega" in out
    assert any(line.startswith("member x0: daimon") for line in out)

    code, out, _ = run(capsys, "countermodel", write("a.seq", WITH))
    assert code == EXIT_REFUTED
    assert out == ["derivable: no countermodel"]


def test_countermodel_truncated(write, capsys):
    """Test that an unfinished search exits as unknown."""
    path = write("a.seq", WITH)
    argv = ["--fuel", "1", "--format", "report", "countermodel", path]
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_UNKNOWN
    assert "exact: False" in out


def test_enumerate(write, capsys):
    """Test member listing inline and from a file."""
    code, out, _ = run(capsys, "enumerate", "one", "--size", "2")
    assert code == EXIT_OK
    assert out == ["x0|*"]

    path = write("b.beh", "with(one, one)")
    code, out, _ = run(capsys, "enumerate", path, "--size", "3")
    assert code == EXIT_OK
    assert len(out) == 1
    assert out[0].startswith("{pi1(")


def test_llp(capsys):
    """Test the polarized linear logic commands."""
    code, out, _ = run(capsys, "llp", "check", "1")
    assert code == EXIT_OK
    assert out == ["|- 1: derivable", "proof: x0|*"]

    code, out, _ = run(capsys, "llp", "check", "?1, 0")
    assert code == EXIT_REFUTED
    assert out == ["|- ?1, 0: underivable"]

    code, out, _ = run(capsys, "llp", "roundtrip", "!(B | T)")
    assert code == EXIT_OK
    assert out[-1] == "isomorphic"

    code, out, _ = run(capsys, "llp", "translate", "1 * 0")
    assert code == EXIT_OK
    assert out


@pytest.mark.parametrize(
    "argv",
    [
        ["normalize", "does-not-exist.ld"],
        ["--fuel", "0", "enumerate", "one"],
        ["--format", "json", "enumerate", "one"],
        ["enumerate", "pos"],
        ["llp", "check", "1, 0"],
        ["no-such-command"],
    ],
)
def test_usage_errors(argv, capsys):
    """Test that usage and parse errors exit with code 3."""
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_ERROR


def test_parse_error_is_reported(write, capsys):
    """Test that engine errors are printed on stderr."""
    code, _, err = run(capsys, "normalize", write("bad.ld", "x|a<"))
    assert code == EXIT_ERROR
    assert err.startswith("error: ")


def test_trace_dir(write, tmp_path, capsys):
    """Test that a trace CSV is written when asked for."""
    traces = tmp_path / "traces"
    path = write("a.seq", "x0|* |- x0: one")
    code, _, _ = run(capsys, "--trace-dir", str(traces), "prove", path)
    assert code == EXIT_OK
    assert list(traces.rglob("*.csv"))
