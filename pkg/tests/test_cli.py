import json
import subprocess
import sys

import pytest

from fusscat import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    assert out.count("\n") == 1
    return json.loads(out)


@pytest.mark.parametrize(
    "seed, order, expected",
    [
        ("2:1,3:1", 7, "1,1,3,10,38,154,654"),
        ("2:1", 5, "1,1,2,5,14"),
        ("3:1", 6, "1,0,1,0,3,0"),
    ],
)
def test_revert(capsys, seed, order, expected):
    code, out, _ = run(capsys, "revert", "--seed", seed, "--order", str(order))
    assert code == 0 and out.splitlines() == [expected]


def test_revert_both_methods(capsys):
    code, out, _ = run(capsys, "revert", "--seed", "2:1,3:1", "--order", "7", "--method", "both")
    assert code == 0
    assert out.splitlines() == ["1,1,3,10,38,154,654", "methods agree"]
    rec = run_json(capsys, "revert", "--seed", "2:1,3:1", "--order", "7", "--method", "both")
    assert rec["results"] == {"coefficients": ["1", "1", "3", "10", "38", "154", "654"], "methods_agree": True}


def test_iterate_alias(capsys):
    _, a, _ = run(capsys, "iterate", "--seed", "2:2,3:1", "--order", "8")
    _, b, _ = run(capsys, "revert", "--seed", "2:2,3:1", "--order", "8")
    assert a == b


def test_method_disagreement_is_fatal(capsys, monkeypatch):
    monkeypatch.setattr(cli.series, "iterate_to_fixpoint", lambda g, order: (cli.series.TruncatedSeries.zero(order + 1), 0))
    code, _, err = run(capsys, "revert", "--seed", "2:1", "--order", "4", "--method", "both")
    assert code == cli.EXIT_COMPUTE and "consistency" in err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["type", "1^4"], "14"),
        (["type", "2^2"], "3"),
        (["type", "1^2,2^2,3^2,4^1"], "9085230"),
        (["super", "3"], "11"),
        (["super", "5"], "197"),
        (["trees", "5,0,4"], "14"),
        (["trees", "3,0,0,1"], "1"),
        (["trees", "17,0,2,2,2,1"], "9085230"),
        (["dissections", "5", "--pieces", "3,4"], "10"),
        (["colored", "5", "--seed", "2:2"], "40"),
    ],
)
def test_count(capsys, argv, expected):
    code, out, _ = run(capsys, "count", *argv)
    assert code == 0 and out.strip() == expected


def test_count_decompose(capsys):
    code, out, _ = run(capsys, "count", "decompose", "3")
    rows = [line.split("\t") for line in out.splitlines()]
    assert rows == [["1+1+1", "5"], ["2+1", "5"], ["3", "1"], ["total", "11"]]
    rec = run_json(capsys, "count", "decompose", "3")
    assert sum(int(t["count"]) for t in rec["results"]["terms"]) == 11


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "type", "1^x"],
        ["count", "trees", "3,0,1"],
        ["count", "trees", "1,a"],
        ["count", "super", "-1"],
        ["count", "colored", "5"],
        ["revert", "--seed", "1:1", "--order", "3"],
        ["revert", "--seed", "2:0", "--order", "3"],
        ["revert", "--seed", "2:1"],
        ["biject", "hello"],
        ["biject", "m=5;diags=(0,2),(1,3)"],
        ["biject", "(()"],
        ["render", "m=4;diags=(0,9)"],
        ["oeis", "--seed", "2:1", "--order", "5", "--id", "X123"],
        ["enumerate", "--m", "5", "--format", "svg"],
        ["bogus"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(cli.main(argv))
    assert exc.value.code == cli.EXIT_USAGE


def test_invalid_arguments_name_the_invariant(capsys):
    _, _, err = run(capsys, "count", "trees", "3,0,1")
    assert "edges" in err
    _, _, err = run(capsys, "count", "type", "0^2")
    assert "part" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "5", "--pieces", "3,4")
    assert code == 0 and len(out.splitlines()) == 10
    _, out, _ = run(capsys, "enumerate", "--m", "3")
    assert out.splitlines() == ["m=3;diags="]
    _, out, _ = run(capsys, "enumerate", "--m", "6", "--pieces", "4")
    assert out.splitlines() == ["m=6;diags=(0,3)", "m=6;diags=(1,4)", "m=6;diags=(2,5)"]


def test_enumerate_cap(capsys):
    code, _, err = run(capsys, "enumerate", "--m", "13")
    assert code == cli.EXIT_COMPUTE and "cap" in err
    code, out, err = run(capsys, "enumerate", "--m", "13", "--pieces", "13", "--cap", "13")
    assert code == 0 and "warning" in err
    assert out.splitlines() == ["m=13;diags="]


def test_enumerate_svg(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--m", "5", "--pieces", "3,4", "--format", "svg", "--out-dir", str(tmp_path))
    assert code == 0
    files = sorted(tmp_path.glob("*.svg"))
    assert len(files) == 10 == len(out.splitlines())
    assert all(f.read_text().startswith("<?xml") for f in files)


@pytest.mark.parametrize(
    "given, image, downdegree",
    [
        ("m=3;diags=", "(()())", "2,0,1"),
        ("m=6;diags=(0,3)", "((()()())()())", "5,0,0,2"),
        ("(()())", "m=3;diags=", "2,0,1"),
    ],
)
def test_biject(capsys, given, image, downdegree):
    code, out, _ = run(capsys, "biject", given)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == image and lines[1] == f"downdegree ({downdegree})"


def test_biject_rejects_unary_node(capsys):
    code, _, err = run(capsys, "biject", "((()()))")
    assert code == cli.EXIT_COMPUTE and "exactly one child" in err


@pytest.mark.parametrize(
    "argv, code, verdict",
    [
        (["--seed", "3:1", "--order", "40", "--nonzero", "--id", "A001764"], 0, "match"),
        (["--seed", "2:1", "--order", "12", "--id", "A000108"], 0, "match"),
        (["--seed", "2:1", "--order", "12", "--id", "A001764"], 3, "mismatch"),
        (["--seed", "2:1", "--order", "40", "--id", "A000108"], 3, "insufficient-remote-terms"),
    ],
)
def test_oeis_fixture(capsys, argv, code, verdict):
    got, out, _ = run(capsys, "oeis", *argv, "--format", "json")
    rec = json.loads(out)
    assert got == code and rec["results"]["verdict"] == verdict
    if verdict == "mismatch":
        assert rec["results"]["first_mismatch"] == {"index": 2, "local": "2", "remote": "3"}


def test_oeis_fetch_failure(capsys, tmp_path):
    code, _, err = run(capsys, "oeis", "--seed", "2:1", "--order", "5", "--id", "A000045", "--fixture-dir", str(tmp_path))
    assert code == cli.EXIT_NETWORK and "fetch failed" in err
    code, _, _ = run(
        capsys, "oeis", "--seed", "2:1", "--order", "5", "--id", "A000108",
        "--online", "--base-url", "http://127.0.0.1:9", "--timeout", "2",
    )
    assert code == cli.EXIT_NETWORK


def test_render(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "m=6;diags=(0,3)")
    assert code == 0 and out.startswith("<?xml") and out.count("<line") == 1
    target = tmp_path / "hex.svg"
    code, _, _ = run(capsys, "render", "m=6;diags=(0,3)", "--out", str(target))
    assert code == 0 and target.read_text() == out


@pytest.mark.parametrize(
    "argv",
    [
        ["revert", "--seed", "2:1,4:3", "--order", "9"],
        ["count", "decompose", "6"],
        ["enumerate", "--m", "6", "--pieces", "3,4"],
        ["biject", "m=10;diags=(1,4),(4,9),(5,8)"],
        ["oeis", "--seed", "2:1", "--order", "8", "--id", "A001764"],
    ],
)
def test_json_round_trip(capsys, argv):
    cli.main(argv + ["--format", "json"])
    raw = capsys.readouterr().out
    assert json.dumps(json.loads(raw), sort_keys=True) + "\n" == raw


def test_counts_are_decimal_strings(capsys):
    rec = run_json(capsys, "count", "super", "40")
    assert isinstance(rec["results"]["count"], str)
    assert int(rec["results"]["count"]) > 2**64


def test_timing_is_opt_in(capsys):
    rec = run_json(capsys, "count", "super", "3")
    assert "timing_s" not in rec
    code, out, _ = run(capsys, "count", "super", "3", "--timing", "--format", "json")
    assert "timing_s" in json.loads(out)


def test_byte_identical_across_processes():
    argv = [sys.executable, "-m", "fusscat.cli", "count", "decompose", "7", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first
