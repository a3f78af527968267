import io
import json

import pytest

from char2sl.cli import main


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_classify_swap(cli):
    code, out, _ = cli(["classify", "--field", "gf2", "--n", "2"], "[[0,1],[1,0]]")
    assert code == 0
    res = json.loads(out)
    assert res["label"] == {"type": "L", "m": 1}
    assert "C" in res["witness"]


def test_iso_test_square_classes(cli):
    code, out, _ = cli(["iso-test", "--field", "ratfunc:q=2", "--n", "2", "--p", "x", "--q", "x^3+1"])
    assert code == 0 and json.loads(out)["isomorphic"] is False
    code, out, _ = cli(["iso-test", "--field", "ratfunc:q=2", "--n", "2", "--p", "x", "--q", "x^3"])
    assert json.loads(out)["isomorphic"] is True


def test_classify_output_roundtrips_through_iso_test(cli):
    A = {"parity": "inner", "A": {"field": "gf2e:r=2", "n": 3, "rows": [["0x1", "0x1", "0x0"],
                                                                        ["0x0", "0x1", "0x0"],
                                                                        ["0x0", "0x0", "0x1"]]}}
    _, out, _ = cli(["classify"], json.dumps(A))
    canon = {"parity": "inner", "A": json.loads(out)["canonical"]}
    code, out, _ = cli(["iso-test"], json.dumps([A, canon]))
    assert code == 0 and json.loads(out)["isomorphic"] is True


def test_outer_classify(cli):
    A = {"parity": "outer", "A": {"field": "gf2", "n": 4,
                                  "rows": [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]}}
    code, out, _ = cli(["classify"], json.dumps(A))
    assert code == 0 and json.loads(out)["label"] == {"type": "outer-alt"}


def test_fixed_points_and_variety(cli):
    code, out, _ = cli(["fixed-points", "--field", "gf2e:r=2"], "[[0,1],[1,0]]")
    rep = json.loads(out)
    assert code == 0 and rep["order"] == 4 and rep["predicate_agrees"] is True
    code, out, _ = cli(["variety", "--field", "gf2e:r=2", "--audit", "0x1"], "[[0,1],[1,0]]")
    rep = json.loads(out)
    assert code == 0 and rep["size"] == 15 and rep["audit"]["formula_ok"] is True


def test_verify_and_census(cli):
    code, out, _ = cli(["verify", "--field", "gf2", "--n", "3"])
    assert code == 0 and json.loads(out)["passed"] is True
    code, out, _ = cli(["verify", "mx"])
    assert code == 1
    code, out, _ = cli(["census", "--field", "gf2", "--n", "2", "--format", "text"])
    assert code == 0 and "class_count: 1" in out


def test_byte_identical_reports(cli):
    a = cli(["verify", "n2", "--seed", "3"])[1]
    b = cli(["verify", "n2", "--seed", "3"])[1]
    strip = lambda s: [l for l in s.splitlines() if '"seconds"' not in l]
    assert strip(a) == strip(b)


@pytest.mark.parametrize("argv,stdin", [
    (["classify", "--field", "gf2"], "not json"),
    (["classify", "--field", "gf2"], "[[1,1],[1,1]]"),
    (["classify", "--field", "gf2"], "[[1,1],[0,1],[1,0]]"),
    (["classify"], "[[0,1],[1,0]]"),
    (["classify", "--field", "gf9"], "[[0,1],[1,0]]"),
    (["classify", "--field", "gf2", "--n", "3"], "[[1,1,0],[0,1,1],[0,0,1]]"),
    (["verify", "bogus"], ""),
    (["census", "--field", "ratfunc:q=2", "--n", "2"], ""),
    (["iso-test", "--field", "gf2", "--p", "1"], ""),
])
def test_usage_errors(cli, argv, stdin):
    code, out, err = cli(argv, stdin)
    assert code == 2 and out == "" and "error" in err


def test_argparse_usage_exit():
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
