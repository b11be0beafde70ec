import io
import json
import subprocess
import sys

import pytest

from ytl.cli import main, run, config_from_args, build_parser
from ytl.schur import schur_product_coefficients


def invoke(argv):
    out = io.StringIO()
    cfg = config_from_args(build_parser().parse_args(argv))
    code = run(cfg, out)
    return code, out.getvalue()


def test_dims_d1_n5():
    code, out = invoke(["dims", "--d", "1", "--n", "5"])
    assert code == 0
    assert json.loads(out) == {"d": 1, "n": 5, "formula": 42, "sum_of_squares": 42, "verdict": "MATCH"}


def test_dims_text():
    code, out = invoke(["dims", "--d", "1", "--n", "5", "--format", "text"])
    assert out == "formula 42\nsum_of_squares 42\nMATCH\n"


def test_zcount_n4():
    code, out = invoke(["zcount", "--n", "4"])
    rep = json.loads(out)
    assert code == 0
    assert sum(rep["Z"]) == 14 and rep["Z"][3] == 5
    assert set(rep["checks"].values()) == {"pass"}


def test_lr_matches_oracle():
    code, out = invoke(["lr", "--lambda", "2,1", "--mu", "3,2,1", "--nu", "4,3,2"])
    rep = json.loads(out)
    assert code == 0
    assert rep["coefficient"] == schur_product_coefficients((2, 1), (3, 2, 1)).get((4, 3, 2), 0)


def test_irreps():
    code, out = invoke(["irreps", "--d", "2", "--n", "3"])
    rep = json.loads(out)
    assert rep["count"] == 6
    assert {m["family"] for m in rep["members"]} == {1, 2}


def test_restrict():
    code, out = invoke(["restrict", "--lambda", "1;1"])
    assert json.loads(out)["restriction"] == [[[2], 1], [[1, 1], 1]]


def test_pieri():
    code, out = invoke(["pieri", "--mu", "1;", "--l", "1"])
    got = {json.dumps(x) for x in json.loads(out)["summands"]}
    assert got == {json.dumps(x) for x in [[[2], []], [[1, 1], []], [[1], [1]]]}


def test_basis_json_lines():
    code, out = invoke(["basis", "--d", "2", "--n", "3"])
    lines = out.splitlines()
    assert code == 0 and len(lines) == 28
    first = json.loads(lines[0])
    assert set(first) == {"framing", "pattern"}


def test_basis_csv():
    code, out = invoke(["basis", "--d", "2", "--n", "3", "--format", "csv"])
    lines = out.splitlines()
    assert lines[0] == "framing,pattern,word"
    assert len(lines) == 29


def test_verify_small():
    code, out = invoke(["verify", "--d", "1", "--n", "3", "--u-eval", "7/3", "--symbolic"])
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    assert rep["u_eval"][0] == "7/3"
    assert rep["dimensions"]["quotient"] == [5, 5]


@pytest.mark.parametrize("argv", [
    ["verify", "--d", "2", "--n", "3", "--u-eval", "1"],
    ["verify", "--d", "2", "--n", "2"],
    ["dims", "--d", "2", "--n", "2"],
    ["lr", "--lambda", "1,2", "--mu", "1", "--nu", "2"],
    ["pieri", "--mu", "1", "--l", "0"],
    ["zcount", "--n", "0"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["dims", "--d", "x", "--n", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--d", "2", "--n", "3", "--u-eval", "abc"])
    assert exc.value.code == 2


def test_verification_failure_exits_1(monkeypatch):
    import ytl.cli as cli
    monkeypatch.setattr(cli, "ytl_dimension_formula", lambda d, n: -1)
    code, out = invoke(["dims", "--d", "2", "--n", "3"])
    assert code == 1 and json.loads(out)["verdict"] == "MISMATCH"


@pytest.mark.parametrize("argv", [
    ["verify", "--d", "2", "--n", "3", "--seed", "5"],
    ["basis", "--d", "3", "--n", "4"],
    ["zcount", "--n", "7"],
])
def test_byte_identical_across_processes(argv):
    cmd = [sys.executable, "-m", "ytl.cli", *argv]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
