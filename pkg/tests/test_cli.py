import json

import pytest

from ambc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_forward_text_and_json(capsys):
    code, out, _ = run(capsys, "forward", "-n", "7", "[1,2,17,5,14,18,20]")
    assert code == 0 and out.strip() == "1,2,5|4,6,7|3 ; 3,6,7|2,4,5|1 ; 3,3,1"
    code, out, _ = run(capsys, "forward", "[1,2,17,5,14,18,20]", "--json")
    assert json.loads(out) == {"P": [[1, 2, 5], [4, 6, 7], [3]], "Q": [[3, 6, 7], [2, 4, 5], [1]], "rho": [3, 3, 1]}


def test_forward_trace(capsys):
    code, out, _ = run(capsys, "forward", "[1,2,17,5,14,18,20]", "--trace")
    assert code == 0
    assert "step 1: stream A=[3, 6, 7] B=[1, 2, 5] r=3" in out


def test_backward(capsys):
    code, out, _ = run(capsys, "backward", "1,4,5,7|3,6|2 ; 2,3,5,7|1,4|6 ; 2,0,1")
    assert code == 0 and out.strip() == "[1,6,9,7,10,5,11]"
    triple = json.dumps({"P": [[1, 2, 5], [4, 6, 7], [3]], "Q": [[3, 6, 7], [2, 4, 5], [1]], "rho": [3, 3, 1]})
    code, out, _ = run(capsys, "backward", triple, "--json")
    assert json.loads(out)["window"] == [1, 2, 17, 5, 14, 18, 20]


def test_shi_and_asymptotic(capsys):
    assert run(capsys, "shi", "[7,8,18,5,2,3,13]")[1].strip() == "1,2,3|5,7|6|4"
    code, out, _ = run(capsys, "asymptotic", "[-4,5,-2,7,3,6]")
    assert out.strip() == "2,4|3,6|1,5 (stable from i = 6)"


@pytest.mark.parametrize("numbering", ["sw", "ne", "backward"])
def test_render(capsys, numbering):
    code, out, _ = run(capsys, "render", "[4,1,6,11,2,3]", "--rows=-2..9", "--numbering", numbering, "--zigzags")
    assert code == 0
    assert "┆" in out and "┄" in out
    assert len(out.splitlines()) == 1 + 12 + 2  # header, rows, separators above rows 1 and 7


def test_render_color_and_empty(capsys):
    code, out, _ = run(capsys, "render", "[_,_]", "--color")
    assert code == 0 and "\x1b[31m" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "3", "--shift-max", "2", "--suite", "roundtrip")
    assert code == 0 and out.strip() == "roundtrip: OK, 750 cases"
    code, out, _ = run(capsys, "verify", "--n-min", "1", "--n-max", "2", "--shift-max", "1", "--samples", "20")
    assert code == 0
    assert [line.split(":")[0] for line in out.splitlines()] == [
        "roundtrip", "shi", "weyl", "gravity", "asymptotic", "distalt"
    ]


@pytest.mark.parametrize(
    "argv",
    [
        ("forward", "[1,1]"),
        ("forward", "[1,x]"),
        ("backward", "1|2,3 ; 1|2,3 ; 0,0"),
        ("render", "[2,1]", "--rows", "oops"),
        ("shi", "[1,_,2]"),
    ],
)
def test_bad_input_exits_2(capsys, argv):
    code, _out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")
