import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from extnum import (
    OSLASH,
    ExtNumError,
    ExternalNumber,
    NSReal,
    ParseError,
    lift,
    oslash,
    parse_matrix,
    parse_scalar,
    parse_vector,
    pound,
    render,
)
from extnum.cli import main
from helpers import externals, matrices

SARRUS_TEXT = "[[1+o,0,0],[0,1,1+eps],[0,1,1]]"


# parsing ------------------------------------------------------------------------------


def test_parse_examples():
    assert parse_scalar("1 + o") == ExternalNumber(1, OSLASH)
    a = parse_matrix(SARRUS_TEXT)
    assert a.shape == (3, 3)
    assert a[0, 0] == ExternalNumber(1, OSLASH)
    assert a[1, 2] == ExternalNumber(1 + NSReal.monomial(1, 1))
    root = parse_scalar("eps^(1/2)")
    assert root.rep == NSReal.monomial(1, Fraction(1, 2))
    assert OSLASH.contains(root.rep) and not pound(1).contains(root.rep)


def test_parse_atoms_and_unicode():
    assert parse_scalar("0n") == ExternalNumber(0)
    assert parse_scalar("R").neut.is_line
    assert parse_scalar("ε^2⊘ + 3") == parse_scalar("3 + eps^2*o")
    assert parse_scalar("£") == parse_scalar("L")
    assert parse_scalar("3 - ε^(1/2)£") == parse_scalar("3 - eps^(1/2)*L")
    assert parse_scalar("0.25") == ExternalNumber(Fraction(1, 4))
    assert parse_scalar("-(1+o)*eps") == parse_scalar("-eps + eps*o")


def test_parse_errors_have_positions():
    with pytest.raises(ParseError) as info:
        parse_scalar("1 + * 2")
    assert info.value.pos == 4
    with pytest.raises(ParseError) as info:
        parse_scalar("1 + 2)")
    assert info.value.pos == 5
    with pytest.raises(ParseError):
        parse_scalar("1 $ 2")
    with pytest.raises(ParseError):
        parse_matrix("[[1, 2],[3]]")
    assert issubclass(ParseError, SyntaxError)


def test_division_by_neutrix_rejected():
    with pytest.raises(ExtNumError):
        parse_scalar("1/(0n)")


def test_render_forms():
    assert render(oslash(2)) == "eps^2*o"
    assert render(lift(OSLASH), unicode=True) == "⊘"
    assert render(NSReal(3)) == "3"
    assert render(parse_scalar("1/(1+eps)")) == "1/(1 + eps)"
    assert parse_vector("[1, o]")[1] == lift(OSLASH)


@given(externals())
def test_scalar_round_trip(x):
    assert parse_scalar(render(x)) == x
    assert parse_scalar(render(x, unicode=True)) == x


@given(matrices())
def test_matrix_round_trip(a):
    assert parse_matrix(render(a)) == a


ATOMS = st.sampled_from(["1", "2", "1/3", "eps", "eps^2", "eps^(1/2)", "o", "L", "eps*o", "(1+eps)"])


@given(st.lists(st.tuples(st.sampled_from("+-*"), ATOMS), min_size=1, max_size=5), ATOMS)
def test_parse_render_parse(tail, head):
    text = head + "".join(f" {op} {atom}" for op, atom in tail)
    x = parse_scalar(text)
    assert parse_scalar(render(parse_scalar(render(x)))) == x


# command line -------------------------------------------------------------------------


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_det(capsys):
    assert run(capsys, "det", SARRUS_TEXT) == (0, "o\n", "")
    code, out, _ = run(capsys, "det", SARRUS_TEXT, "--unicode")
    assert out == "⊘\n"


def test_cli_compare(capsys):
    code, out, _ = run(capsys, "compare", "--subset", "(1+o)*eps*(-1)", "o")
    assert (code, out) == (0, "true\n")
    code, out, _ = run(capsys, "compare", "--subset", "o", "(1+o)*eps*(-1)")
    assert (code, out) == (1, "false\n")
    assert run(capsys, "compare", "--leq", "o", "L")[0] == 0
    assert run(capsys, "compare", "--eq", "3 + eps + o", "3 + o")[0] == 0


def test_cli_errors(capsys):
    code, out, err = run(capsys, "eval", "1/(0n)")
    assert code == 2 and out == "" and "NotZeroless" in err
    code, _, err = run(capsys, "eval", "1 + * 2")
    assert code == 2 and "position 4" in err
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
    capsys.readouterr()
    code, _, err = run(capsys, "laplace", SARRUS_TEXT, "--col", "9")
    assert code == 2


def test_cli_laplace_and_json(capsys):
    code, out, _ = run(capsys, "laplace", SARRUS_TEXT, "--col", "1")
    assert code == 0
    assert "expansion along column 1: -eps + eps*o" in out
    assert "det: o" in out and "expansion vs det: StrictSubset" in out
    code, out, _ = run(capsys, "--format", "json", "laplace", SARRUS_TEXT, "--col", "1")
    data = json.loads(out)
    assert data["left"] == "-eps + eps*o" and data["right"] == "o" and data["relation"] == "StrictSubset"


def test_cli_rowop(capsys):
    argv = ["--format", "json", "rowop", "[[1,1],[o,1]]", "--add", "2", "--to", "1", "--times", "1/eps"]
    code, out, _ = run(capsys, *argv)
    data = json.loads(out)
    assert code == 0 and data["det_after"] == "eps^(-1)*o"


def test_cli_inv(capsys):
    code, out, _ = run(capsys, "inv", "[[eps,o],[0,1]]")
    assert code == 0
    assert "relative uncertainty not an absorber" in out


def test_cli_rank(capsys):
    code, out, _ = run(capsys, "--format", "json", "rank", SARRUS_TEXT, "--samples", "200")
    data = json.loads(out)
    assert code == 0 and data["minor_rank"] == 2 and data["row_rank"] == [3, 3]
    assert data["strict_rank"]["variant"] == "UndefinedEvidence"


def test_cli_check(capsys):
    code, out, _ = run(capsys, "--format", "json", "check", "correction-identity", "--trials", "20")
    data = json.loads(out)
    assert code == 0 and data["failures"] == 0 and data["trials"] == 20


def test_cli_file_input(capsys, tmp_path):
    path = tmp_path / "sarrus.txt"
    path.write_text(SARRUS_TEXT + "\n", encoding="utf-8")
    assert run(capsys, "det", str(path)) == (0, "o\n", "")


def test_cli_output_is_deterministic(capsys):
    first = run(capsys, "rank", SARRUS_TEXT, "--seed", "3", "--samples", "20")
    assert run(capsys, "rank", SARRUS_TEXT, "--seed", "3", "--samples", "20") == first
