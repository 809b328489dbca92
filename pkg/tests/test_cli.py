import pytest

from blockdet.cli import main
from blockdet.conditions import cond_f, parse_condition
from blockdet.matrix import format_block_matrix, format_matrix, Matrix, block_view, parse_block_matrix
from blockdet.ring import ZZ


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_builtin_m1(capsys):
    code, out, _ = run(capsys, "check", "--builtin", "m1")
    assert code == 1
    assert out == "lhs=-128 rhs=0 UNEQUAL\n"


def test_check_builtin_m3(capsys):
    code, out, _ = run(capsys, "check", "--builtin", "m3")
    assert code == 1
    assert "lhs=1152 rhs=1872 UNEQUAL" in out


def test_check_equal_matrix(tmp_path, capsys):
    path = tmp_path / "ident.txt"
    path.write_text(format_block_matrix(block_view(Matrix.identity(ZZ, 4), 2)))
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0
    assert out.endswith("EQUAL\n")


def test_check_malformed_input(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("2 2\n1 2\n3 4\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "line 1" in err


def test_det_command(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text(format_matrix(Matrix.from_rows(ZZ, [[1, 2], [3, 4]])))
    code, out, _ = run(capsys, "det", str(path))
    assert code == 0
    assert out == "det=-2\n"


def test_ncdet_builtin(capsys):
    code, out, _ = run(capsys, "ncdet", "--builtin", "m1")
    assert code == 0
    assert "2 2 int" in out
    assert "-60 -68" in out


def test_family_output_parses_back(capsys):
    code, out, _ = run(capsys, "family", "--name", "f", "--n", "3")
    assert code == 0
    assert parse_condition(out) == cond_f(3)


def test_family_bad_args(capsys):
    code, _, err = run(capsys, "family", "--name", "side:9", "--n", "3")
    assert code == 2
    assert "error" in err


def test_campaign_passing_family(capsys):
    code, out, _ = run(
        capsys, "campaign", "--family", "f", "--n", "2", "--m", "4",
        "--ring", "mod:10007", "--trials", "20", "--seed", "42",
    )
    assert code == 0
    assert "condition=f trials=20 failures=0 seed=42" in out


def test_campaign_falsifying_family(capsys):
    code, out, _ = run(
        capsys, "campaign", "--family", "h4", "--n", "2", "--m", "3",
        "--ring", "mod:10007", "--trials", "20", "--seed", "42",
    )
    assert code == 1
    assert "failure trial=" in out


def test_campaign_byte_identical(capsys):
    args = ("campaign", "--family", "side:2", "--n", "2", "--m", "4",
            "--ring", "mod:10007", "--trials", "10", "--seed", "5")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_classify2(capsys):
    code, out, _ = run(capsys, "classify2")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 64
    assert "edges={CD} SCC witness=G1" in lines
    assert "edges={AC,BD} NOT-SCC falsifier=M2 lhs=128 rhs=0" in lines


def test_counterexample_roundtrip(capsys):
    code, out, _ = run(capsys, "counterexample", "--name", "m3")
    assert code == 0
    body, last = out.rsplit("\n", 2)[0:2]
    assert "lhs=1152 rhs=1872 UNEQUAL" in last
    parse_block_matrix(body)


@pytest.mark.parametrize(
    "argv",
    [
        ("symbolic", "--check", "colswap", "--n", "4", "--k", "2"),
        ("symbolic", "--check", "transpose", "--n", "3", "--c", "2"),
        ("symbolic", "--check", "rowswap", "--n", "3", "--i", "2", "--j", "3",
         "--missing", "2,1,2,2"),
    ],
)
def test_symbolic_passes(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert "PASS" in out


def test_symbolic_honest_failure(capsys):
    code, out, _ = run(
        capsys, "symbolic", "--check", "rowswap", "--n", "3", "--i", "2", "--j", "3",
        "--missing", "2,1,3,2",
    )
    assert code == 1
    assert "FAIL" in out


def test_symbolic_cap_exceeded(capsys):
    code, _, err = run(capsys, "symbolic", "--check", "colswap", "--n", "7", "--k", "1")
    assert code == 2


def test_symbolic_missing_required_flag(capsys):
    code, _, err = run(capsys, "symbolic", "--check", "colswap", "--n", "3")
    assert code == 2
    assert "--k" in err


def test_optimality(capsys):
    code, out, _ = run(capsys, "optimality", "--n", "2", "--trials", "10")
    assert code == 0
    assert "optimality n=2 OK" in out
    assert "case=same_row" in out


def test_usage_error_exit_code(capsys):
    assert run(capsys, "not-a-command")[0] == 2
    assert run(capsys, "check")[0] == 2  # neither file nor builtin
