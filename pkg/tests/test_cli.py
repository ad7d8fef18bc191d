import pytest

from click.testing import CliRunner

from subshiftlab import DEFAULT_CAPACITY_CAP, get_capacity_cap
from subshiftlab.cli import main


def run(*args: str):
    return CliRunner().invoke(main, list(args))


@pytest.mark.parametrize(
    "length,expected", [(1, "a"), (7, "axayaxa"), (15, "axayaxazaxayaxa")]
)
def test_eta(length, expected):
    result = run("eta", "--length", str(length))
    assert result.exit_code == 0
    assert result.output == expected + "\n"


def test_eta_to_file(tmp_path):
    outfile = tmp_path / "eta.txt"
    result = run("eta", "--length", "17", "--out", str(outfile))
    assert result.exit_code == 0
    assert result.output == ""
    assert outfile.read_text(encoding="utf-8") == "axayaxazaxayaxaxa\n"


def test_usage_errors():
    assert run("eta", "--length", "0").exit_code == 2
    assert run("complexity", "--max-length", "0").exit_code == 2
    assert run("relators", "--family", "ab4", "--max-k", "0").exit_code == 2
    assert run("--capacity-cap", "100", "eta", "--length", "3").exit_code == 2
    assert run("special", "--length", "3", "--side", "bi", "--source", "formula").exit_code == 2


def test_capacity_exceeded():
    result = run("--capacity-cap", "1024", "eta", "--length", "2000")
    assert result.exit_code == 3
    assert "capacity cap" in result.output
    assert get_capacity_cap() == DEFAULT_CAPACITY_CAP
    assert run("--capacity-cap", "1024", "relators", "--max-k", "10").exit_code == 3
    assert run("--capacity-cap", "1024", "eta", "--length", "1024").exit_code == 0


def test_complexity_csv():
    result = run("complexity", "--max-length", "4", "--format", "csv")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "L,C_formula,C_oracle,delta,regime_n,regime_k"
    assert [int(line.split(",")[1]) for line in lines[1:]] == [4, 6, 8, 10]
    assert [int(line.split(",")[2]) for line in lines[1:]] == [4, 6, 8, 10]


def test_complexity_check():
    result = run("complexity", "--max-length", "64", "--check", "--format", "tsv")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].split("\t")[0] == "L"
    assert len(lines) == 66
    assert lines[-1] == "VERIFY pass L_max=64"


def test_complexity_check_full_range(tmp_path):
    outfile = tmp_path / "complexity.csv"
    result = run("complexity", "--max-length", "4096", "--check", "--format", "csv", "--out", str(outfile))
    assert result.exit_code == 0
    assert result.output == "VERIFY pass L_max=4096\n"
    assert len(outfile.read_text(encoding="utf-8").splitlines()) == 4097


def test_complexity_check_failure(monkeypatch):
    monkeypatch.setattr(
        "subshiftlab.closedform.verification.complexity_formula", lambda L: L
    )
    result = run("complexity", "--max-length", "8", "--check")
    assert result.exit_code == 1
    lines = result.output.splitlines()
    assert lines[-2] == "mismatch at L=1 (complexity): formula=1 oracle=4"
    assert lines[-1] == "VERIFY fail L_max=8"


def test_special_right():
    result = run("special", "--length", "4", "--side", "right")
    assert result.exit_code == 0
    assert result.output == "xaxa\txy\nyaxa\txyz\n"
    assert len(run("special", "--length", "6").output.splitlines()) == 1


def test_special_sources_agree():
    for side in ("right", "left"):
        for length in (1, 2, 5, 12, 33):
            args = ("special", "--length", str(length), "--side", side)
            oracle = run(*args, "--source", "oracle")
            formula = run(*args, "--source", "formula")
            assert oracle.exit_code == formula.exit_code == 0
            assert oracle.output == formula.output


def test_special_left_and_bi():
    assert run("special", "--length", "4", "--side", "left").output == "axax\txy\naxay\txyz\n"
    result = run("special", "--length", "3", "--side", "bi")
    assert result.exit_code == 0
    assert "axa\txyz\txyz" in result.output.splitlines()


def test_rauzy_stats():
    result = run("rauzy", "--order", "1", "--stats")
    assert result.exit_code == 0
    assert result.output == "order 1: V=4 E=6 right_branch=1 left_branch=1\n"
    assert "V=8 E=10" in run("rauzy", "--order", "3", "--stats").output


def test_rauzy_loops():
    result = run("rauzy", "--order", "1", "--loops")
    assert result.exit_code == 0
    assert result.output == "a\ta\t1\n" * 3


def test_rauzy_dot(tmp_path):
    first, second = tmp_path / "first.dot", tmp_path / "second.dot"
    assert run("rauzy", "--order", "6", "--dot", str(first)).exit_code == 0
    assert run("rauzy", "--order", "6", "--dot", str(second), "--stats").exit_code == 0
    assert first.read_bytes() == second.read_bytes()
    printed = run("rauzy", "--order", "6")
    assert printed.output.encode("utf-8") == first.read_bytes()


def test_rauzy_unwritable(tmp_path):
    result = run("rauzy", "--order", "2", "--dot", str(tmp_path / "missing" / "g.dot"))
    assert result.exit_code == 4


def test_relators():
    result = run("relators", "--family", "ad4", "--max-k", "0")
    assert result.output == "adadadad\n"
    lines = run("relators", "--family", "ad4", "--max-k", "1").output.splitlines()
    assert len(lines[1]) == 16
    lines = run("relators", "--family", "all", "--max-k", "2", "--annotate").output.splitlines()
    assert len(lines) == 11
    assert lines[0] == "static:aa"
    assert lines[4] == "static:bcd"
    assert lines[5] == "ad4:0:adadadad"
    assert lines[6] == "adacac4:0:" + "adacac" * 4


def test_output_is_deterministic():
    for args in (
        ("eta", "--length", "100"),
        ("complexity", "--max-length", "32"),
        ("special", "--length", "9", "--side", "bi"),
        ("relators", "--max-k", "3"),
    ):
        assert run(*args).output == run(*args).output


def test_check_and_dot_are_byte_stable(tmp_path):
    args = ("complexity", "--max-length", "1024", "--check", "--format", "csv")
    first, second = run(*args), run(*args)
    assert first.exit_code == second.exit_code == 0
    assert first.output.encode("utf-8") == second.output.encode("utf-8")
    assert first.output.splitlines()[-1] == "VERIFY pass L_max=1024"
    dots = [tmp_path / "a.dot", tmp_path / "b.dot"]
    for dot in dots:
        assert run("rauzy", "--order", "8", "--dot", str(dot)).exit_code == 0
    assert dots[0].read_bytes() == dots[1].read_bytes()
