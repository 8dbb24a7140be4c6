import pytest

from gl11.cli import EXIT_NOT_SCALAR, EXIT_PARSE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_alexander_trefoil(capsys):
    code, out, _ = run(capsys, "alexander", "--strands", "2", "--word", "1 1 1")
    assert code == 0
    assert out.splitlines() == ["delta: q^-2 - 1 + q^2", "normalized: q^-2 - 1 + q^2"]


def test_alexander_cut_moy_and_raw(capsys):
    code, out, _ = run(capsys, "alexander", "--strands", "3", "--word", "1 -2 1 -2", "--cut-moy", "--raw")
    assert code == 0
    assert out.strip() == "-q^-2 + 3 - q^2"


def test_alexander_colored(capsys):
    code, out, _ = run(capsys, "alexander", "--strands", "2", "--word", "1 1", "--colors", "1 2")
    assert code == 0 and out.startswith("delta: ")


@pytest.mark.parametrize(
    "argv",
    [
        ["--strands", "2", "--word", "1 x"],
        ["--strands", "2", "--word", "3"],
        ["--strands", "2", "--word", "1", "--colors", "1 2"],
    ],
)
def test_alexander_parse_errors(capsys, argv):
    code, _, err = run(capsys, "alexander", *argv)
    assert code == EXIT_PARSE and err.startswith("error:")


def test_usage_errors_exit_with_parse_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["alexander", "--strands", "two", "--word", "1"])
    assert info.value.code == EXIT_PARSE


def test_alexander_not_scalar_exit_code(capsys, monkeypatch):
    import gl11.cli as cli
    from gl11.superlin import NotScalar

    def boom(_):
        raise NotScalar("residual map is not a multiple of the identity")

    monkeypatch.setattr(cli, "alexander_poly", boom)
    code, _, err = run(capsys, "alexander", "--strands", "2", "--word", "1")
    assert code == EXIT_NOT_SCALAR
    assert "not scalar" in err


def test_eval_morse_and_ladder(capsys, tmp_path):
    morse = tmp_path / "digon.txt"
    morse.write_text("in: 2\nsplit:1,1\nmerge:1,1\n")
    code, out, _ = run(capsys, "eval", "--morse", str(morse))
    assert code == 0
    assert "morse 2 -> 2" in out and "q^-1 + q" in out

    ladder = tmp_path / "lad.txt"
    ladder.write_text("m=2 weight=1,0\nF 1 1\n")
    code, out, _ = run(capsys, "eval", "--ladder", str(ladder))
    assert code == 0 and "(1, 0) -> (0, 1)" in out


def test_eval_reports_line_numbers(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("id:1 id:2\nmerge:2,1\n")
    code, _, err = run(capsys, "eval", "--morse", str(bad))
    assert code == EXIT_PARSE and "line 2" in err
    code, _, err = run(capsys, "eval", "--ladder", str(tmp_path / "missing.txt"))
    assert code == EXIT_PARSE


def test_verify_passes_and_prints_one_line_per_instance(capsys):
    code, out, _ = run(capsys, "verify", "xi", "--max-color", "3", "--max-m", "2")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[-1].endswith("hold")
    assert all(line.startswith("ok") for line in lines[:-1])
    # 9 xi instances for colors <= 3, plus 4 * 2 derived ones
    assert len(lines) - 1 == 9 + 8
    assert lines[-1] == "17/17 hold"


def test_verify_nonzero_exit_on_failure(capsys, monkeypatch):
    import gl11.relations as rel
    from gl11.relations import RelationReport
    from gl11.rep import identity

    def broken(max_color, max_m):
        yield RelationReport("fake", (1,), False, identity([1]))

    monkeypatch.setitem(rel.FAMILIES, "braid", broken)
    code, out, _ = run(capsys, "verify", "braid")
    assert code == 1 and "FAIL fake(1)" in out
