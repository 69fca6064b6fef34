"""CLI behavior through main(argv): output shape, exit codes, determinism."""

import pytest

from binbasis.cli import RunConfig, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_cantor(capsys):
    code, out, err = run(capsys, "construct", "--field", "8:0x11b",
                         "--basis", "cantor", "--n", "8")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert len(lines) == 8 and lines[0] == "1"
    code, out2, _ = run(capsys, "construct", "--field", "8:0x11b",
                        "--basis", "cantor", "--n", "8")
    assert out2 == out


def test_construct_sources(capsys):
    code, out, _ = run(capsys, "construct", "--field", "12",
                       "--basis", "tower:1-12", "--n", "12")
    assert code == 0 and len(out.splitlines()) == 12
    code, out, _ = run(capsys, "construct", "--field", "8",
                       "--basis", "gencantor:2", "--n", "6")
    assert code == 0 and len(out.splitlines()) == 6
    code, out, _ = run(capsys, "construct", "--field", "13",
                       "--basis", "random:9", "--n", "5")
    assert code == 0 and len(out.splitlines()) == 5
    code, out, _ = run(capsys, "construct", "--field", "8",
                       "--basis", "explicit:1,2,4", "--n", "3")
    assert code == 0 and out.splitlines() == ["1", "2", "4"]


def test_construct_errors(capsys):
    code, out, err = run(capsys, "construct", "--field", "12",
                         "--basis", "cantor", "--n", "6")
    assert code == 1 and out == ""
    assert err.startswith("ERROR: ") and err.count("\n") == 1
    assert "divide" in err
    code, _, err = run(capsys, "construct", "--field", "8",
                       "--basis", "explicit:1,2", "--n", "3")
    assert code == 1 and "3" in err
    code, _, err = run(capsys, "construct", "--field", "8",
                       "--basis", "mystery", "--n", "3")
    assert code == 1 and "mystery" in err


def test_trees_list_and_validate(capsys):
    code, out, _ = run(capsys, "trees")
    assert code == 0 and out.splitlines()[0] == "trivial"
    assert "graft:<t>" in out

    code, out, _ = run(capsys, "trees", "--strategy", "cantor",
                       "--field", "16", "--basis", "cantor", "--n", "4")
    assert code == 0
    assert out.splitlines() == ["((*,*),(*,*))", "degrees: 1,2", "valid"]

    code, out, _ = run(capsys, "trees", "--strategy", "explicit:(((*,*),*),*)",
                       "--field", "16", "--basis", "cantor", "--n", "4")
    assert code == 1 and out.splitlines()[-1] == "invalid"

    code, out, _ = run(capsys, "trees", "--strategy", "max:1-2-4-12",
                       "--field", "12", "--basis", "tower:1-2-4-12", "--n", "6")
    assert code == 0 and out.splitlines()[-1] == "valid"

    code, out, _ = run(capsys, "trees", "--strategy", "graft:2",
                       "--field", "8", "--basis", "gencantor:2", "--n", "5")
    assert code == 0 and out.splitlines()[-1] == "valid"

    code, _, err = run(capsys, "trees", "--strategy", "cantor")
    assert code == 1 and err.startswith("ERROR: ")


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--field", "16", "--basis", "cantor",
                       "--tree", "cantor", "--n", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# config: ")
    assert "PASS n2x ell=1 lam=0" in lines
    assert lines[-1] == "verify: 192 checks, 0 failures"

    code, out, _ = run(capsys, "verify", "--field", "13", "--basis", "random:4",
                       "--tree", "trivial", "--n", "5", "--lam", "1a")
    assert code == 0
    assert out.splitlines()[-1].endswith("0 failures")
    assert any(line.endswith("lam=1a") for line in out.splitlines())


def test_verify_validation_failure(capsys):
    code, out, _ = run(capsys, "verify", "--field", "16", "--basis", "cantor",
                       "--tree", "explicit:(((*,*),*),*)", "--n", "4")
    assert code == 1
    assert out.splitlines()[-1] == "FAIL validate tree incompatible with basis"

    code, _, err = run(capsys, "verify", "--field", "16", "--basis", "cantor",
                       "--tree", "cantor", "--n", "7")
    assert code == 1 and err.startswith("ERROR: ")


def test_counts_csv_shape(capsys):
    args = ("counts", "--field", "16", "--basis", "cantor", "--tree", "cantor",
            "--n", "4", "--transform", "n2x")
    code, out, err = run(capsys, *args)
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0].startswith("# config: ")
    assert lines[1] == "ell,additions,multiplications"
    assert lines[2] == "1,0,0"
    assert lines[-1] == "16,46,32"
    assert len(lines) == 18

    code, out2, _ = run(capsys, *args)
    assert out2 == out


def test_counts_monotone_smoke(capsys):
    for transform in ("n2x", "x2n", "l2x", "x2l", "x2m", "m2x"):
        code, out, _ = run(capsys, "counts", "--field", "16", "--basis",
                           "cantor", "--tree", "cantor", "--n", "5",
                           "--transform", transform)
        assert code == 0
        adds = [int(line.split(",")[1]) for line in out.splitlines()[2:]]
        assert all(x <= y for x, y in zip(adds, adds[1:]))


def test_counts_calc_agrees_with_execution(capsys):
    base = ("counts", "--field", "12", "--basis", "tower:1-2-4-12", "--tree",
            "max:1-2-4-12", "--n", "6", "--transform", "x2m")
    code, out, _ = run(capsys, *base)
    assert code == 0
    code, out_calc, _ = run(capsys, *base, "--calc")
    assert code == 0
    assert out.splitlines()[1:] == out_calc.splitlines()[1:]


def test_counts_convert_has_twist_column(capsys):
    code, out, _ = run(capsys, "counts", "--field", "13", "--basis",
                       "random:7", "--tree", "trivial", "--n", "3",
                       "--transform", "convert:monomial-lagrange",
                       "--lam", "3f")
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "ell,additions,multiplications,twist_multiplications"
    twists = [int(line.split(",")[3]) for line in lines[2:]]
    assert twists == [max(2 * ell - 3, 0) for ell in range(1, 9)]

    code, out, _ = run(capsys, "counts", "--field", "16", "--basis", "cantor",
                       "--tree", "cantor", "--n", "3",
                       "--transform", "convert:monomial-newton")
    assert code == 0
    assert all(line.endswith(",0") for line in out.splitlines()[2:])


def test_counts_mixed_parameters(capsys):
    code, out, _ = run(capsys, "counts", "--field", "16", "--basis", "cantor",
                       "--tree", "cantor", "--n", "4", "--transform", "l2x",
                       "--c", "2", "--b", "1", "--ell", "2:8")
    assert code == 0 and len(out.splitlines()) == 9

    code, _, err = run(capsys, "counts", "--field", "16", "--basis", "cantor",
                       "--tree", "cantor", "--n", "4", "--transform", "l2x",
                       "--c", "5")
    assert code == 1 and "c <= ell" in err

    code, out, _ = run(capsys, "counts", "--field", "16", "--basis", "cantor",
                       "--tree", "cantor", "--n", "4", "--transform", "x2l",
                       "--c", "16", "--ell", "4")
    assert code == 0 and len(out.splitlines()) == 3


def test_counts_to_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, _ = run(capsys, "counts", "--field", "16", "--basis", "cantor",
                       "--tree", "trivial", "--n", "3", "--out", str(target))
    assert code == 0 and out == ""
    content = target.read_text(encoding="utf-8")
    assert content.splitlines()[1] == "ell,additions,multiplications"
    assert content.endswith("\n")


def test_bounds_pass_and_slack(capsys):
    code, out, _ = run(capsys, "bounds", "--field", "16", "--basis", "cantor",
                       "--tree", "cantor", "--n", "6", "--transform", "n2x")
    assert code == 0
    assert out.splitlines()[-1].startswith("worst slack ")

    code, out, _ = run(capsys, "bounds", "--field", "13", "--basis",
                       "random:3", "--tree", "trivial", "--n", "6",
                       "--transform", "x2l", "--calc")
    assert code == 0

    code, out, _ = run(capsys, "bounds", "--field", "16", "--basis", "cantor",
                       "--tree", "cantor", "--n", "8", "--transform", "x2m",
                       "--calc")
    assert code == 0


def test_bounds_mismatched_id(capsys):
    code, out, err = run(capsys, "bounds", "--field", "16", "--basis",
                         "cantor", "--tree", "cantor", "--n", "6",
                         "--transform", "l2x", "--calc",
                         "--bound-add", "newton_add")
    assert code == 1 and out == ""
    assert err.startswith("ERROR: l2x additions exceed newton_add at ell=")
    assert err.count("\n") == 1

    code, _, err = run(capsys, "bounds", "--field", "16", "--basis", "cantor",
                       "--tree", "cantor", "--n", "4", "--transform", "n2x",
                       "--bound-add", "no_such_bound")
    assert code == 1 and "no_such_bound" in err


def test_bounds_rejects_convert(capsys):
    code, _, err = run(capsys, "bounds", "--field", "16", "--basis", "cantor",
                       "--tree", "cantor", "--n", "4",
                       "--transform", "convert:monomial-newton")
    assert code == 1 and "raw transforms" in err


def test_runconfig_roundtrip():
    text = ("field=16:0x1002b basis=cantor tree=cantor n=4 transform=l2x "
            "ell=2:8 lam=3f c=2 b=1 calc=1 out=-")
    cfg = RunConfig.from_string(text)
    assert cfg.to_string() == text
    assert RunConfig.from_string(cfg.to_string()) == cfg
    assert cfg.c == 2 and cfg.b == 1 and cfg.calc and cfg.out is None

    defaults = RunConfig.from_string(
        "field=8:0x11b basis=cantor tree=trivial n=3 transform=n2x "
        "ell=1:8 lam=0 c=- b=- calc=0 out=-")
    assert defaults.c is None and defaults.b is None and not defaults.calc


def test_error_paths_single_line(capsys):
    bad_invocations = (
        ("construct", "--field", "nope", "--n", "3"),
        ("counts", "--field", "16", "--n", "3", "--lam", "zz"),
        ("counts", "--field", "16", "--n", "3", "--ell", "0:4"),
        ("counts", "--field", "16", "--n", "3", "--ell", "5:4"),
        ("counts", "--field", "16", "--n", "3", "--transform", "warp"),
        ("counts", "--field", "16", "--n", "99"),
        ("counts", "--field", "16", "--n", "3", "--tree", "mystery:9"),
        ("verify", "--field", "16", "--n", "3", "--lam", "10000"),
    )
    for argv in bad_invocations:
        code, out, err = run(capsys, *argv)
        assert code == 1, argv
        assert err.startswith("ERROR: ") and err.count("\n") == 1, argv

    code, _, err = run(capsys)
    assert code == 1 and err.startswith("ERROR: ")
