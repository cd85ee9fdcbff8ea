import json
import subprocess
import sys

import pytest

from gkverma.cli import main
from gkverma.records import load_csv, load_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def one(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    (obj,) = json.loads(out)
    return obj


def test_compute_scalar(capsys):
    rec = one(capsys, "compute", "--type", "B", "--n", "3", "--p", "3", "--z", "-1")
    assert (rec["gkdim"], rec["dim_u"], rec["reducible"]) == (5, 6, True)
    assert rec["source"] == "both"


def test_compute_weight(capsys):
    rec = one(capsys, "compute", "--type", "A", "--n", "3", "--weight", "1,0,-1")
    assert rec["gkdim"] == 0 and rec["p"] is None


def test_compute_type_c(capsys):
    rec = one(capsys, "compute", "--type", "C", "--n", "4", "--p", "1", "--z", "-1")
    assert (rec["gkdim"], rec["dim_u"], rec["reducible"]) == (7, 7, False)
    assert rec["source"] == "algorithm"


def test_compute_reports_wallach(capsys):
    rec = one(capsys, "compute", "--type", "C", "--n", "5", "--p", "5", "--z", "-3/2")
    assert rec["wallach"] == "3rd Wallach rep of Sp(5,R)"


def test_reducible(capsys):
    rec = one(capsys, "reducible", "--type", "B", "--n", "3", "--p", "3", "--z", "-3")
    assert rec["reducible"] is False and rec["source"] == "both"


@pytest.mark.parametrize(
    "t, n, p, base, step",
    [("B", "3", "3", "-2", "1"), ("A", "3", "1", "0", "1"), ("C", "4", "4", "-3/2", "1/2")],
)
def test_set(capsys, t, n, p, base, step):
    rec = one(capsys, "set", "--type", t, "--n", n, "--p", p)
    assert [(fp["base"], fp["step"]) for fp in rec["first_points"]] == [(base, step)]


def test_first_closed_form_and_search_agree(capsys):
    closed = one(capsys, "first", "--type", "D", "--n", "4", "--p", "2")
    searched = one(capsys, "first", "--type", "D", "--n", "4", "--p", "2", "--search", "--floor", "-12")
    assert closed["first_points"] == searched["first_points"] == [{"lattice": "1/2*Z", "base": "-3/2"}]
    assert (closed["source"], searched["source"]) == ("closed_form", "algorithm")


def test_table_spot_rows(capsys):
    code, out, _ = run(capsys, "table", "--n", "3:4", "--format", "csv")
    assert code == 0
    rows = {(r.type, r.n, r.p): r for r in load_csv(out)}
    assert str(rows["A", 3, 1].first_points[0].base) == "0"
    assert str(rows["B", 3, 3].first_points[0].base) == "-2"
    c44 = rows["C", 4, 4].first_points[0]
    assert (str(c44.base), str(c44.step)) == ("-3/2", "1/2")
    assert all(r.source == "both" for r in rows.values())


def test_table_csv_and_json_agree(capsys):
    _, csv_out, _ = run(capsys, "table", "--type", "B,D", "--n", "4:6", "--format", "csv")
    _, json_out, _ = run(capsys, "table", "--type", "B,D", "--n", "4:6", "--format", "json")
    assert load_csv(csv_out) == load_json(json_out)


def test_table_is_sorted_by_type_n_p(capsys):
    _, out, _ = run(capsys, "table", "--n", "2:5", "--format", "csv")
    keys = [(r.type, r.n, r.p) for r in load_csv(out)]
    assert keys == sorted(keys)


def test_timestamps_go_to_stderr_only(capsys):
    code, out, err = run(capsys, "set", "--type", "A", "--n", "3", "--p", "1", "--timestamps")
    plain = run(capsys, "set", "--type", "A", "--n", "3", "--p", "1")[1]
    assert code == 0 and out == plain
    assert "start set" in err and "end set" in err


@pytest.mark.parametrize(
    "argv, needle",
    [
        (["compute", "--type", "A", "--n", "3", "--weight", "1.5,0,-1"], "'1.5'"),
        (["compute", "--type", "B", "--n", "3", "--weight", "1,0"], "length 3"),
        (["compute", "--type", "B", "--n", "3", "--p", "3", "--z", "1/0"], "zero denominator"),
        (["compute", "--type", "B", "--n", "3", "--p", "4", "--z", "1"], "p must lie"),
        (["compute", "--type", "B", "--n", "3", "--p", "3"], "--z"),
        (["compute", "--type", "B", "--n", "3", "--p", "3", "--z", "1", "--weight", "1,2,3"], "not both"),
        (["set", "--type", "D", "--n", "2", "--p", "1"], "n >= 3"),
        (["first", "--type", "B", "--n", "3", "--p", "1", "--search", "--floor", "-2.5"], "'-2.5'"),
        (["table", "--n", "3:x"], "--n"),
        (["table", "--type", "E", "--n", "3"], "unknown type"),
        (["table", "--type", "D", "--n", "2"], "n >= 3"),
        (["selfcheck", "--max-n", "2", "--grid", "1:2"], "LO:HI:STEP"),
        (["selfcheck", "--max-n", "99"], "max_n"),
        (["set", "--type", "A", "--n", "3", "--p", "1", "--jobs", "0"], "--jobs"),
    ],
)
def test_errors_exit_2(capsys, argv, needle):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert needle in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--type", "Q", "--n", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_selfcheck_small(capsys):
    code, out, _ = run(capsys, "selfcheck", "--max-n", "3")
    assert code == 0
    assert out.splitlines()[-1] == "selfcheck: all suites pass"


def test_selfcheck_mismatch_exits_1(capsys, monkeypatch):
    import gkverma.selfcheck as sc

    monkeypatch.setattr(sc, "known_table_misprint", lambda *a: None)
    code, out, _ = run(capsys, "selfcheck", "--max-n", "4", "--grid", "-2:-2:1")
    assert code == 1
    assert "mismatch: B n=4 p=3 z=-2: table=14 algorithm=11" in out


def test_console_script_runs_as_module():
    proc = subprocess.run(
        [sys.executable, "-m", "gkverma", "compute", "--type", "A", "--n", "3", "--weight", "1,0,-1", "--format", "csv"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout.splitlines()[1].startswith("A,3,,,0,")
