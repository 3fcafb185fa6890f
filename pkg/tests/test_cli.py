"""CLI behavior: subcommands, formats, exit codes, and the PNG figure
written alongside file output."""

import json

from conicpencils.cli import (
    EXIT_FAILED,
    EXIT_INCONSISTENT,
    EXIT_OK,
    EXIT_PARSE,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_json_lines(capsys):
    code, out, _ = run(capsys, "table", "--q", "4")
    assert code == EXIT_OK
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 15
    assert rows[8]["label"] == 9 and rows[8]["stabilizer_order"] == 24
    assert rows[0]["point_od"] == [1, 5, 31, 48]


def test_table_campbell_column(capsys):
    code, out, _ = run(capsys, "table", "--q", "2", "--campbell")
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[14]["historical_type"] == "16, 17"
    assert rows[8]["historical_type"] == "7, 10"


def test_table_csv_and_latex(capsys):
    code, out, _ = run(capsys, "table", "--q", "2", "--format", "csv")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0].startswith("label,q,point_od")
    assert len(lines) == 16
    code, out, _ = run(capsys, "table", "--q", "2", "--format", "latex")
    assert "\\begin{tabular}" in out and out.count("\\\\") >= 16


def test_classify_solid_and_conics(capsys):
    code, out, _ = run(capsys, "classify", "--q", "4", "--conics", "010001", "100000")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["label"] == 5
    assert list(rec.keys()) == ["q", "solid", "point_od", "hyperplane_od", "base_count", "label"]
    code2, out2, _ = run(capsys, "classify", "--q", "4", "--solid", rec["solid"])
    assert code2 == EXIT_OK and json.loads(out2)["label"] == 5


def test_classify_parse_errors(capsys):
    code, _, err = run(capsys, "classify", "--q", "4")
    assert code == EXIT_PARSE
    code, _, err = run(capsys, "classify", "--q", "4", "--conics", "010001", "020002")
    assert code == EXIT_PARSE and "proportional" in err
    code, _, _ = run(capsys, "classify", "--q", "4", "--solid", "q=2:" + "0" * 24)
    assert code == EXIT_PARSE
    code, _, _ = run(capsys, "classify", "--q", "4", "--conics", "zz0001", "100000")
    assert code == EXIT_PARSE


def test_bad_arguments_exit_2(capsys):
    assert main(["classify", "--q", "7", "--conics", "010001", "100000"]) == EXIT_PARSE
    assert main(["verify", "--level", "nope"]) == EXIT_PARSE
    capsys.readouterr()


def test_rep_roundtrip(capsys):
    code, out, _ = run(capsys, "rep", "--q", "2", "--rep", "13")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["label"] == 13 and rec["stabilizer_order"] == 8
    assert len(rec["conics"]) == 3


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--q", "2")
    assert code == EXIT_OK
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[0]["counts"] == rows[0]["expected"] == [7, 7, 21, 28]
    assert rows[1]["counts"] == [7, 21, 7, 28]


def test_out_writes_file_and_figure(tmp_path, capsys):
    out = tmp_path / "table.jsonl"
    code, _, _ = run(capsys, "table", "--q", "2", "--out", str(out))
    assert code == EXIT_OK
    assert out.exists() and len(out.read_text().splitlines()) == 15
    png = out.with_suffix(".png")
    assert png.exists() and png.stat().st_size > 0
    out2 = tmp_path / "census.jsonl"
    code, _, _ = run(capsys, "census", "--q", "2", "--out", str(out2))
    assert code == EXIT_OK and out2.with_suffix(".png").exists()


def test_verify_q2_level(tmp_path, capsys):
    out = tmp_path / "verify.jsonl"
    code, outtext, err = run(capsys, "verify", "--level", "q2-full", "--out", str(out))
    # the all-singular-empty-base check legitimately fails at q=2
    # (21 orbit-13 pencils), so the level reports a failure
    assert code == EXIT_FAILED
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    summary = rows[-1]
    assert summary["failed"] == 1
    failing = [r for r in rows[:-1] if not r["pass"]]
    assert [r["check"] for r in failing] == ["all-singular-empty-base-q2"]
    assert out.with_suffix(".png").exists()
    assert "[FAIL] all-singular-empty-base-q2" in err
