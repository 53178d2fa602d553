"""End-to-end checks of the command-line interface."""

import csv
import io
import json
import shutil
import subprocess
import xml.etree.ElementTree as ET

import pytest

from gregcycle import load_table3_encodings, multiplicity_sequence
from gregcycle.cli import main

SVG_NS = "{http://www.w3.org/2000/svg}"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    return list(csv.reader(io.StringIO(text)))


def test_table1_csv(capsys):
    code, out, err = run_cli(capsys, "table1")
    assert code == 0
    assert err == ""
    rows = parse_csv(out)
    assert rows[0] == ["d\\D", "Su", "Mo", "Tu", "We", "Th", "Fr", "Sa"]
    assert rows[1] == ["1 (8,15,22)", "688", "684", "687", "685", "685", "687", "684"]
    assert rows[10] == ["31", "400", "399", "401", "398", "402", "399", "401"]
    assert len(rows) == 11
    assert "\r" not in out


def test_table1_json_matches_csv(capsys):
    code, csv_out, _ = run_cli(capsys, "table1", "--format", "csv")
    assert code == 0
    code, json_out, _ = run_cli(capsys, "table1", "--format", "json")
    assert code == 0
    payload = json.loads(json_out)
    assert payload["meta"]["report"] == "table1"
    assert payload["meta"]["columns"] == ["Su", "Mo", "Tu", "We", "Th", "Fr", "Sa"]
    assert payload["meta"]["row_labels"][1] == "2 (9,16,23)"
    csv_cells = [[int(v) for v in row[1:]] for row in parse_csv(csv_out)[1:]]
    assert payload["data"] == csv_cells


def test_table1_markdown(capsys):
    code, out, _ = run_cli(capsys, "table1", "--format", "md")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("| d\\D | Su |")
    assert set(lines[1].replace("|", "").split()) == {"---"}
    assert "| 1 (8,15,22) | 688 |" in lines[2]
    assert len(lines) == 12


def test_table2_is_toeplitz(capsys):
    code, out, _ = run_cli(capsys, "table2", "--format", "json")
    assert code == 0
    data = json.loads(out)["data"]
    assert data[0] == [0, 1, 2, 3, 4, 5, 6]
    assert data[1][0] == 6
    for i in range(7):
        for j in range(7):
            assert data[i][j] == data[0][(j - i) % 7]


def test_table3_lists_the_stored_encodings(capsys):
    code, out, _ = run_cli(capsys, "table3")
    assert code == 0
    rows = parse_csv(out)
    assert rows[0] == ["weekday", "day 1", "day 29", "day 30", "day 31"]
    assert rows[1][0] == "Sunday (0)"
    assert rows[1][1] == "(0)101(17)99(17)101(17)99"
    stored = load_table3_encodings()
    for weekday in range(7):
        assert rows[1 + weekday][1:] == [stored[(d, weekday)] for d in (1, 29, 30, 31)]


def test_seq_csv(capsys):
    code, out, _ = run_cli(capsys, "seq", "--day", "1", "--weekday", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# day=1 weekday=2 (Tuesday) total=687"
    assert lines[1] == "year,count"
    assert lines[2] == "0,2"
    assert len(lines) == 402


def test_seq_json(capsys):
    code, out, _ = run_cli(capsys, "seq", "--day", "13", "--weekday", "5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["meta"]["total"] == 688
    assert payload["meta"]["weekday_name"] == "Friday"
    assert payload["data"] == list(multiplicity_sequence(13, 5).counts)


def test_seq_rejects_bad_day(capsys):
    code, out, err = run_cli(capsys, "seq", "--day", "0", "--weekday", "2")
    assert code == 2
    assert out == ""
    assert err.startswith("gregcycle: ")


def test_encode_emits_the_stored_text(capsys):
    code, out, _ = run_cli(capsys, "encode", "--day", "1", "--weekday", "2")
    assert code == 0
    assert out == "(4)100(17)101(17)102(17)97\n"
    stored = load_table3_encodings()
    code, out, _ = run_cli(capsys, "encode", "--day", "29", "--weekday", "5")
    assert code == 0
    assert out.strip() == stored[(29, 5)]


def test_encode_handles_reduced_days(capsys):
    # day 13 on Friday behaves like day 1 on Sunday
    code, out, _ = run_cli(capsys, "encode", "--day", "13", "--weekday", "5")
    assert code == 0
    assert out.strip() == load_table3_encodings()[(1, 0)]


def test_decode_round_trips_seq(capsys):
    code, out, _ = run_cli(capsys, "decode", "--period", "1", "(4)100(17)101(17)102(17)97")
    assert code == 0
    values = tuple(int(v) for v in out.split())
    assert values == multiplicity_sequence(1, 2).counts


def test_decode_lenient_then_strict(capsys):
    text = "(0)102(17)99(17)99(17)(100)"
    code, lenient_out, _ = run_cli(capsys, "decode", "--period", "31", text)
    assert code == 0
    code, canonical_out, _ = run_cli(
        capsys, "decode", "--period", "31", "(0)102(17)99(17)99(17)100"
    )
    assert code == 0
    assert lenient_out == canonical_out
    code, out, err = run_cli(capsys, "decode", "--period", "31", text, "--strict")
    assert code == 2
    assert out == ""
    assert "(at position 22)" in err


def test_decode_reports_bad_sums(capsys):
    code, _, err = run_cli(capsys, "decode", "--period", "1", "(4)100")
    assert code == 2
    assert "segment lengths sum to 100, expected 400" in err


def test_decode_rejects_unknown_periods():
    with pytest.raises(SystemExit) as excinfo:
        main(["decode", "--period", "7", "(0)400"])
    assert excinfo.value.code == 2


def test_unknown_command_exits_2():
    with pytest.raises(SystemExit) as excinfo:
        main(["bogus"])
    assert excinfo.value.code == 2


def test_verify_all_suites(capsys):
    code, out, _ = run_cli(capsys, "verify")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "all suites passed (8/8)"
    names = {line.split()[0] for line in lines[:-1]}
    assert names == {
        "oracle",
        "cycle",
        "table1",
        "table2",
        "table3",
        "reduction",
        "roundtrip",
        "periodicity",
    }
    assert all("PASS" in line for line in lines[:-1])


def test_verify_single_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "oracle")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("oracle")
    assert lines[-1] == "all suites passed (1/1)"


def test_verify_fails_on_a_corrupted_fixture(capsys, tmp_path):
    encodings = dict(load_table3_encodings())
    encodings[(30, 6)] = "(12)100(7)5(11)96(17)100(16)99"
    fixture = tmp_path / "encodings.txt"
    fixture.write_text(
        "\n".join(f"{d} {wd} {text}" for (d, wd), text in sorted(encodings.items())) + "\n",
        encoding="utf-8",
    )
    code, out, _ = run_cli(capsys, "verify", "--suite", "table3", "--fixture", str(fixture))
    assert code == 1
    assert "FAIL" in out
    assert "cell (day 30, weekday 6): first mismatch at index 300" in out
    assert out.splitlines()[-1] == "1 suite(s) failed (0/1 passed)"


def test_clock_svg_structure(capsys):
    code, out, _ = run_cli(capsys, "clock", "--period", "30")
    assert code == 0
    assert out.startswith("<?xml")
    root = ET.fromstring(out)
    texts = list(root.iter(f"{SVG_NS}text"))
    values = {t.get("data-index"): t.text for t in texts if t.get("data-role") == "value"}
    indices = [t for t in texts if t.get("data-role") == "index"]
    assert len(values) == 28
    assert len(indices) == 28
    # index 0 sits at twelve o'clock and holds the pattern's first entry
    assert values["0"] == "3"
    top = next(t for t in texts if t.get("data-role") == "value" and t.get("data-index") == "0")
    assert top.get("x") == "188.00"
    assert "day 30" in out


def test_clock_period_1_starts_with_1(capsys):
    code, out, _ = run_cli(capsys, "clock", "--period", "1")
    assert code == 0
    root = ET.fromstring(out)
    values = {
        t.get("data-index"): t.text
        for t in root.iter(f"{SVG_NS}text")
        if t.get("data-role") == "value"
    }
    assert values["0"] == "1"
    assert values["9"] == "3"


def test_clock_is_deterministic_and_self_contained(capsys):
    code, first, _ = run_cli(capsys, "clock", "--period", "31")
    assert code == 0
    code, second, _ = run_cli(capsys, "clock", "--period", "31")
    assert code == 0
    assert first == second
    assert "http" not in first.replace("http://www.w3.org/2000/svg", "")


def test_clock_index_labels_can_be_dropped(capsys):
    code, out, _ = run_cli(capsys, "clock", "--period", "1", "--no-index-labels")
    assert code == 0
    root = ET.fromstring(out)
    roles = {t.get("data-role") for t in root.iter(f"{SVG_NS}text")}
    assert "index" not in roles


def test_clock_rejects_bad_radius(capsys):
    code, _, err = run_cli(capsys, "clock", "--period", "1", "--radius", "-3")
    assert code == 2
    assert "radius" in err


def test_out_writes_lf_files(capsys, tmp_path):
    target = tmp_path / "table1.json"
    code, out, _ = run_cli(capsys, "table1", "--format", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    raw = target.read_bytes()
    assert b"\r" not in raw
    assert json.loads(raw)["meta"]["report"] == "table1"


def test_console_script_is_installed():
    exe = shutil.which("gregcycle")
    assert exe is not None
    result = subprocess.run([exe, "table2"], capture_output=True, text=True)
    assert result.returncode == 0
    assert result.stdout.splitlines()[0] == "d\\D,0,1,2,3,4,5,6"
