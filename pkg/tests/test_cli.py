import json
import subprocess
import sys

import pytest

from wgcalc import characters, spherical, weingarten
from wgcalc.cli import main
from wgcalc.records import parse_rational_record


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["value", "--group", "u", "--n", "2", "--N", "3", "--class", "1,1"], {"num": "1", "den": "8"}),
        (["value", "--group", "o", "--n", "1", "--N", "5", "--class", "1"], {"num": "1", "den": "5"}),
        (["value", "--group", "sp", "--n", "1", "--N", "2", "--class", "1"], {"num": "1", "den": "4"}),
        (["value", "--group", "sp", "--n", "1", "--N", "2", "--class", "(1 2)"], {"num": "-1", "den": "4"}),
        (["value", "--group", "u", "--n", "2", "--N", "3", "--class", "2,1"], {"num": "-1", "den": "24"}),
        (["value", "--group", "o", "--n", "2", "--N", "3", "--class", "1,3,2,4"], {"num": "-1", "den": "30"}),
    ],
)
def test_value(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert json.loads(out) == expected


def test_value_parse_error(capsys):
    code, out, err = run(capsys, "value", "--group", "u", "--n", "2", "--N", "3", "--class", "x")
    assert code == 2 and out == "" and "error" in err


def test_value_scale_error(capsys):
    code, out, _ = run(capsys, "value", "--group", "o", "--n", "9", "--N", "3", "--class", "9")
    assert code == 3 and out == ""


def test_missing_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["value", "--group", "u"])
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "group, n, N, expected",
    [("u", 2, 3, {"2": "-1/24", "1,1": "1/8"}), ("o", 2, 3, {"2": "-1/30", "1,1": "2/15"}), ("u", 1, 7, {"1": "1/7"})],
)
def test_table(capsys, group, n, N, expected):
    code, out, _ = run(capsys, "table", "--group", group, "--n", str(n), "--N", str(N))
    assert code == 0
    got = {e["class"]: str(parse_rational_record(e)) for e in json.loads(out)}
    assert got == expected


def test_sp_table_fields(capsys):
    code, out, _ = run(capsys, "table", "--group", "sp", "--n", "2", "--N", "2")
    entries = json.loads(out)
    assert [e["class"] for e in entries] == ["2", "1,1"]
    assert entries[1]["representative"] == "1,2,3,4"
    assert entries[1]["representative_sign"] == 1
    assert parse_rational_record(entries[1]) == parse_rational_record(entries[1]["representative_value"])


def test_table_scale(capsys):
    code, _, _ = run(capsys, "table", "--group", "u", "--n", "9", "--N", "3")
    assert code == 3


@pytest.mark.parametrize(
    "spec, expected",
    [
        ({"group": "u", "N": 3, "a": [1, 1], "b": [1, 2], "d": [1, 1], "c": [1, 2]}, {"num": "1", "den": "12"}),
        ({"group": "o", "N": 3, "a": [1, 1, 1, 1], "b": [1, 1, 1, 1]}, {"num": "1", "den": "5"}),
        ({"group": "u", "N": 3, "a": [1], "b": [1], "c": [], "d": []}, {"num": "0", "den": "1"}),
    ],
)
def test_integrate_inline_and_file(capsys, tmp_path, spec, expected):
    code, out, _ = run(capsys, "integrate", json.dumps(spec))
    assert code == 0 and json.loads(out) == expected
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "integrate", str(path))
    assert code == 0 and json.loads(out) == expected


def test_integrate_with_mc(capsys):
    spec = json.dumps({"group": "u", "N": 3, "a": [1], "b": [1], "c": [1], "d": [1]})
    code, out, _ = run(capsys, "integrate", spec, "--mc", "20000", "--seed", "42")
    record = json.loads(out)
    assert code == 0
    assert record["exact"] == {"num": "1", "den": "3"}
    assert set(record["estimate"]) == {"mean", "mean_imag", "stderr", "samples", "seed"}
    assert abs(record["z"]) < 4
    assert main(["integrate", spec, "--mc", "20000", "--seed", "42"]) == 0
    assert capsys.readouterr().out == out


def test_integrate_malformed(capsys):
    code, out, _ = run(capsys, "integrate", '{"group": "o", "N": 3}')
    assert code == 2 and out == ""
    code, _, _ = run(capsys, "integrate", "/nonexistent/spec.json")
    assert code == 2


def test_integrate_numeric_failure(capsys, monkeypatch):
    from wgcalc import cli
    from wgcalc.errors import NumericalFailureError

    def boom(*args, **kwargs):
        raise NumericalFailureError("nan")

    monkeypatch.setattr(cli, "estimate_moment", boom)
    spec = json.dumps({"group": "o", "N": 2, "a": [1, 1], "b": [1, 1]})
    code, _, _ = run(capsys, "integrate", spec, "--mc", "1000")
    assert code == 4


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest", "--level", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines and all(line.startswith("PASS ") for line in lines)


def test_selftest_detects_corrupt_cache(capsys, tmp_path):
    path = characters.write_cache_file(3, tmp_path)
    text = path.read_text().replace("2,1;1,1,1;2", "2,1;1,1,1;5")
    path.write_text(text)
    try:
        code, out, _ = run(capsys, "--cache-dir", str(tmp_path), "selftest", "--level", "3")
    finally:
        characters.clear_cache()
        spherical.clear_cache()
        weingarten.clear_cache()
    assert code == 1
    assert "FAIL character-cache" in out


def test_selftest_detects_unreadable_cache(capsys, tmp_path):
    (tmp_path / "characters_2.txt").write_text("garbage\n")
    code, out, _ = run(capsys, "--cache-dir", str(tmp_path), "selftest")
    assert code == 1 and "character-cache" in out


def test_cache_files_written_and_no_cache(capsys, tmp_path):
    run(capsys, "--cache-dir", str(tmp_path), "value", "--group", "o", "--n", "2", "--N", "3", "--class", "2")
    assert sorted(p.name for p in tmp_path.iterdir()) == ["characters_2.txt", "characters_4.txt"]
    other = tmp_path / "other"
    run(capsys, "--no-cache", "--cache-dir", str(other), "table", "--group", "u", "--n", "3", "--N", "3")
    assert not other.exists()


def test_cache_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "--cache-dir", str(tmp_path), "cache", "build", "--n", "3")
    assert code == 0 and len(out.splitlines()) == 3
    run(capsys, "--cache-dir", str(tmp_path), "cache", "clear")
    assert list(tmp_path.glob("characters_*.txt")) == []


def test_console_script_is_deterministic(tmp_path):
    cmd = [sys.executable, "-m", "wgcalc.cli", "--no-cache", "table", "--group", "sp", "--n", "3", "--N", "3"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
