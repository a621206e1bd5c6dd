import json
import re
import subprocess
import sys


from fanopencils.cli import main

CHECK_LINE = re.compile(r"^CHECK [a-z_]+\.[a-z_0-9]+: (PASS|FAIL) \(\d+ms\)$")


def test_verify_digraph_text(capsys):
    assert main(["verify", "digraph"]) == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[-1] == "OVERALL: PASS"
    body = [ln for ln in lines[:-1] if ln.startswith("CHECK")]
    assert len(body) == 7
    for ln in body:
        assert CHECK_LINE.match(ln), ln


def test_verify_cycles_json(capsys):
    assert main(["verify", "cycles", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["selector"] == "cycles"
    assert payload["pass"] is True
    assert len(payload["checks"]) == 5
    assert all(c["pass"] for c in payload["checks"])


def test_verify_uh_json_schema(capsys):
    assert main(["verify", "uh", "--format", "json", "--sample", "6"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == {"pass", "aut_order", "failures"}
    assert payload["pass"] is True
    assert payload["aut_order"] % 504 == 0
    assert payload["failures"] == []


def test_verify_bad_selector_usage_error(capsys):
    assert main(["verify", "bogus"]) == 2
    capsys.readouterr()


def test_verify_output_file(tmp_path, capsys):
    path = tmp_path / "report.txt"
    assert main(["verify", "voltage", "--output", str(path)]) == 0
    capsys.readouterr()
    text = path.read_text()
    assert "OVERALL: PASS" in text
    assert "CHECK voltage.round_trip: PASS" in text


def test_verify_unwritable_output(capsys):
    code = main(["verify", "digraph", "--output", "/nonexistent-dir/report.txt"])
    assert code == 1
    capsys.readouterr()


def test_table_rows_and_empty_diff(capsys):
    assert main(["table"]) == 0
    out = capsys.readouterr().out
    assert "124_0 : 165_3, 325_6, 364_5" in out
    assert "651_0 : 643_2, 253_4, 241_3" in out
    assert "diff against golden table: empty" in out


def test_export_digraph_json(capsys):
    assert main(["export", "digraph", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["vertices"]) == 168
    assert len(payload["arcs"]) == 504
    assert len(payload["cycles"]) == 126


def test_export_quotient_json(capsys):
    assert main(["export", "quotient", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["reps"]) == 24
    assert len(payload["arcs"]) == 72


def test_export_coxeter_dot(capsys):
    assert main(["export", "coxeter", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph coxeter {")
    assert out.count(" -- ") == 42


def test_export_deterministic_bytes(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["export", "digraph", "--output", str(a)]) == 0
    assert main(["export", "digraph", "--output", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_export_unwritable_path(capsys):
    assert main(["export", "digraph", "--output", "/nonexistent-dir/x.json"]) == 1
    capsys.readouterr()


def test_missing_command_is_usage_error(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "fanopencils", "table"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert "124_0 : 165_3, 325_6, 364_5" in proc.stdout
