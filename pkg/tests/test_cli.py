import io
import json
from pathlib import Path

import jsonschema
import pytest

from freesplit import ArityMismatch
from freesplit.cli import format_session, main, parse_session, run
from freesplit.syntax import ParseError

DATA = Path(__file__).parent / "data"
SCHEMA = json.loads((Path(__import__("freesplit").__file__).parent / "report.schema.json").read_text())

OBSTRUCTION = """\
ring R = Q[x, y] order grevlex;
module M = cokernel rows 2 [ [x, y] ];
split M rank 1;
"""


def invoke(text, *flags, tmp_path, capsys):
    path = tmp_path / "s.fs"
    path.write_text(text)
    code = main(["--in", str(path), *flags])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_small_session():
    s = parse_session("ring R = Q[x] order grevlex; ideal I = x;")
    assert list(s.objects) == ["I"] and s.objects["I"].kind == "ideal"
    s = parse_session("ring R = F7[x,y] order lex;\nideal I = 8*x, y;")
    assert str(s.objects["I"].value.gens[0]) == "x"


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_session("ring R = Q[x,y] order grevlex; ideal I = x +;")
    assert info.value.line == 1 and info.value.col > 0
    with pytest.raises(ParseError) as info:
        parse_session("ring R = Q[x,y] order grevlex;\nideal I = x +;")
    assert info.value.line == 2


def test_arity_mismatch():
    text = "ring R = Q[x,y] order grevlex;\nmodule M = free 2;\nelement v in M = (1,2,3);"
    with pytest.raises(ParseError, match=ArityMismatch.__name__):
        parse_session(text)


@pytest.mark.parametrize(
    "text",
    [
        "ideal I = x;",
        "ring R = Q[x] order grevlex; gb J;",
        "ring R = Q[x] order grevlex; ideal I = x; ideal I = x^2;",
        "ring R = Q[x] order grevlex; ideal I = x; split I;",
        "ring R = Q[x] order grevlex; ideal I = x; frobnicate I;",
        "ring R = Q[x] order grevlex; ideal I = x; nf x;",
    ],
)
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_session(text)


def test_round_trip():
    s = parse_session((DATA / "full_session.fs").read_text())
    printed = format_session(s)
    again = parse_session(printed)
    assert again == s
    assert format_session(again) == printed


def test_full_session_reports_match_schema():
    s = parse_session((DATA / "full_session.fs").read_text())
    reports = run(s, verify=True)
    assert len(reports) == len(s.commands)
    for rep in reports:
        jsonschema.validate(rep, SCHEMA)
        assert rep["status"] in ("ok", "obstruction")
    by_cmd = {r["cmd"]: r for r in reports}
    assert by_cmd["gb J"]["result"]["basis"] == ["x", "y"]
    assert by_cmd["gb I"]["result"]["basis"] == ["y^2 - 1", "x - y"]


def test_obstruction_json(tmp_path, capsys):
    code, out, _ = invoke(OBSTRUCTION, "--json", tmp_path=tmp_path, capsys=capsys)
    assert code == 0
    rep = json.loads(out)
    jsonschema.validate(rep, SCHEMA)
    assert rep["status"] == "obstruction"
    assert rep["result"]["trace_ideal"] == ["x", "y"]
    assert rep["certificate"]["normal_form_of_1"] == "1"


def test_empty_session(tmp_path, capsys):
    code, out, _ = invoke("", "--json", tmp_path=tmp_path, capsys=capsys)
    assert code == 0 and out == ""


def test_parse_error_exit_code(tmp_path, capsys):
    code, out, err = invoke("ring R = Q[x] order grevlex;\nideal I = x +;\n", tmp_path=tmp_path, capsys=capsys)
    assert code == 2 and out == "" and "line 2" in err


def test_command_error_exit_code(tmp_path, capsys):
    text = OBSTRUCTION + "snf M;\n"
    code, out, _ = invoke(text, "--json", tmp_path=tmp_path, capsys=capsys)
    assert code == 1
    reps = [json.loads(line) for line in out.splitlines()]
    for rep in reps:
        jsonschema.validate(rep, SCHEMA)
    assert reps[-1]["status"] == "error" and reps[-1]["result"]["type"] == "NotUnivariate"


def test_human_output(tmp_path, capsys):
    code, out, _ = invoke(OBSTRUCTION, tmp_path=tmp_path, capsys=capsys)
    assert code == 0 and out.startswith("[obstruction] split M rank 1")


def test_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("ring R = Q[x, y] order grevlex;\nideal I = x, y;\ngb I;\n"))
    assert main(["--json", "--no-timing"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["result"]["basis"] == ["x", "y"] and rep["stats"]["elapsed_ms"] == 0


def test_seed_flag_is_reproducible(tmp_path, capsys):
    text = "ring R = Q[x] order grevlex;\nmodule A = cokernel rows 3 [ [0, 0, x] ];\nsplit A rank 2;\n"
    runs = [invoke(text, "--json", "--no-timing", "--seed", "5", tmp_path=tmp_path, capsys=capsys) for _ in range(2)]
    assert runs[0] == runs[1] and runs[0][0] == 0


def test_bad_budget(tmp_path, capsys):
    with pytest.raises(SystemExit):
        invoke(OBSTRUCTION, "--budget", "0", tmp_path=tmp_path, capsys=capsys)
