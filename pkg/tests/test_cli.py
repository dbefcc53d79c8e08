import io
import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

from nlie import report as rp
from nlie.cli import COMMANDS, run

DATA = Path(__file__).resolve().parent.parent / "data"

BROKEN = """nlie
arity 2
dim 3
field q
bracket 1 2 = 1*3
bracket 1 3 = 1*1
"""


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--json")
    assert code == 0, err
    return json.loads(out)


JSON_COMMANDS = [c for c in COMMANDS if c not in ("export",)]
SOURCES = [
    ("--catalog", "example_3_1", "--field", "gf:2"),
    ("--catalog", "example_3_2", "--field", "q"),
    ("--catalog", "simple:2", "--field", "gf:2"),
    ("--catalog", "simple:2+abelian:2:1", "--field", "gf:3"),
]


def _applicable(command, source):
    if command == "audit":
        return True
    if command in ("enumerate",) and "q" in source:
        return False
    return True


@pytest.mark.parametrize("source", SOURCES, ids=lambda s: f"{s[1]}@{s[3]}")
@pytest.mark.parametrize("command", JSON_COMMANDS)
def test_reports_validate_against_schema(command, source):
    code, out, err = call(command, *source, "--json")
    if not _applicable(command, source):
        assert code == 2
        return
    assert code == 0, err
    doc = json.loads(out)
    rp.validate_document(doc)
    assert doc["command"] == command and doc["schema"] == rp.SCHEMA_VERSION


@pytest.mark.parametrize("command", JSON_COMMANDS)
def test_no_float_tokens(command):
    code, out, _ = call(command, "--catalog", "example_3_1", "--field", "gf:3", "--json")
    assert code == 0

    def walk(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    walk(json.loads(out))
    assert not re.search(r"\d\.\d|\de[+-]?\d", out)


@pytest.mark.parametrize("command", COMMANDS)
def test_deterministic_across_runs(command):
    argv = [command, "--catalog", "example_3_2", "--field", "gf:2", "--json"]
    assert call(*argv) == call(*argv)


def test_deterministic_across_processes():
    argv = [sys.executable, "-m", "nlie.cli", "analyze", "--catalog", "example_3_1", "--field", "gf:2", "--json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first


def test_analyze_example_3_1():
    doc = call_json("analyze", "--catalog", "example_3_1", "--field", "gf:2")
    an = doc["analysis"]
    assert an["F"] == {"dim": 1, "basis": [["1", "0", "0", "0"]]}
    assert an["phi"] == an["F"]
    assert an["verdicts"]["e_algebra"] is True
    assert an["verdicts"]["elementary"] is False
    assert an["verdicts"]["nilpotent"] is True
    assert an["frattini_series"]["index"] == 2


def test_analyze_over_q_without_lattice():
    doc = call_json("analyze", "--catalog", "simple:2", "--field", "q")
    an = doc["analysis"]
    assert an["F"] is None and an["verdicts"]["simple"] is True
    assert any("Q" in n or "characteristic" in n for n in an["notes"])


def test_audit_example_3_2():
    code, out, _ = call("audit", "--catalog", "example_3_2", "--field", "gf:2", "--json")
    assert code == 0
    statuses = [r["status"] for r in json.loads(out)["claim_audit"]]
    assert statuses.count("mismatch") == 1


def test_frattini_shortcut_over_q():
    doc = call_json("frattini", "--catalog", "abelian:3:4", "--field", "q")
    assert doc["frattini"]["F"] == {"dim": 0, "basis": []}
    assert doc["frattini"]["method"] == "shortcut"


def test_enumerate_counts():
    doc = call_json("enumerate", "--catalog", "example_3_1", "--field", "gf:2", "--list")
    en = doc["enumeration"]
    assert (en["subalgebra_count"], en["maximal_count"], en["ideal_count"]) == (59, 7, 17)
    assert en["subspace_count"] == en["galois_number"] == 67
    assert len(en["subalgebras"]) == 59


def test_derivations_command():
    doc = call_json("derivations", "--catalog", "simple:2", "--field", "q")
    assert doc["derivations"]["dim"] == 3 and doc["derivations"]["residual_free"]


def test_series_over_q_non_nilpotent_keeps_going():
    doc = call_json("series", "--catalog", "simple:3", "--field", "q")
    assert doc["series"]["frattini_series"] is None and doc["series"]["notes"]
    assert doc["series"]["ideal_series"]["nilpotent"] is False


def test_file_input_and_export(tmp_path):
    path = DATA / "example_3_1.nlie"
    code, out, _ = call("export", str(path))
    assert code == 0 and out == path.read_text(encoding="utf-8")
    doc = call_json("frattini", str(path), "--field", "gf:5")
    assert doc["field"] == "gf:5" and doc["frattini"]["F"]["dim"] == 1
    assert doc["source"] == str(path)


def test_random_catalog_entries():
    doc = call_json("validate", "--catalog", "random:3:4", "--field", "gf:3", "--seed", "7")
    assert doc["validation"]["ok"] and doc["arity"] == 3 and doc["dim"] == 4
    assert call_json("validate", "--catalog", "random:3:4", "--field", "gf:3", "--seed", "7") == doc
    assert call("validate", "--catalog", "random:3:4", "--field", "q")[0] == 1


def test_text_output():
    code, out, _ = call("frattini", "--catalog", "example_3_1", "--field", "gf:2")
    assert code == 0
    assert "F: span[(1 0 0 0)] (dim 1)" in out


def test_timing_flag_is_schema_valid():
    doc = call_json("frattini", "--catalog", "example_3_1", "--field", "gf:2", "--timing")
    assert isinstance(doc["elapsed_ms"], int)
    rp.validate_document(doc)


# -- exit codes ----------------------------------------------------------------


@pytest.mark.parametrize(
    "argv,code",
    [
        (["frattini", "--catalog", "simple:2", "--field", "q"], 2),
        (["enumerate", "--catalog", "example_3_1", "--field", "q"], 2),
        (["enumerate", "--catalog", "example_3_2", "--field", "gf:2", "--cap", "3"], 2),
        (["frattini", "--catalog", "nonsense"], 1),
        (["frattini", "--catalog", "simple:2", "--field", "gf:4"], 1),
        (["frattini"], 1),
        (["frattini", str(DATA / "simple-2.nlie"), "--catalog", "simple:2"], 1),
        (["frattini", "/does/not/exist.nlie"], 1),
        (["audit", str(DATA / "simple-2.nlie")], 1),
        (["validate", "--catalog", "simple:2"], 0),
    ],
)
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_usage_errors_exit_one():
    with pytest.raises(SystemExit) as info:
        run(["bogus"], io.StringIO(), io.StringIO())
    assert info.value.code == 1


def test_parse_error_reports_line(tmp_path):
    path = tmp_path / "bad.nlie"
    path.write_text("nlie\narity 3\ndim 4\nfield q\nbracket 3 2 4 = 1*1\n")
    code, _, err = call("validate", str(path))
    assert code == 1 and "line 5: indices must be strictly increasing" in err


def test_fundamental_identity_warning_and_strict(tmp_path):
    path = tmp_path / "broken.nlie"
    path.write_text(BROKEN)
    code, out, err = call("validate", str(path), "--json")
    assert code == 0 and json.loads(out)["validation"]["ok"] is False
    code, _, err = call("derivations", str(path))
    assert code == 0 and "warning" in err
    code, _, err = call("validate", str(path), "--strict")
    assert code == 1 and "fundamental identity" in err


def test_denominator_not_invertible(tmp_path):
    path = tmp_path / "half.nlie"
    path.write_text("nlie\narity 2\ndim 2\nfield q\nbracket 1 2 = 1/2*1\n")
    assert call("validate", str(path), "--field", "gf:2")[0] == 1
    assert call("validate", str(path), "--field", "gf:3")[0] == 0
