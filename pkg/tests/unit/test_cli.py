import json
from fractions import Fraction

import jsonschema
import pytest

from majorizer.cli import expand_vectors, format_vector, parse_vector, run
from majorizer.errors import DomainError, InputError, ReportError
from majorizer.schema import load_schema, validate_report

BENNETT_X = "3 3 3 9 9 9"
BENNETT_Y = "2 2 6 6 10 10"


def test_parse_vector_examples():
    v = parse_vector("1 2 3")
    assert v.exact
    assert v.components == (1, 2, 3)
    w = parse_vector("[0.5, 0.5]")
    assert not w.exact
    assert w.components == (0.5, 0.5)
    with pytest.raises(DomainError):
        parse_vector("1 -2")


def test_parse_vector_rationals_and_exact_flag():
    assert parse_vector("1/3 2/3").components == (Fraction(1, 3), Fraction(2, 3))
    assert parse_vector("0.1 0.2", exact=True).components == (Fraction(1, 10), Fraction(1, 5))
    assert parse_vector('["1/2", 1]').components == (Fraction(1, 2), 1)


@pytest.mark.parametrize("text", ["", "a b", "[1, 2", "{}", "1/0", "inf 1"])
def test_parse_vector_rejects_garbage(text):
    with pytest.raises((InputError, DomainError)):
        parse_vector(text)


@pytest.mark.parametrize("text", ["1 2 3", "1/3 2/3 5", "0.25 0.1 3", "[0.5, 2]"])
def test_format_vector_is_canonical(text):
    once = format_vector(parse_vector(text))
    assert format_vector(parse_vector(once)) == once


def test_format_vector_examples():
    assert format_vector(parse_vector("1 3/2 2/1")) == "1 3/2 2"
    assert format_vector(parse_vector("0.5 1")) == "0.5 1.0"


def test_expand_vectors_reads_files(tmp_path):
    text_file = tmp_path / "pair.txt"
    text_file.write_text("# pair\n3 3 3 9 9 9\n\n2 2 6 6 10 10\n")
    json_file = tmp_path / "pair.json"
    json_file.write_text(json.dumps([[1, 2], [2, 1]]))
    assert [v.dim for v in expand_vectors([f"@{text_file}"], exact=False)] == [6, 6]
    assert len(expand_vectors([f"@{json_file}"], exact=False)) == 2
    with pytest.raises(InputError):
        expand_vectors([f"@{tmp_path / 'missing.txt'}"], exact=False)


def test_check_exit_codes(capsys):
    assert run(["check", "7 9 11 21 27 33", "5 7 15 21 25 35"]) == 0
    assert run(["check", "--relation", "trump", BENNETT_X, BENNETT_Y]) == 0
    assert run(["check", "--relation", "majorize", BENNETT_X, BENNETT_Y]) == 1
    out = capsys.readouterr().out
    assert "first_violation_k: 3" in out
    assert "ascending_flip_k: 3" in out


def test_check_inconclusive_certificate():
    assert run(["check", "--relation", "certificate", "1 2 3 4", "4 3 2 1"]) == 5


def test_check_json_output(capsys):
    assert run(["check", "--json", BENNETT_X, BENNETT_Y]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["status"] == "fails"
    assert payload["x"] == BENNETT_X
    assert payload["ascending_flip_k"] == 3


def test_text_and_json_agree(capsys):
    code_text = run(["check", "--relation", "power", BENNETT_X, BENNETT_Y])
    text = capsys.readouterr().out
    code_json = run(["check", "--relation", "power", "--json", BENNETT_X, BENNETT_Y])
    payload = json.loads(capsys.readouterr().out)
    assert code_text == code_json == 0
    assert f"status: {payload['status']}" in text


def test_check_writes_report(tmp_path, capsys):
    out = tmp_path / "reports" / "check.json"
    assert run(["check", "--out", str(out), "2 2", "1 3"]) == 0
    assert json.loads(out.read_text())["status"] == "holds"


def test_usage_errors(capsys):
    assert run(["check", "a b", "1 2"]) == 2
    assert "error:" in capsys.readouterr().err
    assert run(["check", "1 2"]) == 2
    assert run(["check", "--json", "--text", "1 2", "2 1"]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["check", "--json", "1 -2", "1 1"]) == 2
    err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert err["code"] == 2


def test_catalyst_command(capsys):
    assert run(["catalyst", "1 3", "2 2"]) == 4
    capsys.readouterr()
    assert run(["catalyst", "--seed", "0", "0.4 0.4 0.1 0.1", "0.5 0.25 0.25 0"]) == 0
    first_line = capsys.readouterr().out.splitlines()[0]
    assert len(first_line.split()) == 2
    assert run(["catalyst", "--max-dim", "1", "0.4 0.4 0.1 0.1", "0.5 0.25 0.25 0"]) == 3


def test_gen_commands(capsys):
    assert run(["gen", "bennett", "--n", "2"]) == 0
    assert capsys.readouterr().out.splitlines() == [BENNETT_X, BENNETT_Y]
    assert run(["gen", "nonexample", "--n", "2", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["x"] == [7, 9, 11, 21, 27, 33]
    assert run(["gen", "bennett", "--n", "0"]) == 2


def test_riemann_command(capsys):
    assert run(["riemann", "--p", "2", "--n-max", "10"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[1] == "2 1.25"
    assert lines[-1] == "monotone (increasing): true"
    assert run(["riemann", "--p", "1", "--n-max", "10"]) == 2


def test_geometry_commands(capsys):
    assert run(["geometry", "membership", BENNETT_X, BENNETT_Y]) == 0
    assert "T: holds" in capsys.readouterr().out
    assert run(["geometry", "decompose", "4 3 3", "5 3 2"]) == 0
    assert "reconstruction_error" in capsys.readouterr().out
    assert run(["geometry", "decompose", BENNETT_X, BENNETT_Y]) == 1
    capsys.readouterr()
    assert run(["geometry", "extreme", "--json", "2 2 2", "1 2 3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["classified_extreme"] is False
    assert payload["agreement"] is True


def _json_report(capsys, argv, code):
    assert run([*argv, "--json"]) == code
    payload = json.loads(capsys.readouterr().out)
    jsonschema.validate(instance=payload, schema=load_schema())
    return payload


@pytest.mark.parametrize(
    "relation, code",
    [
        ("majorize", 1),
        ("submajorize", 1),
        ("supermajorize", 1),
        ("power", 0),
        ("power-klimesh", 0),
        ("trump", 0),
        ("certificate", 0),
    ],
)
def test_check_reports_match_schema(capsys, relation, code):
    payload = _json_report(capsys, ["check", "--relation", relation, BENNETT_X, BENNETT_Y], code)
    assert payload["report"] == "check"
    assert payload["relation"]


@pytest.mark.parametrize(
    "vectors, code",
    [
        (["0.4 0.4 0.1 0.1", "0.5 0.25 0.25 0"], 0),
        (["1 3", "2 2"], 4),
    ],
)
def test_catalyst_reports_match_schema(capsys, vectors, code):
    payload = _json_report(capsys, ["catalyst", "--seed", "0", *vectors], code)
    assert payload["found"] is (code == 0)


def test_catalyst_not_found_report_matches_schema(capsys):
    argv = ["catalyst", "--max-dim", "1", "0.4 0.4 0.1 0.1", "0.5 0.25 0.25 0"]
    payload = _json_report(capsys, argv, 3)
    assert payload["catalyst"] is None


@pytest.mark.parametrize("family", ["bennett", "nonexample"])
def test_gen_reports_match_schema(capsys, family):
    payload = _json_report(capsys, ["gen", family, "--n", "3"], 0)
    assert payload["family"] == family


def test_riemann_report_matches_schema(capsys):
    payload = _json_report(capsys, ["riemann", "--p", "2", "--n-max", "5"], 0)
    assert len(payload["values"]) == 5


@pytest.mark.parametrize(
    "argv, code",
    [
        (["geometry", "membership", BENNETT_X, BENNETT_Y], 0),
        (["geometry", "extreme", "2 2 2", "1 2 3"], 0),
        (["geometry", "decompose", "4 3 3", "5 3 2"], 0),
        (["geometry", "decompose", BENNETT_X, BENNETT_Y], 1),
    ],
)
def test_geometry_reports_match_schema(capsys, argv, code):
    payload = _json_report(capsys, argv, code)
    assert payload["report"] == argv[1]


def test_error_report_matches_schema(capsys):
    assert run(["check", "--json", "1 -2", "1 1"]) == 2
    err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    jsonschema.validate(instance=err, schema=load_schema())
    assert err["report"] == "error"


def test_validate_report_rejects_malformed_payloads():
    with pytest.raises(ReportError):
        validate_report({"report": "check", "status": "maybe"})
    with pytest.raises(ReportError):
        validate_report({"report": "gen", "family": "bennett", "n": 2, "x": [1], "y": [1], "z": 0})
    membership = {"S": True, "T": "holds", "P": "holds", "chain_consistent": True}
    assert validate_report({"report": "membership", **membership})["S"] is True
