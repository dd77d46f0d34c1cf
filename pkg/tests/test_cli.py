import json
import re
from importlib import resources

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wedgehom import cli
from wedgehom.grammar import Prim, SpecSyntaxError, Wedge, build_graph, canonicalize, parse_spec, serialize
from wedgehom.graph import canonical_form, cycle, path, wedge

SCHEMA = json.loads(resources.files("wedgehom").joinpath("schema/report-v1.json").read_text())


def validate(obj):
    jsonschema.validate(obj, SCHEMA)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_examples():
    assert parse_spec("P(5)") == Prim("P", 5)
    e = parse_spec("wedge(C(4)@1, P(5)@3)")
    assert e == Wedge(((Prim("C", 4), 1), (Prim("P", 5), 3)))
    e = parse_spec("wedge(P(7)@1, P(7)@1, P(5)@1)")
    assert [x.size for x, _ in e.operands] == [7, 7, 5]
    assert parse_spec(" wedge ( C ( 4 ) @ 1 ,P(5)@ 3 ) ") == parse_spec("wedge(C(4)@1, P(5)@3)")


@pytest.mark.parametrize(
    "text, position",
    [
        ("Q(3)", 0),
        ("P(3", 3),
        ("wedge(P(3)@4, P(2)@1)", 11),
        ("wedge(P(3)@1)", 13),
        ("C(2)", 2),
        ("P(3) x", 5),
        ("wedge(P(3)@, P(2)@1)", 11),
    ],
)
def test_parse_errors_report_position(text, position):
    with pytest.raises(SpecSyntaxError) as info:
        parse_spec(text)
    assert info.value.position == position


def test_build_graph():
    assert build_graph(parse_spec("P(4)")) == path(4)
    g = build_graph(parse_spec("wedge(C(4)@1, P(5)@3)"))
    assert g == wedge([(cycle(4), 0), (path(5), 2)])
    nested = build_graph(parse_spec("wedge(wedge(P(2)@2, P(2)@1)@2, P(2)@1)"))
    assert canonical_form(nested) == canonical_form(wedge([(path(3), 1), (path(2), 0)]))


def test_canonicalize_moves_cycle_bases():
    e = canonicalize(parse_spec("wedge(C(5)@3, P(4)@2)"))
    assert serialize(e) == "wedge(C(5)@1, P(4)@2)"


@st.composite
def exprs(draw, depth=2):
    if depth == 0 or draw(st.booleans()):
        kind = draw(st.sampled_from("PC"))
        return Prim(kind, draw(st.integers(3 if kind == "C" else 1, 9)))
    ops = []
    for _ in range(draw(st.integers(2, 3))):
        e = draw(exprs(depth=depth - 1))
        ops.append((e, draw(st.integers(1, e.vertex_count))))
    return Wedge(tuple(ops))


@given(exprs())
def test_round_trip(e):
    assert parse_spec(serialize(e)) == e


@given(exprs(), st.randoms())
@settings(max_examples=50)
def test_round_trip_with_whitespace(e, r):
    tokens = re.findall(r"wedge|\d+|\S", serialize(e))
    text = "".join(tok + " " * r.randint(0, 2) for tok in tokens)
    assert parse_spec(text) == e


def test_verify_match_exit_0(capsys):
    code, out, _ = run(capsys, "verify", "wedge(C(4)@1, C(4)@1)")
    assert code == 0
    assert "predicted:  S^1" in out and "b~1=1" in out


def test_verify_p4(capsys):
    code, out, _ = run(capsys, "verify", "P(4)")
    assert code == 0 and "predicted:  pt" in out


def test_verify_unknown_exit_3(capsys):
    code, out, _ = run(capsys, "verify", "wedge(P(3)@2, P(3)@2)")
    assert code == 3 and "unrecognized" in out


def test_verify_mismatch_exit_2(capsys, monkeypatch):
    from wedgehom import families
    from wedgehom.homotopy import POINT

    real = families.recognize
    monkeypatch.setattr(
        families, "recognize", lambda e: families.Recognition("path", POINT, real(e).params)
    )
    code, out, _ = run(capsys, "verify", "P(5)")
    assert code == 2 and "no (dimensions [1])" in out


def test_usage_errors_exit_1(capsys):
    assert run(capsys, "verify", "P(3")[0] == 1
    assert run(capsys, "verify", "P(30)")[0] == 1
    assert run(capsys, "verify", "--max-vertices", "5", "P(6)")[0] == 1
    assert run(capsys, "homology", "--max-faces", "10", "P(8)")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "sweep", "nonsense")[0] == 1


def test_predict_exit_0_even_when_unknown(capsys):
    code, out, _ = run(capsys, "predict", "wedge(C(5)@1, C(5)@2)")
    assert code == 0 and "S^2" in out
    code, out, _ = run(capsys, "predict", "wedge(P(3)@2, P(3)@2)")
    assert code == 0 and "b~0=1" in out


def test_homology_and_reduce(capsys):
    code, out, _ = run(capsys, "homology", "C(6)")
    assert code == 0 and "b~1=2" in out
    code, out, _ = run(capsys, "reduce", "wedge(C(4)@1, C(4)@1)")
    assert code == 0 and "link collapsible" in out and "fold type:  S^1" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["homology", "--json", "C(6)"],
        ["reduce", "--json", "wedge(C(3)@1, C(3)@1)"],
        ["predict", "--json", "wedge(C(4)@1, P(5)@3)"],
        ["predict", "--json", "wedge(P(3)@2, P(3)@2)"],
        ["verify", "--json", "--collapse", "wedge(P(4)@4, P(5)@1)"],
        ["verify", "--json", "--field", "2", "wedge(P(7)@1, P(7)@1, P(5)@1)"],
    ],
)
def test_json_reports_validate(capsys, argv):
    _, out, _ = run(capsys, *argv)
    report = json.loads(out)
    validate(report)
    assert report["version"] == "1"
    assert ("match" in report) == (argv[0] == "verify" and report["predicted"] != "unknown")


def test_terminal_discrepancy_in_report(capsys):
    _, out, _ = run(capsys, "verify", "--json", "wedge(P(4)@4, P(5)@1)")
    r = json.loads(out)
    assert r["params"]["discrepancy"] and r["params"]["case_formula"] == "S^1"
    assert r["predicted"] == "S^2" and r["match"]
    assert r["homology"]["reduced_betti"] == {"2": 1}


def test_sweep_cycle_wedge_cycle(capsys, tmp_path):
    out_file = tmp_path / "ccc.txt"
    code, out, _ = run(capsys, "sweep", "cycle-wedge-cycle", "--output", str(out_file))
    assert code == 0
    assert "100 instances, 0 mismatches" in out
    lines = (tmp_path / "ccc.jsonl").read_text().splitlines()
    assert len(lines) == 100
    for line in lines:
        validate(json.loads(line))
    assert out_file.read_text().strip() == out.strip()


def test_sweep_parallel_order_is_deterministic(capsys):
    _, serial, _ = run(capsys, "sweep", "path-wedge-path", "--range", "1:4", "--json")
    _, parallel, _ = run(capsys, "sweep", "path-wedge-path", "--range", "1:4", "--json", "--jobs", "3")
    strip = lambda text: [
        {k: v for k, v in json.loads(x).items() if k != "seconds"} for x in text.splitlines()
    ]
    assert strip(serial) == strip(parallel)


def test_sweep_skips_oversized(capsys):
    code, out, err = run(capsys, "sweep", "cycles", "--range", "3:8", "--max-vertices", "6")
    assert code == 0
    assert "skipped" in err and "2 skipped" in out


def test_sweep_cycle_wedge_path_grid(capsys):
    code, out, _ = run(capsys, "sweep", "cycle-wedge-path", "--range", "1:1")
    assert code == 0
    assert "27 instances, 0 mismatches" in out
    assert "3a    3b+1  3c+2  S^{α}" in out


def test_sweep_terminal_paths_and_random(capsys):
    code, out, _ = run(capsys, "sweep", "terminal-paths", "--range", "2:2")
    assert code == 0 and "DISCREPANCY" in out
    code, a, _ = run(capsys, "sweep", "random-wedges", "--count", "8", "--seed", "5", "--json")
    _, b, _ = run(capsys, "sweep", "random-wedges", "--count", "8", "--seed", "5", "--json")
    assert code in (0, 2)
    assert [json.loads(x)["spec"] for x in a.splitlines()] == [json.loads(x)["spec"] for x in b.splitlines()]


def test_environment_defaults(capsys, monkeypatch):
    monkeypatch.setenv("WEDGEHOM_MAX_VERTICES", "4")
    assert run(capsys, "homology", "P(5)")[0] == 1
    monkeypatch.setenv("WEDGEHOM_MAX_VERTICES", "26")
    monkeypatch.setenv("WEDGEHOM_FIELD", "3")
    _, out, _ = run(capsys, "homology", "--json", "C(6)")
    assert json.loads(out)["homology"]["ring"] == "GF(3)"
