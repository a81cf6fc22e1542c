import json
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from toricqh.cli import main
from toricqh.errors import FanFileError, NotComplete
from toricqh.fanfile import document_from_fan, load_fan_file, parse_fan_text, serialize
from toricqh.fixtures import ample_phi, fixture, names

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "scripts"))
import regen_golden  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


def data(name):
    return str(resources.files("toricqh") / "data" / f"{name}.fan")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- parsing -------------------------------------------------------------------

P2_TEXT = """\
# projective plane
dim 2
rays
  1 0
  0 1
  -1 -1   # third ray
cones
  1 2
  2 3
  3 1
pl ample 1 1 1
pl half 1/2 0 -3/4
meta name projective plane
"""


def test_parse_example():
    doc = parse_fan_text(P2_TEXT)
    assert doc.dim == 2 and doc.rays == [(1, 0), (0, 1), (-1, -1)]
    assert doc.max_cones == [(0, 1), (1, 2), (2, 0)]
    assert doc.pl["half"] == (Fraction(1, 2), 0, Fraction(-3, 4))
    assert doc.meta == {"name": "projective plane"}
    fan, p2 = doc.to_fan(), fixture("p2")
    assert fan.rays == p2.rays and set(fan.max_cones) == set(p2.max_cones)


@pytest.mark.parametrize("text,line,col,fragment", [
    ("dim 2\nrays\n  1 0.5\n", 3, 5, "floating-point"),
    ("dim 2\nrays\n 1 0\n 0 1\n -1 -1\ncones\n 1 2\n 2 3\n 3 1\npl a 1 1e3 1\n", 10, 8,
     "floating-point"),
    ("dim 2\nrays\n 1 0 0\n", 3, 2, "expected 2"),
    ("dim 2\nrays\n 1 0\n 0 1\n -1 -1\ncones\n 1 4\n", 7, 2, "out of range"),
    ("dim 2\nray\n", 2, 1, "unexpected"),
    ("dim 2\ndim 3\n", 2, 1, "repeated"),
    ("rays\n 1 0\n", 2, 2, "'dim' must come"),
    ("dim 2\nrays\n 1 x\n", 3, 4, "expected integer"),
    ("dim 2\nrays\n 1 0\n 0 1\n -1 -1\ncones\n 1 2\n 2 3\n 3 1\npl a 1 1\n", 10, 1,
     "has 2 values"),
    ("dim 2\nrays\n 1 0\n 0 1\n -1 -1\ncones\n 1 2\n 2 3\n 3 1\npl a 1 1/0 1\n", 10, 8,
     "zero denominator"),
])
def test_parse_errors_carry_positions(text, line, col, fragment):
    with pytest.raises(FanFileError) as exc:
        parse_fan_text(text)
    assert (exc.value.line, exc.value.column) == (line, col)
    assert fragment in str(exc.value)


def test_missing_blocks():
    for text in ("", "dim 2\n", "dim 2\nrays\n 1 0\n"):
        with pytest.raises(FanFileError):
            parse_fan_text(text)


@pytest.mark.parametrize("name", names())
def test_bundled_files_parse_to_fixtures(name):
    doc = load_fan_file(data(name))
    assert doc.to_fan() == fixture(name)
    assert doc.pl["ample"] == tuple(Fraction(x) for x in ample_phi(name))


@pytest.mark.parametrize("name", names())
def test_round_trip(name):
    doc = load_fan_file(data(name))
    text = serialize(doc)
    again = parse_fan_text(text)
    assert serialize(again) == text
    assert again.to_fan() == doc.to_fan() and again.pl == doc.pl and again.meta == doc.meta


@given(st.sampled_from(names()),
       st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=6,
                max_size=6))
def test_round_trip_with_rational_pl(name, vals):
    fan = fixture(name)
    doc = document_from_fan(fan, {"phi": vals[:fan.n] + [Fraction(0)] * (fan.n - len(vals))})
    assert parse_fan_text(serialize(doc)).pl == doc.pl


# -- cli -----------------------------------------------------------------------

def test_validate(capsys):
    code, out, _ = run(capsys, "validate", data("p2"))
    assert code == 0
    assert out.splitlines()[0] == (
        "valid; n=3 d=2; 3 maximal cones; 1 primitive collection {1,2,3}")


def test_validate_incomplete(tmp_path, capsys):
    f = tmp_path / "bad.fan"
    f.write_text("dim 2\nrays\n 1 0\n 0 1\n -1 -1\ncones\n 1 2\n 2 3\n")
    code, _, err = run(capsys, "validate", str(f))
    assert code == 2 and NotComplete.__name__ in err


def test_malformed_file(tmp_path, capsys):
    f = tmp_path / "bad.fan"
    f.write_text("dim 2\nrays\n 1.0 0\n")
    code, _, err = run(capsys, "validate", str(f))
    assert code == 2 and "line 3" in err and "column 2" in err
    code, out, _ = run(capsys, "--machine", "validate", str(f))
    assert code == 2 and json.loads(out)["error"] == "FanFileError"


def test_missing_file(capsys):
    code, _, err = run(capsys, "validate", "/nonexistent/x.fan")
    assert code == 2


def test_cohomology_reports(capsys):
    code, out, _ = run(capsys, "--machine", "cohomology", data("p2"), "--ordinary")
    assert code == 0 and json.loads(out)["groebner_basis"] == ["z1 - z3", "z2 - z3", "z3^3"]
    code, out, _ = run(capsys, "cohomology", data("p2"), "--quantum", "ample")
    assert code == 0 and "  z3^3 - u^3" in out.splitlines() and "dimension: 3" in out
    code, out, _ = run(capsys, "cohomology", data("f1"), "--quantum", "ample", "--z0", "poly")
    assert code == 0 and "z0" in out


def test_cohomology_z0_poly_precondition(capsys):
    code, _, err = run(capsys, "cohomology", data("f3"), "--quantum", "ample", "--z0", "poly")
    assert code == 2 and "NotConvexAnticanonical" in err


def test_unknown_pl_name(capsys):
    code, _, err = run(capsys, "cohomology", data("p2"), "--quantum", "nosuch")
    assert code == 2


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", data("p2"), "--all")
    assert code == 0
    lines = out.splitlines()
    assert lines and all(l.startswith("PASS") for l in lines)


def test_verify_flop(capsys):
    code, out, _ = run(capsys, "verify", data("flop1"), "--flop", data("flop2"))
    assert code == 0
    assert out.splitlines() == ["PASS flop: quantum ideals equal",
                                "NOTE flop: ordinary Groebner bases differ"]


def test_verify_limit_outside_kahler_cone(capsys):
    code, out, _ = run(capsys, "verify", data("p2"), "--phi", "negative", "--limit")
    assert code == 1
    assert out.startswith("FAIL limit: NotInKahlerCone")


def test_verify_machine_output(capsys):
    code, out, _ = run(capsys, "--machine", "verify", data("f1"), "--grading", "--relations", "2")
    payload = json.loads(out)
    assert code == 0 and payload["ok"]
    assert {c["name"] for c in payload["checks"]} == {"grading", "relations", "relation-ideal"}


def test_verify_needs_a_check(capsys):
    code, _, _ = run(capsys, "verify", data("p2"))
    assert code == 2


def test_kahler(capsys):
    code, out, _ = run(capsys, "kahler", data("f1"), "ample")
    assert code == 0 and out.splitlines()[-1] == "interior of K(Sigma)"
    code, out, _ = run(capsys, "kahler", data("f1"), "linear")
    assert out.splitlines()[-1] == "boundary of K(Sigma)"
    code, out, _ = run(capsys, "--machine", "kahler", data("p2"), "negative")
    assert json.loads(out)["verdict"] == "outside"


def test_suite(capsys):
    code, out, _ = run(capsys, "suite")
    assert code == 0
    assert not [l for l in out.splitlines() if l.startswith("FAIL")]


@pytest.mark.parametrize("fname,argv", list(regen_golden.golden_runs()),
                         ids=[f for f, _ in regen_golden.golden_runs()])
def test_golden(fname, argv, capsys):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert json.loads(out) == json.loads((GOLDEN / fname).read_text())
