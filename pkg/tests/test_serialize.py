import json
from fractions import Fraction

import pytest

from silt import linalg as la
from silt import serialize as sz
from silt.endo import EndoAlgebra
from silt.quiver import parse_quiver
from silt.reps import Rep
from silt.silting import enumerate_silting, mutate, mutation_edges

Q2 = parse_quiver("A2")


def test_frac_strings():
    assert sz.frac_str(Fraction(-2, 7)) == "-2/7"
    assert sz.frac_str(3) == "3"
    assert sz.parse_frac("5/3") == Fraction(5, 3)
    assert sz.parse_frac("4") == Fraction(4)


def test_rep_round_trip_bit_exact():
    rep = Rep(Q2, (2, 1), [la.QM(1, 2, [[Fraction(1, 3), Fraction(-2, 7)]])])
    doc = sz.rep_to_json(rep)
    back = sz.rep_from_json(Q2, doc)
    assert back.dims == rep.dims
    assert back.maps[0].rows == rep.maps[0].rows
    assert sz.dumps(doc) == sz.dumps(sz.rep_to_json(back))


def test_rep_from_json_validates():
    doc = {"dims": [1, 1], "arrows": []}
    with pytest.raises(ValueError):
        sz.rep_from_json(Q2, doc)
    doc = {"dims": [1, 1], "arrows": [
        {"src": 0, "tgt": 1, "matrix": [["1"]]},
        {"src": 0, "tgt": 1, "matrix": [["2"]]}]}
    with pytest.raises(ValueError):
        sz.rep_from_json(Q2, doc)


def test_dumps_deterministic(a2):
    objs = enumerate_silting(a2, 1)
    doc = sz.silting_list_json(a2.quiver, 1, objs)
    assert sz.dumps(doc) == sz.dumps(json.loads(sz.dumps(doc)))
    assert sz.dumps(doc).endswith("\n")


def test_silting_quiver_dot_shape(a2):
    objs, arrows = mutation_edges(a2, 1)
    dot = sz.silting_quiver_dot(a2.quiver, 1, objs, arrows)
    assert dot.count("label=") == 10  # 5 vertices + 5 arrows
    assert dot.startswith("digraph")
    assert "(P1,0), (P2,0)" in dot
    # empty graph stays valid DOT
    empty = sz.silting_quiver_dot(a2.quiver, 1, [], [])
    assert empty.startswith("digraph") and empty.rstrip().endswith("}")


def test_silting_quiver_json(a2):
    objs, arrows = mutation_edges(a2, 1)
    doc = sz.silting_quiver_json(a2.quiver, 1, objs, arrows)
    assert doc["schema"] == "silt/v1"
    assert len(doc["vertices"]) == 5
    assert all({"src", "dst", "removed", "added"} <= set(a) for a in doc["arrows"])


def test_algebra_json_and_dots(a2):
    alg = EndoAlgebra.of_sum(a2, a2.parse_stalk_sum("P1,P2"))
    doc = sz.algebra_json(alg)
    assert doc["dim"] == 3
    assert doc["cartan"] == [[1, 1], [0, 1]]
    dot = sz.algebra_quiver_dot(alg)
    assert dot.count("->") == 1
    cdot = sz.cartan_dot(alg)
    assert "cartan" in cdot


def test_triangle_renderings(a2):
    t = a2.parse_stalk_sum("P1,P2")
    _, tri = mutate(a2, t, 1, "left")
    assert sz.triangle_text(tri) == "P2 -> (P1) -> S1 -> P2[1]"
    doc = sz.triangle_json(tri)
    assert doc == {"direction": "left", "left": "P2", "mid": ["P1"],
                   "right": "S1", "removed": "P2", "added": "S1"}


def test_report_table_marks(a2):
    from silt.report import Report
    rep = Report("demo")
    rep.add("x", "i", 1, 1)
    rep.add("y", "i", 1, 2)
    rep.finding("z", "i", 0, 5)
    text = sz.report_table(rep)
    assert "[PASS] x" in text
    assert "[FAIL] y" in text
    assert "[FLAG] z" in text
