import math
from fractions import Fraction

import pytest

import coxkit


def test_bounds():
    assert coxkit.rightangled_dimension_bound() == 14
    assert coxkit.general_bound() == 996
    assert coxkit.general_bound(0) == 68
    assert coxkit.nikulin_bound(12, 4, 5) == Fraction(20)
    assert coxkit.weight(8) == Fraction(1, 3)
    assert coxkit.weight(None) == 0


def test_classify_and_labels():
    m = coxkit.CoxeterMatrix(["a", "b", "c"])
    m.set_label("a", "b", 3)
    m.set_label("b", "c", 5)
    assert coxkit.classify(m) == {"kind": "elliptic", "families": ["H3"]}
    m.set_label("a", "c", math.inf)
    assert m.label("c", "a") == math.inf
    assert coxkit.classify(m)["kind"] == "indefinite"
    assert coxkit.parse_diagram(m.to_cox()) == m


def test_quasi_lanner_table():
    table = coxkit.quasi_lanner_table()
    assert len(table) == 72
    assert all(coxkit.is_quasi_lanner(d) for _, d in table)


def test_octahedron():
    m = coxkit.examples.ideal_octahedron()
    assert coxkit.f_vector(m, 3) == {"a": [0, 12, 8], "c": 6}
    assert coxkit.audit(m, 3, "section4")["passed"]
    assert not coxkit.is_ghs(m, 3)
    assert coxkit.is_ghs(coxkit.examples.truncated_ideal_octahedron(), 3)
    nerve = coxkit.nerve(m)
    assert sorted(f["flat_dim"] for f in nerve["flats"]).count(2) == 6


def test_glue_and_cut():
    t = coxkit.examples.truncated_ideal_octahedron()
    flat = ["f000", "f001", "f010", "f011"]
    g = coxkit.glue(t, t, {x: x for x in flat})
    assert g.rank == 22
    a, b = coxkit.cut(g, flat)
    assert a.rank == b.rank == t.rank


def test_errors():
    with pytest.raises(ValueError):
        coxkit.parse_diagram("coxeter v1\nvertices a b\nedge a b 1\n")
    with pytest.raises(ValueError):
        coxkit.general_bound(-1)
    with pytest.raises(ValueError):
        coxkit.f_vector(coxkit.examples.rac_cube(3), 3)
