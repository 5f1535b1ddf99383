from silt import reps
from silt.indecs import IndecTable, decompose, tau, tau_inverse
from silt.quiver import parse_quiver


def test_counts_match_positive_roots():
    # number of indecomposables = number of positive roots
    for label, count in (("A2", 3), ("A3:>>", 6), ("A3:><", 6), ("D4", 12)):
        assert len(IndecTable(parse_quiver(label))) == count


def test_ids_and_aliases_a2():
    t = IndecTable(parse_quiver("A2"))
    assert {e.id for e in t.entries} == {"P1", "P2", "S1"}
    # P1 is injective too, so I2 aliases it
    assert t.entry("I2").id == "P1"
    assert t.entry("S2").id == "P2"
    assert [e.id for e in t.projectives()] == ["P1", "P2"]


def test_identify_and_decompose():
    q = parse_quiver("A3:>>")
    t = IndecTable(q)
    p0 = reps.projective_rep(q, 0)
    assert t.identify(p0) == "P1"
    s_mid = reps.simple_rep(q, 1)
    total, _, _ = reps.direct_sum([p0, s_mid, s_mid])
    got = decompose(total, t)
    assert got == {"P1": 1, "S2": 2}
    # a root dimension vector that is actually decomposable
    s0 = reps.simple_rep(q, 0)
    s2 = reps.simple_rep(q, 2)
    fake, _, _ = reps.direct_sum([s0, s2, s_mid])
    assert t.identify(fake) is None


def test_tau_orbits():
    q = parse_quiver("A2")
    t = IndecTable(q)
    p2 = t.entry("P2").rep
    m = tau_inverse(p2)
    assert m is not None and tuple(m.dims) == (1, 0)
    assert tau(m).dims == p2.dims
    # injectives die under inverse translation
    i_top = t.entry("P1").rep  # P1 is injective in A2
    assert tau_inverse(i_top) is None
