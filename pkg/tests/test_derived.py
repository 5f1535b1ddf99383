import pytest

from silt.derived import StalkSum, degree


def test_stalk_sum_ordering_and_json():
    s = StalkSum([("P2", 1), ("P1", 0), ("P1", 1)])
    assert s.entries == (("P1", 0), ("P1", 1), ("P2", 1))
    assert s.pretty() == "{P1, P1[1], P2[1]}"
    assert StalkSum.from_json(s.to_json()) == s
    assert s.shifted(2).entries[0] == ("P1", 2)
    assert degree(("P1", 3)) == 3
    assert s.multiplicity(("P1", 1)) == 1
    assert s.is_basic()
    assert not s.add(("P1", 0)).is_basic()


def test_module_homs_a2(a2):
    assert a2.module_hom_dim("P1", "P1") == 1
    assert a2.module_hom_dim("P2", "P1") == 1
    assert a2.module_hom_dim("P1", "P2") == 0
    assert a2.module_hom_dim("P1", "S1") == 1
    assert a2.module_hom_dim("S1", "P1") == 0
    assert a2.module_ext_dim("S1", "P2") == 1
    assert a2.module_ext_dim("P2", "S1") == 0


def test_stalk_hom_shift_cases(a2):
    # same shift = module homs; shift difference one = ext; otherwise zero
    assert a2.stalk_hom_dim(("P2", 0), ("P1", 0)) == 1
    assert a2.stalk_hom_dim(("S1", 0), ("P2", 1)) == 1
    assert a2.stalk_hom_dim(("S1", 0), ("P2", 2)) == 0
    assert a2.stalk_hom_dim(("S1", 0), ("P2", -1)) == 0
    assert a2.stalk_hom_dim(("S1", 3), ("P2", 4)) == 1


def test_hom_space_matches_stalk_table(a2):
    for aid in ("P1", "P2", "S1"):
        for bid in ("P1", "P2", "S1"):
            for off in (-1, 0, 1, 2):
                cx_a = a2.stalk_complex(aid, 0)
                cx_b = a2.stalk_complex(bid, off)
                assert a2.hom(cx_a, cx_b).dim == a2.stalk_hom_dim(
                    (aid, 0), (bid, off))


def test_projective_presentation(a3):
    # non-projective stalks get a two-term projective presentation
    cx = a3.stalk_complex("S2", 0)
    assert set(cx.degrees()) == {-1, 0}
    assert a3.normalize(cx) == StalkSum([("S2", 0)])
    # projectives stay one-term
    cx = a3.stalk_complex("P2", 0)
    assert cx.degrees() == [0]


def test_cone_of_identity_vanishes(a2):
    cx = a2.stalk_complex("S1", 0)
    hs = a2.hom(cx, cx)
    ident = None
    for f in (hs.from_coords(c) for c in ([1], [-1])):
        comp = a2.cohomology_map(f, 0)
        if not comp.is_zero():
            ident = f
            break
    assert ident is not None
    assert a2.normalize(a2.cone(ident)) == StalkSum([])


def test_cone_realizes_extension(a2):
    # the ext class S1 -> P2[1] has cone P1[1] (rotated SES 0->P2->P1->S1->0)
    f = a2.hom(a2.stalk_complex("S1", 0), a2.stalk_complex("P2", 1))
    assert f.dim == 1
    g = f.from_coords([1])
    assert a2.normalize(a2.cone(g)) == StalkSum([("P1", 1)])


def test_cohomology_dims(a2):
    cx = a2.stalk_complex("S1", 2)
    h, _, _ = a2.cohomology(cx, -2)
    assert h.dims == (1, 0)
    h0, _, _ = a2.cohomology(cx, 0)
    assert h0.total_dim() == 0


def test_parse_stalks(a2):
    assert a2.parse_stalk("P1[2]") == ("P1", 2)
    assert a2.parse_stalk("S1[-1]") == ("S1", -1)
    assert a2.parse_stalk_sum("P1, P2[1]") == StalkSum([("P1", 0), ("P2", 1)])
    with pytest.raises(KeyError):
        a2.parse_stalk("Q7")
    with pytest.raises((KeyError, ValueError)):
        a2.parse_stalk("P1[")


def test_sum_hom_additivity(a2):
    x = a2.parse_stalk_sum("P1,P2")
    y = a2.parse_stalk_sum("S1,P2[1]")
    expect = sum(a2.stalk_hom_dim(p, q) for p in x for q in y)
    assert a2.sum_hom_dim(x, y) == expect
