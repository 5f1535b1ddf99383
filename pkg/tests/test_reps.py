from silt import reps
from silt.quiver import parse_quiver

Q2 = parse_quiver("A2")
Q3 = parse_quiver("A3:>>")


def test_thin_shapes():
    assert reps.projective_rep(Q2, 0).dims == (1, 1)
    assert reps.projective_rep(Q2, 1).dims == (0, 1)
    assert reps.injective_rep(Q2, 0).dims == (1, 0)
    assert reps.injective_rep(Q2, 1).dims == (1, 1)
    assert reps.simple_rep(Q2, 0).dims == (1, 0)


def test_hom_dims_a2():
    p1 = reps.projective_rep(Q2, 0)
    p2 = reps.projective_rep(Q2, 1)
    s1 = reps.simple_rep(Q2, 0)
    assert reps.hom_dim(p1, p1) == 1
    assert reps.hom_dim(p1, p2) == 0
    assert reps.hom_dim(p2, p1) == 1
    assert reps.hom_dim(p1, s1) == 1
    assert reps.hom_dim(s1, p1) == 0


def test_euler_and_ext():
    p2 = reps.projective_rep(Q2, 1)
    s1 = reps.simple_rep(Q2, 0)
    assert reps.euler_form(Q2, s1.dims, p2.dims) == -1
    assert reps.ext1_dim(s1, p2) == 1
    assert reps.ext1_dim(p2, s1) == 0
    # projectives never extend
    for v in range(2):
        p = reps.projective_rep(Q2, v)
        assert reps.ext1_dim(p, s1) == 0


def test_morphism_parts_ses():
    # 0 -> P2 -> P1 -> S1 -> 0
    f = reps.standard_projective_map(Q2, 1, 0)
    parts = reps.morphism_parts(f)
    assert parts.kernel.total_dim() == 0
    assert parts.image.dims == (0, 1)
    assert parts.cokernel.dims == (1, 0)


def test_direct_sum_and_covers():
    s1 = reps.simple_rep(Q2, 0)
    p1 = reps.projective_rep(Q2, 0)
    total, incls, projs = reps.direct_sum([s1, p1])
    assert total.dims == (2, 1)
    assert projs[0].compose(incls[0]).comps == reps.RepMor.identity(s1).comps
    assert projs[1].compose(incls[0]).is_zero()

    cover = reps.projective_cover(s1)
    assert cover.rep.dims == p1.dims
    assert reps.morphism_parts(cover.map).cokernel.total_dim() == 0


def test_radical_socle():
    from silt import linalg as la
    p1 = reps.projective_rep(Q2, 0)
    rad = reps.radical_cols(p1)
    # rad P1 is the simple at vertex 1
    assert la.span_dim(rad[0], p1.dims[0]) == 0
    assert la.span_dim(rad[1], p1.dims[1]) == 1
    soc = reps.socle_cols(p1)
    assert la.span_dim(soc[0], p1.dims[0]) == 0
    assert la.span_dim(soc[1], p1.dims[1]) == 1


def test_hom_basis_composes():
    p2 = reps.projective_rep(Q3, 2)
    p0 = reps.projective_rep(Q3, 0)
    basis = reps.hom_basis(p2, p0)
    assert len(basis) == 1
    g = basis[0]
    assert not g.is_zero()
    parts = reps.morphism_parts(g)
    assert parts.kernel.total_dim() == 0
