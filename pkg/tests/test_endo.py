from fractions import Fraction

import pytest

from silt import linalg as la
from silt.endo import (
    EndoAlgebra,
    factoring_dim,
    g_module,
    g_morphism,
    global_dimension,
    module_hom_dim,
    proj_dim,
    quotient_dims,
    regular_projective,
    simple_module,
    syzygy,
    zero_module,
)
from silt.linalg import QM


def test_of_sum_regular_a2(a2):
    alg = EndoAlgebra.of_sum(a2, a2.parse_stalk_sum("P1,P2"))
    assert alg.dim == 3
    assert [p for p in alg.summands] == [("P1", 0), ("P2", 0)]
    # C[b][a] = dim Hom(T_a, T_b)
    assert alg.cartan() == [[1, 1], [0, 1]]
    rad = alg.radical_data()
    assert rad.arrow_counts == [[0, 0], [1, 0]]
    assert rad.rad_square_dim == 0
    assert rad.nilpotency_index == 2


def test_of_sum_shifted_summands(a2):
    alg = EndoAlgebra.of_sum(a2, a2.parse_stalk_sum("S1,P2[1]"))
    assert alg.dim == 3
    assert alg.cartan() == [[1, 0], [1, 1]]


def test_unit_and_associativity(a2):
    alg = EndoAlgebra.of_sum(a2, a2.parse_stalk_sum("P1,S1"))
    assert alg.dim == 3
    one = [Fraction(0)] * alg.dim
    for i in alg.e:
        one[i] = Fraction(1)
    for i in range(alg.dim):
        x = la._unit(alg.dim, i)
        assert alg.mult(one, x) == [Fraction(c) for c in x]
        assert alg.mult(x, one) == [Fraction(c) for c in x]
    for i in range(alg.dim):
        for j in range(alg.dim):
            for k in range(alg.dim):
                a = la._unit(alg.dim, i)
                b = la._unit(alg.dim, j)
                c = la._unit(alg.dim, k)
                assert alg.mult(alg.mult(a, b), c) == alg.mult(a, alg.mult(b, c))


def test_arrow_counts_basis_invariant(a3):
    # a change of basis in a hom block must not alter the quiver data
    alg = EndoAlgebra.of_sum(a3, a3.parse_stalk_sum("P1,P2,P3"))
    rad = alg.radical_data()
    target = None
    for (a, b), idxs in alg.blocks.items():
        if a != b and len(idxs) == 1:
            target = (a, b)
            break
    assert target is not None
    changed = alg.transformed({target: QM(1, 1, [[Fraction(3)]])})
    rad2 = changed.radical_data()
    assert rad2.arrow_counts == rad.arrow_counts
    assert rad2.nilpotency_index == rad.nilpotency_index
    assert changed.cartan() == alg.cartan()


def test_square_zero_fixture():
    alg = EndoAlgebra.square_zero_local()
    rad = alg.radical_data()
    assert rad.arrow_counts == [[1]]
    assert rad.nilpotency_index == 2
    # x^2 = 0, so the simple has infinite projective dimension
    assert global_dimension(alg, cutoff=12) is None


def test_g_module_frozen_dims(a2):
    alg = EndoAlgebra.of_sum(a2, a2.parse_stalk_sum("P1,S1"))
    assert g_module(alg, a2.stalk_complex("S1", 0)).dim == 2
    assert g_module(alg, a2.present(a2.parse_stalk_sum("P1,S1"))).dim == 3
    assert g_module(alg, a2.stalk_complex("P2", 1)).dim == 1


def test_module_hom_frozen(a2):
    alg = EndoAlgebra.of_sum(a2, a2.parse_stalk_sum("P1,S1"))
    s0 = simple_module(alg, 0)
    s1 = simple_module(alg, 1)
    p0 = regular_projective(alg, 0)
    p1 = regular_projective(alg, 1)
    for mod in (s0, s1, p0, p1):
        mod.validate()
    assert module_hom_dim(s0, s0) == 1
    assert module_hom_dim(s0, s1) == 0
    assert module_hom_dim(p0, p1) in (0, 1)
    assert module_hom_dim(p0, p0) >= 1
    assert module_hom_dim(zero_module(alg), s0) == 0


def test_projective_resolution_hereditary(a2):
    # End(A) of the regular module is the path algebra again: gl.dim 1
    alg = EndoAlgebra.of_sum(a2, a2.parse_stalk_sum("P1,P2"))
    assert global_dimension(alg, cutoff=8) == 1
    for a in range(2):
        s = simple_module(alg, a)
        pd = proj_dim(s, cutoff=8)
        assert pd is not None and pd <= 1
        if pd == 1:
            assert syzygy(s).dim > 0


def test_g_morphism_and_quotient(a2):
    # G of the approximation map P2 -> P1 has cokernel the simple at P1...
    alg = EndoAlgebra.of_sum(a2, a2.parse_stalk_sum("P1,S1"))
    src = a2.stalk_complex("P2", 0)
    tgt = a2.stalk_complex("P1", 0)
    hs = a2.hom(src, tgt)
    assert hs.dim == 1
    f = hs.from_coords([1])
    gm_src = g_module(alg, src)
    gm_tgt = g_module(alg, tgt)
    mat = g_morphism(alg, f, gm_src, gm_tgt)
    assert mat.m == gm_tgt.dim and mat.n == gm_src.dim
    q = quotient_dims(gm_tgt, mat.columns())
    assert sum(q) == gm_tgt.dim - la.rank(mat)


def test_factoring_dim(a2):
    t = a2.parse_stalk_sum("P1,S1")
    # Hom(P2, P1) is one dimensional and factors through S1[1]? no: through
    # nothing shifted; factoring through t[1] must be zero here
    src = a2.stalk_complex("P2", 0)
    tgt = a2.stalk_complex("P1", 0)
    assert factoring_dim(a2, src, tgt, t.shifted(1)) == 0
    # the identity of S1 factors through t[1]-free part trivially
    s = a2.stalk_complex("S1", 0)
    assert factoring_dim(a2, s, s, t.shifted(1)) in (0, 1)


def test_of_sum_degenerate_and_non_rigid(a2):
    empty = EndoAlgebra.of_sum(a2, a2.parse_stalk_sum(""))
    assert empty.dim == 0
    # endomorphism algebras exist for non-rigid sums too
    alg = EndoAlgebra.of_sum(a2, a2.parse_stalk_sum("S1,P2[1],P2"))
    assert alg.dim >= 3
