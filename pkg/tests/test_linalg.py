"""Exact linear algebra invariants, mostly property-based."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from silt import linalg as la
from silt.linalg import QM

fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=6)


def matrices(max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(
                st.lists(fractions, min_size=n, max_size=n),
                min_size=m, max_size=m).map(QM.from_rows)))


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_rref_idempotent_and_rank(a):
    r, rk, pivots = la.rref(a)
    r2, rk2, pivots2 = la.rref(r)
    assert r2 == r and pivots2 == pivots
    assert rk == rk2 == len(pivots)
    assert la.rank(a) == rk
    assert la.rank(a) == la.rank(a.t())


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_rank_nullity(a):
    ker = la.kernel_basis(a)
    assert la.rank(a) + len(ker) == a.n
    for v in ker:
        assert all(x == 0 for x in a.matvec(v))


@given(matrices(), st.lists(fractions, min_size=1, max_size=4))
@settings(max_examples=60, deadline=None)
def test_solve_consistency(a, v):
    v = v[: a.n] + [Fraction(0)] * max(0, a.n - len(v))
    b = a.matvec(v)
    x = la.solve(a, b)
    assert x is not None
    assert a.matvec(x) == list(b)


@st.composite
def composable_pairs(draw):
    m = draw(st.integers(1, 3))
    n = draw(st.integers(1, 3))
    k = draw(st.integers(1, 3))
    rows_a = draw(st.lists(st.lists(fractions, min_size=n, max_size=n),
                           min_size=m, max_size=m))
    rows_b = draw(st.lists(st.lists(fractions, min_size=k, max_size=k),
                           min_size=n, max_size=n))
    return QM.from_rows(rows_a), QM.from_rows(rows_b)


@given(composable_pairs())
@settings(max_examples=40, deadline=None)
def test_rank_product_bound(pair):
    a, b = pair
    p = a @ b
    assert la.rank(p) <= min(la.rank(a), la.rank(b))


def test_block_diag_and_stacks():
    a = QM.from_rows([[1, 2]])
    b = QM.from_rows([[3], [4]])
    bd = la.block_diag([a, b])
    assert bd.m == 3 and bd.n == 3
    assert list(bd.rows[0]) == [1, 2, 0]
    assert list(bd.rows[2]) == [0, 0, 4]
    assert la.hstack([a, QM.zeros(1, 1)]).n == 3
    assert la.vstack([b, QM.zeros(1, 1)]).m == 3


def test_quotient_and_span_helpers():
    sub = [[1, 0, 0]]
    q = la.quotient_basis(3, sub)
    assert len(q) == 2
    assert la.span_dim([[1, 0], [2, 0], [0, 3]], 2) == 2
    assert la.in_span([[1, 1]], [2, 2], 2)
    assert not la.in_span([[1, 1]], [1, 0], 2)
    coords = la.coords_in_basis([[1, 0], [1, 1]], [3, 2])
    assert coords == [Fraction(1), Fraction(2)]


def test_projection_onto_quotient():
    # quotient of Q^2 by span{(1,1)} with representative (1,0)
    p = la.projection_onto_quotient(2, [[1, 1]], [[1, 0]])
    assert p.m == 1 and p.n == 2
    assert p.matvec([1, 1]) == [0]
    assert p.matvec([1, 0]) != [0]
