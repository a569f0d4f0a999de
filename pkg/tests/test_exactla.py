import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from algebroid.exactla import (QQ, PrimeField, Mat, Subspace, LinAlgError, LinearSystem, Equations,
                               kernel, solve_affine, inverse, det, field_from_json)

FIELDS = [QQ, PrimeField(5), PrimeField(7)]


def small_mats(rows, cols):
    return st.lists(st.lists(st.integers(-4, 4), min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_field_json():
    assert field_from_json("Q") is QQ or field_from_json("Q") == QQ
    assert field_from_json("GF(5)") == PrimeField(5)
    with pytest.raises(LinAlgError):
        PrimeField(6)
    assert QQ.from_json("3/6") == mpq(1, 2)
    assert QQ.to_json(mpq(-2, 4)) == "-1/2"
    assert PrimeField(5)("1/2") == 3


def test_field_elements_distinct():
    for F in (QQ, PrimeField(11)):
        e = F.elements(9)
        assert len(set(e)) == 9


def test_inverse_of_singular_is_none():
    m = Mat.from_rows(QQ, [[1, 2], [2, 4]])
    assert inverse(m) is None
    assert det(m) == 0


def test_solve_affine_inconsistent():
    m = Mat.from_rows(QQ, [[1, 1], [1, 1]])
    assert solve_affine(m, [QQ(1), QQ(2)]) is None
    x, K = solve_affine(m, [QQ(2), QQ(2)])
    assert m.apply(x) == {0: 2, 1: 2}
    assert K.dim == 1


@settings(max_examples=60, deadline=None)
@given(small_mats(4, 6), st.sampled_from(FIELDS))
def test_kernel_is_annihilated(rows, F):
    m = Mat.from_rows(F, [[F(x) for x in r] for r in rows], 6)
    K = kernel(m)
    assert K.dim + m.rank() == 6
    for v in K.rows:
        assert m.apply(v) == {}


@settings(max_examples=60, deadline=None)
@given(small_mats(3, 3), small_mats(3, 3), st.sampled_from(FIELDS))
def test_det_multiplicative(a, b, F):
    A = Mat.from_rows(F, [[F(x) for x in r] for r in a], 3)
    B = Mat.from_rows(F, [[F(x) for x in r] for r in b], 3)
    assert det(A @ B) == F.mul(det(A), det(B))
    inv = inverse(A)
    assert (inv is None) == (det(A) == 0)
    if inv is not None:
        assert A @ inv == Mat.identity(F, 3)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=4),
       st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_subspace_membership_and_coords(vecs, target):
    F = QQ
    vs = [{i: F(x) for i, x in enumerate(v) if x} for v in vecs]
    S = Subspace.span(F, 5, vs)
    for v in vs:
        assert S.contains(v)
        assert S.combo(S.coords(v)) == v
    t = {i: F(x) for i, x in enumerate(target) if x}
    assert S.contains(t) == (Subspace.span(F, 5, vs + [t]).dim == S.dim)


def test_json_round_trip():
    F = QQ
    m = Mat.from_rows(F, [[F("1/3"), 0], [2, F(-1)]])
    assert Mat.from_json(F, m.to_json(), 2, 2) == m
    with pytest.raises(LinAlgError):
        Mat.from_json(F, [[1, 2, 3]], 2, 2)


def test_linear_system_and_equations():
    F = QQ
    # x0 + x1 = 1, x0 - x1 = 0
    sys_ = LinearSystem(F, 2, lambda x: {"a": F.add(x.get(0, 0), x.get(1, 0)),
                                          "b": F.sub(x.get(0, 0), x.get(1, 0))}, {"a": F.one})
    x, _ = sys_.solve()
    assert x == {0: mpq(1, 2), 1: mpq(1, 2)}
    assert sys_.satisfied_by(x)
    eq = Equations(F, 2)
    eq.add_form("a", {0: F.one, 1: F.one})
    eq.set_rhs("a", F.one)
    eq.add_form("b", {0: F.one, 1: F.neg(F.one)})
    x, _ = eq.solve()
    assert eq.residual(x) == {}
