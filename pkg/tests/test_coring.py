import pytest

from algebroid.exactla import QQ, Mat
from algebroid.algebra import upper_triangular, matrix_algebra
from algebroid.coring import mk_coring, CounitFails, NotBalanced, check_grouplike
from _corpus import get


def trivial(A, pi=None):
    n = A.dim
    acts_l = [A.lmul({b: QQ.one}) for b in range(n)]
    acts_r = [A.rmul({b: QQ.one}) for b in range(n)]
    g = Mat(QQ, n * n, n, [{a * n + k: c for k, c in A.unit.items()} for a in range(n)])
    return mk_coring(A, A, acts_l, acts_r, g, pi if pi is not None else Mat.identity(QQ, n))


@pytest.mark.parametrize("A", [upper_triangular(QQ, 2), matrix_algebra(QQ, 2)])
def test_trivial_coring(A):
    c = trivial(A)
    assert c.Q.dim == A.dim
    assert check_grouplike(c, A.unit)


def test_bad_counit():
    A = upper_triangular(QQ, 2)
    n = A.dim
    pi = Mat(QQ, n, n, [{a: QQ(2)} for a in range(n)])
    with pytest.raises((CounitFails, NotBalanced)):
        trivial(A, pi)


def test_bialgebroid_corings_check():
    for name in ("qc2", "lu-ut2-q"):
        h = get(name)
        h.left.coring.check()
        assert check_grouplike(h.left.coring, h.A.unit)
